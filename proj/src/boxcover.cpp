#include "plycover/boxcover.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace plycover {

namespace {

// Separation order: d, d-1, ..., 3, then x, then y (axes 0-indexed).
std::vector<int> axis_order(Eigen::Index dim) {
  std::vector<int> order;
  for (Eigen::Index a = dim - 1; a >= 2; --a) order.push_back(static_cast<int>(a));
  if (dim >= 2) {
    order.push_back(0);
    order.push_back(1);
  } else {
    order.push_back(0);
  }
  return order;
}

struct Builder {
  const Eigen::MatrixXd& points;
  const Eigen::VectorXd& lengths;
  const std::vector<int>& order;
  BoxCover& out;

  StripLevel build(const std::vector<Eigen::Index>& ids, std::size_t level,
                   Eigen::VectorXd& corner) {
    const int axis = order[level];
    std::vector<double> coords;
    coords.reserve(ids.size());
    for (Eigen::Index id : ids) coords.push_back(points(id, axis));

    StripLevel lvl;
    lvl.axis = axis;
    lvl.cover = separate(std::move(coords), lengths[axis]);

    std::vector<std::vector<Eigen::Index>> buckets(lvl.cover.size());
    for (Eigen::Index id : ids) {
      const auto slot = lvl.cover.find(points(id, axis));
      assert(slot.has_value());
      buckets[*slot].push_back(id);
    }

    lvl.walls.reserve(lvl.cover.size());
    for (std::size_t w = 0; w < lvl.cover.size(); ++w) {
      assert(!buckets[w].empty());  // intervals are anchored at points
      StripWall wall;
      wall.range = lvl.cover.interval(w);
      corner[axis] = lvl.cover.lefts[w];
      if (level + 1 == order.size()) {
        wall.placements.push_back(out.placements.size());
        out.placements.push_back(corner);
        wall.points = std::move(buckets[w]);
      } else {
        wall.child.push_back(build(buckets[w], level + 1, corner));
        wall.points = std::move(buckets[w]);
      }
      lvl.walls.push_back(std::move(wall));
    }
    return lvl;
  }
};

}  // namespace

std::vector<HyperBox> BoxCover::boxes() const {
  std::vector<HyperBox> out;
  out.reserve(placements.size());
  for (const auto& p : placements) out.push_back(HyperBox{p, lengths});
  return out;
}

CoverDocument BoxCover::to_cover(const std::string& algorithm,
                                 std::uint64_t seed) const {
  CoverDocument doc;
  if (dim() == 2 && lengths[0] == 1.0 && lengths[1] == 1.0) {
    doc.shape = SquareShape{};
  } else if (dim() == 2) {
    doc.shape = RectShape{lengths[0], lengths[1]};
  } else {
    doc.shape = HyperBoxShape{lengths};
  }
  doc.placements = placements;
  doc.provenance = Provenance{algorithm, seed, "0.1.0"};
  return doc;
}

BoxCover hyperbox_cover(const Eigen::MatrixXd& points,
                        const Eigen::VectorXd& lengths) {
  const Eigen::Index d = lengths.size();
  if (d < 1) throw std::invalid_argument("hyperbox_cover: dimension must be >= 1");
  if (points.rows() > 0 && points.cols() != d)
    throw std::invalid_argument("hyperbox_cover: point/lengths dimension mismatch");
  for (Eigen::Index a = 0; a < d; ++a) {
    if (!(lengths[a] > 0.0))
      throw std::invalid_argument("hyperbox_cover: lengths must be positive");
  }

  BoxCover cover;
  cover.lengths = lengths;
  if (points.rows() == 0) return cover;
  if (!points.allFinite())
    throw std::invalid_argument("hyperbox_cover: non-finite coordinate");

  std::vector<Eigen::Index> ids(static_cast<std::size_t>(points.rows()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    ids[i] = static_cast<Eigen::Index>(i);

  const std::vector<int> order = axis_order(d);
  Builder builder{points, lengths, order, cover};
  Eigen::VectorXd corner = Eigen::VectorXd::Zero(d);
  cover.tree.push_back(builder.build(ids, 0, corner));
  return cover;
}

BoxCover rect_cover(const Eigen::MatrixXd& points, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("rect_cover: sides must be positive");
  return hyperbox_cover(points, Eigen::Vector2d(a, b));
}

BoxCover square_cover(const Eigen::MatrixXd& points) {
  return rect_cover(points, 1.0, 1.0);
}

}  // namespace plycover
