#include "plycover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace plycover {

namespace {

// Slack for evaluating containment at computed disk-arrangement candidates:
// absorbs the rounding of sqrt-derived intersection points. Far below both
// kGeomTol and any strict gap the constructions emit.
constexpr double kDiskEvalTol = 1e-12;

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// Uniform containment counting over a cover document.
struct CoverEval {
  enum Kind { kBoxes, kDisks, kPolygons } kind = kBoxes;
  std::vector<HyperBox> boxes;
  std::vector<Disk> disks;
  ConvexPolygon poly;
  std::vector<Vec2> translations;

  static CoverEval make(const CoverDocument& doc) {
    CoverEval e;
    if (shape_is_boxes(doc.shape)) {
      e.kind = kBoxes;
      e.boxes = cover_boxes(doc);
    } else if (std::holds_alternative<DiskShape>(doc.shape)) {
      e.kind = kDisks;
      e.disks = cover_disks(doc);
    } else {
      e.kind = kPolygons;
      std::tie(e.poly, e.translations) = cover_polygons(doc);
    }
    return e;
  }

  int count_containing(const Eigen::VectorXd& p) const {
    int count = 0;
    switch (kind) {
      case kBoxes:
        for (const auto& b : boxes)
          if (point_in_box(p, b)) ++count;
        break;
      case kDisks: {
        if (p.size() != 2)
          throw std::invalid_argument("disk cover expects 2-D points");
        const Vec2 q(p[0], p[1]);
        for (const auto& d : disks) {
          const double r = d.radius + kDiskEvalTol;
          if ((q - d.center).squaredNorm() <= r * r) ++count;
        }
        break;
      }
      case kPolygons: {
        if (p.size() != 2)
          throw std::invalid_argument("polygon cover expects 2-D points");
        const Vec2 q(p[0], p[1]);
        for (const auto& t : translations)
          if (point_in_convex_polygon(q - t, poly)) ++count;
        break;
      }
    }
    return count;
  }
};

// Lazy range-add segment tree tracking (max, leftmost attaining leaf).
class DepthSegTree {
 public:
  explicit DepthSegTree(int leaves) : n_(1) {
    while (n_ < leaves) n_ <<= 1;
    val_.assign(2 * n_, 0);
    arg_.assign(2 * n_, 0);
    lazy_.assign(2 * n_, 0);
    constexpr int kDead = std::numeric_limits<int>::min() / 2;
    for (int i = 0; i < n_; ++i) {
      const int leaf = n_ + i;
      val_[leaf] = i < leaves ? 0 : kDead;
      arg_[leaf] = i;
    }
    for (int i = n_ - 1; i >= 1; --i) pull(i);
  }

  void add(int l, int r, int v) { add(1, 0, n_ - 1, l, r, v); }

  int max() const { return val_[1]; }
  int argmax() const { return arg_[1]; }

 private:
  void pull(int node) {
    const int l = 2 * node, r = 2 * node + 1;
    if (val_[l] >= val_[r]) {
      val_[node] = val_[l];
      arg_[node] = arg_[l];
    } else {
      val_[node] = val_[r];
      arg_[node] = arg_[r];
    }
    val_[node] += lazy_[node];
  }

  void add(int node, int lo, int hi, int l, int r, int v) {
    if (r < lo || hi < l) return;
    if (l <= lo && hi <= r) {
      val_[node] += v;
      lazy_[node] += v;
      return;
    }
    const int mid = (lo + hi) / 2;
    add(2 * node, lo, mid, l, r, v);
    add(2 * node + 1, mid + 1, hi, l, r, v);
    pull(node);
  }

  int n_;
  std::vector<int> val_, arg_, lazy_;
};

std::int64_t grid_key(int ix, int iy) {
  return (static_cast<std::int64_t>(ix) << 32) ^
         static_cast<std::int64_t>(static_cast<std::uint32_t>(iy));
}

}  // namespace

namespace detail {

int ply_boxes_grid(const std::vector<HyperBox>& boxes,
                   Eigen::VectorXd* witness) {
  if (boxes.empty()) return 0;
  const Eigen::Index d = boxes.front().dim();
  for (const auto& b : boxes) {
    if (b.dim() != d) throw std::invalid_argument("mixed box dimensions");
  }

  std::vector<std::vector<double>> cand(static_cast<std::size_t>(d));
  for (Eigen::Index a = 0; a < d; ++a) {
    auto& c = cand[static_cast<std::size_t>(a)];
    for (const auto& b : boxes) {
      c.push_back(b.lower[a]);
      c.push_back(b.lower[a] + b.lengths[a]);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }

  Eigen::VectorXd p(d);
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  int best = 0;
  bool done = false;
  while (!done) {
    for (Eigen::Index a = 0; a < d; ++a)
      p[a] = cand[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]];
    int count = 0;
    for (const auto& b : boxes)
      if (point_in_box(p, b)) ++count;
    if (count > best) {
      best = count;
      if (witness) *witness = p;
    }
    // odometer, last axis fastest: ascending visits are lexicographic
    Eigen::Index a = d - 1;
    while (true) {
      if (++idx[static_cast<std::size_t>(a)] <
          cand[static_cast<std::size_t>(a)].size())
        break;
      idx[static_cast<std::size_t>(a)] = 0;
      if (a == 0) {
        done = true;
        break;
      }
      --a;
    }
  }
  return best;
}

int ply_boxes_sweep(const std::vector<HyperBox>& boxes, Vec2* witness) {
  if (boxes.empty()) return 0;
  for (const auto& b : boxes) {
    if (b.dim() != 2) throw std::invalid_argument("sweep requires 2-D boxes");
  }
  const std::size_t k = boxes.size();

  std::vector<double> ys;
  ys.reserve(2 * k);
  for (const auto& b : boxes) {
    ys.push_back(b.lower[1]);
    ys.push_back(b.lower[1] + b.lengths[1]);
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const auto yindex = [&](double y) {
    return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y) -
                            ys.begin());
  };

  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boxes[a].lower[0] < boxes[b].lower[0];
  });

  std::vector<double> xs;
  xs.reserve(k);
  for (const auto& b : boxes) xs.push_back(b.lower[0]);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  using Removal = std::pair<double, std::size_t>;  // (upper_x, box)
  std::priority_queue<Removal, std::vector<Removal>, std::greater<>> pending;
  DepthSegTree tree(static_cast<int>(ys.size()));

  std::size_t next = 0;
  int best = 0;
  for (double x : xs) {
    while (next < k && boxes[order[next]].lower[0] <= x) {
      const auto& b = boxes[order[next]];
      tree.add(yindex(b.lower[1]), yindex(b.lower[1] + b.lengths[1]), +1);
      pending.emplace(b.lower[0] + b.lengths[0], order[next]);
      ++next;
    }
    while (!pending.empty() && pending.top().first < x) {
      const auto& b = boxes[pending.top().second];
      tree.add(yindex(b.lower[1]), yindex(b.lower[1] + b.lengths[1]), -1);
      pending.pop();
    }
    if (tree.max() > best) {
      best = tree.max();
      if (witness) *witness = Vec2(x, ys[static_cast<std::size_t>(tree.argmax())]);
    }
  }
  return best;
}

int ply_disks(const std::vector<Disk>& disks, Vec2* witness) {
  if (disks.empty()) return 0;
  double rmax = 0.0;
  for (const auto& d : disks) rmax = std::max(rmax, d.radius);
  const double cell = rmax + kGeomTol;

  std::unordered_map<std::int64_t, std::vector<std::size_t>> grid;
  const auto cell_of = [&](const Vec2& p) {
    return std::pair<int, int>(static_cast<int>(std::floor(p.x() / cell)),
                               static_cast<int>(std::floor(p.y() / cell)));
  };
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const auto [ix, iy] = cell_of(disks[i].center);
    grid[grid_key(ix, iy)].push_back(i);
  }
  const auto nearby = [&](const Vec2& p, int ring, auto&& fn) {
    const auto [ix, iy] = cell_of(p);
    for (int dx = -ring; dx <= ring; ++dx) {
      for (int dy = -ring; dy <= ring; ++dy) {
        const auto it = grid.find(grid_key(ix + dx, iy + dy));
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) fn(j);
      }
    }
  };

  std::vector<Vec2> cands;
  for (const auto& d : disks) cands.push_back(d.center);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    nearby(disks[i].center, 2, [&](std::size_t j) {
      if (j <= i) return;
      for (const Vec2& p : circle_intersection_points(disks[i], disks[j]))
        cands.push_back(p);
    });
  }
  std::sort(cands.begin(), cands.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
  });

  int best = 0;
  for (const Vec2& p : cands) {
    int count = 0;
    nearby(p, 1, [&](std::size_t j) {
      const double r = disks[j].radius + kDiskEvalTol;
      if ((p - disks[j].center).squaredNorm() <= r * r) ++count;
    });
    if (count > best) {
      best = count;
      if (witness) *witness = p;
    }
  }
  return best;
}

int ply_polygons(const ConvexPolygon& shape,
                 const std::vector<Vec2>& translations, Vec2* witness) {
  if (translations.empty()) return 0;
  const std::size_t k = translations.size();
  std::vector<Eigen::Matrix2Xd> world(k);
  for (std::size_t i = 0; i < k; ++i) world[i] = shape.translated(translations[i]);

  std::vector<Vec2> lo(k), hi(k);
  for (std::size_t i = 0; i < k; ++i) {
    lo[i] = world[i].rowwise().minCoeff();
    hi[i] = world[i].rowwise().maxCoeff();
  }

  std::vector<Vec2> cands;
  for (std::size_t i = 0; i < k; ++i) {
    for (Eigen::Index c = 0; c < world[i].cols(); ++c)
      cands.push_back(world[i].col(c));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (lo[j].x() > hi[i].x() + kGeomTol || lo[i].x() > hi[j].x() + kGeomTol ||
          lo[j].y() > hi[i].y() + kGeomTol || lo[i].y() > hi[j].y() + kGeomTol)
        continue;
      for (const Vec2& p :
           convex_polygons_intersection_points(world[i], world[j]))
        cands.push_back(p);
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
  });

  int best = 0;
  for (const Vec2& p : cands) {
    int count = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (point_in_convex_polygon(p - translations[i], shape)) ++count;
    if (count > best) {
      best = count;
      if (witness) *witness = p;
    }
  }
  return best;
}

}  // namespace detail

int membership(const Eigen::MatrixXd& points, const CoverDocument& cover,
               Eigen::VectorXd* argmax) {
  const CoverEval eval = CoverEval::make(cover);
  int best = 0;
  Eigen::VectorXd best_point;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const Eigen::VectorXd p = points.row(i).transpose();
    const int count = eval.count_containing(p);
    if (count > best || (count == best && count > 0 &&
                         (best_point.size() == 0 || lex_less(p, best_point)))) {
      best = count;
      best_point = p;
    }
  }
  if (argmax) *argmax = best_point;
  return best;
}

PlyReport exact_ply(const CoverDocument& cover) {
  PlyReport report;
  if (cover.placements.empty()) return report;
  if (shape_is_boxes(cover.shape)) {
    const auto boxes = cover_boxes(cover);
    if (boxes.front().dim() == 2) {
      Vec2 w;
      report.ply = detail::ply_boxes_sweep(boxes, &w);
      report.witness = w;
    } else {
      Eigen::VectorXd w;
      report.ply = detail::ply_boxes_grid(boxes, &w);
      report.witness = w;
    }
  } else if (std::holds_alternative<DiskShape>(cover.shape)) {
    Vec2 w;
    report.ply = detail::ply_disks(cover_disks(cover), &w);
    report.witness = w;
  } else {
    auto [poly, translations] = cover_polygons(cover);
    Vec2 w;
    report.ply = detail::ply_polygons(poly, translations, &w);
    report.witness = w;
  }
  return report;
}

std::vector<Eigen::VectorXd> check_coverage(const Eigen::MatrixXd& points,
                                            const CoverDocument& cover) {
  std::vector<Eigen::VectorXd> uncovered;
  if (points.rows() == 0) return uncovered;
  const CoverEval eval = CoverEval::make(cover);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const Eigen::VectorXd p = points.row(i).transpose();
    if (eval.count_containing(p) == 0) uncovered.push_back(p);
  }
  return uncovered;
}

PlyReport verify_cover(const Eigen::MatrixXd& points,
                       const CoverDocument& cover) {
  PlyReport report = exact_ply(cover);
  report.membership = membership(points, cover);
  report.uncovered = check_coverage(points, cover);
  return report;
}

}  // namespace plycover
