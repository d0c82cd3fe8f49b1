#include "plycover/polycover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace plycover {

namespace {

constexpr double kLambdaTol = 1e-9;
constexpr int kBisectionIters = 60;

// Edge half-planes a*x + b*y <= c of a CCW polygon.
struct HalfPlanes {
  std::vector<double> a, b, c;
  explicit HalfPlanes(const Eigen::Matrix2Xd& verts) {
    const Eigen::Index m = verts.cols();
    for (Eigen::Index i = 0; i < m; ++i) {
      const Vec2 p = verts.col(i), q = verts.col((i + 1) % m);
      // left of directed edge: (q.y-p.y) x - (q.x-p.x) y <= same at p
      a.push_back(q.y() - p.y());
      b.push_back(p.x() - q.x());
      c.push_back(a.back() * p.x() + b.back() * p.y());
    }
  }
};

// Centers c such that all four corners c +- sigma*half lie in the polygon:
// the intersection of four corner-shifted copies, clipped incrementally.
std::optional<Vec2> feasible_center(const std::vector<Vec2>& poly_loop,
                                    const HalfPlanes& hp, const Vec2& half,
                                    double sigma, double tol) {
  std::vector<Vec2> region = poly_loop;
  for (int sx = -1; sx <= 1; sx += 2) {
    for (int sy = -1; sy <= 1; sy += 2) {
      const Vec2 corner(sigma * half.x() * sx, sigma * half.y() * sy);
      for (std::size_t e = 0; e < hp.a.size(); ++e) {
        const double shift = hp.a[e] * corner.x() + hp.b[e] * corner.y();
        region = clip_by_halfplane(region, hp.a[e], hp.b[e], hp.c[e] - shift,
                                   tol);
        if (region.empty()) return std::nullopt;
      }
    }
  }
  Vec2 centroid = Vec2::Zero();
  for (const Vec2& p : region) centroid += p;
  return centroid / static_cast<double>(region.size());
}

}  // namespace

namespace detail {

std::optional<PairCandidate> pair_at_angle(const ConvexPolygon& C,
                                           double angle) {
  const Eigen::Matrix2Xd verts = rotated(C.vertices(), -angle);
  const Vec2 lo = verts.rowwise().minCoeff();
  const Vec2 hi = verts.rowwise().maxCoeff();
  const Vec2 half = (hi - lo) / 2.0;
  if (!(half.x() > 0.0) || !(half.y() > 0.0)) return std::nullopt;

  std::vector<Vec2> loop;
  for (Eigen::Index i = 0; i < verts.cols(); ++i) loop.push_back(verts.col(i));
  const HalfPlanes hp(verts);
  const double tol = 1e-12 * (1.0 + verts.cwiseAbs().maxCoeff());

  double feas = 0.0;
  Vec2 feas_center = (lo + hi) / 2.0;
  double lo_s = 0.0, hi_s = 1.0;
  for (int it = 0; it < kBisectionIters; ++it) {
    const double mid = 0.5 * (lo_s + hi_s);
    if (const auto c = feasible_center(loop, hp, half, mid, tol)) {
      lo_s = mid;
      feas = mid;
      feas_center = *c;
    } else {
      hi_s = mid;
    }
  }
  if (!(feas > 0.0)) return std::nullopt;

  PairCandidate cand;
  cand.angle = angle;
  cand.sigma = feas;
  cand.inner_center_rot = feas_center;
  cand.outer_center_rot = (lo + hi) / 2.0;
  cand.outer_half = half;
  return cand;
}

}  // namespace detail

Eigen::Matrix2Xd OrientedRect::corners() const {
  Eigen::Matrix2Xd local(2, 4);
  local.col(0) = Vec2(-half.x(), -half.y());
  local.col(1) = Vec2(half.x(), -half.y());
  local.col(2) = Vec2(half.x(), half.y());
  local.col(3) = Vec2(-half.x(), half.y());
  return (rotated(local, angle)).colwise() + center;
}

ApproximatingPair approximating_pair(const ConvexPolygon& C) {
  std::vector<double> angles;
  const auto [di, dj] = diameter_pair(C.vertices());
  const Vec2 dvec = C.vertex(dj) - C.vertex(di);
  angles.push_back(std::atan2(dvec.y(), dvec.x()));
  const Eigen::Index m = C.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vec2 e = C.vertex((i + 1) % m) - C.vertex(i);
    angles.push_back(std::atan2(e.y(), e.x()));
  }

  std::optional<detail::PairCandidate> best;
  std::ostringstream diag;
  for (double angle : angles) {
    const auto cand = detail::pair_at_angle(C, angle);
    if (!cand) continue;
    diag << " angle=" << angle << " lambda=" << 1.0 / cand->sigma;
    if (!best || cand->sigma > best->sigma) best = cand;
  }
  if (!best)
    throw std::runtime_error("approximating_pair: no feasible candidate");
  const double lambda = 1.0 / best->sigma;
  if (lambda > 2.0 + kLambdaTol) {
    throw std::runtime_error(
        "approximating_pair: ratio bound exceeded (best lambda = " +
        std::to_string(lambda) + "); candidates:" + diag.str());
  }

  ApproximatingPair pair;
  pair.lambda = lambda;
  pair.inner.angle = pair.outer.angle = best->angle;
  pair.inner.half = best->sigma * best->outer_half;
  pair.outer.half = best->outer_half;
  const Eigen::Matrix2d rot =
      Eigen::Rotation2Dd(best->angle).toRotationMatrix();
  pair.inner.center = rot * best->inner_center_rot;
  pair.outer.center = rot * best->outer_center_rot;
  pair.inner_offset = pair.inner.center - Vec2(C.vertex(0));
  return pair;
}

std::vector<HyperBox> PolygonCover::outer_rects_rotated() const {
  const Eigen::Matrix2d unrot =
      Eigen::Rotation2Dd(-pair.outer.angle).toRotationMatrix();
  const Vec2 center_rot = unrot * pair.outer.center;
  std::vector<HyperBox> out;
  out.reserve(translations.size());
  for (const Vec2& t : translations) {
    const Vec2 lower = center_rot + unrot * t - pair.outer.half;
    out.push_back(HyperBox{Eigen::Vector2d(lower),
                           Eigen::Vector2d(2.0 * pair.outer.half)});
  }
  return out;
}

std::vector<HyperBox> PolygonCover::inner_rects_rotated() const {
  return inner_cover.boxes();
}

CoverDocument PolygonCover::to_cover(std::uint64_t seed) const {
  CoverDocument doc;
  doc.shape = PolygonShape{polygon};
  doc.placements.reserve(translations.size());
  for (const Vec2& t : translations)
    doc.placements.push_back(Eigen::Vector2d(t));
  doc.provenance = Provenance{"polygon_cover", seed, "0.1.0"};
  return doc;
}

PolygonCover polygon_cover(const Eigen::MatrixXd& points,
                           const ConvexPolygon& C) {
  if (points.rows() > 0 && points.cols() != 2)
    throw std::invalid_argument("polygon_cover: expects 2-D points");

  PolygonCover cover;
  cover.polygon = C;
  cover.pair = approximating_pair(C);
  const double angle = cover.pair.inner.angle;
  const Eigen::Matrix2d unrot =
      Eigen::Rotation2Dd(-angle).toRotationMatrix();
  const Eigen::Matrix2d rot = Eigen::Rotation2Dd(angle).toRotationMatrix();

  Eigen::MatrixXd rotated_points(points.rows(), 2);
  for (Eigen::Index i = 0; i < points.rows(); ++i)
    rotated_points.row(i) =
        (unrot * Vec2(points(i, 0), points(i, 1))).transpose();

  cover.inner_cover =
      rect_cover(rotated_points, 2.0 * cover.pair.inner.half.x(),
                 2.0 * cover.pair.inner.half.y());

  // The translate must carry C's own inner rectangle onto the grid
  // rectangle: t_rot = grid lower corner - inner rectangle's lower corner.
  const Vec2 inner_lower_rot =
      unrot * cover.pair.inner.center - cover.pair.inner.half;
  cover.translations.reserve(cover.inner_cover.placements.size());
  for (const auto& g : cover.inner_cover.placements) {
    const Vec2 t_rot = Vec2(g[0], g[1]) - inner_lower_rot;
    cover.translations.push_back(rot * t_rot);
  }
  return cover;
}

}  // namespace plycover
