#include "plycover/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace plycover {

double orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

ConvexPolygon ConvexPolygon::from_vertices(const Eigen::Matrix2Xd& vertices) {
  if (vertices.cols() < 3)
    throw std::invalid_argument("polygon needs at least 3 vertices");
  if (!vertices.allFinite())
    throw std::invalid_argument("polygon has non-finite vertex");

  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(vertices.cols()));
  for (Eigen::Index i = 0; i < vertices.cols(); ++i) {
    Vec2 p = vertices.col(i);
    if (v.empty() || (p - v.back()).norm() > kGeomTol) v.push_back(p);
  }
  while (v.size() > 1 && (v.front() - v.back()).norm() <= kGeomTol)
    v.pop_back();
  if (v.size() < 3) throw std::invalid_argument("polygon is degenerate");

  double area2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    area2 += p.x() * q.y() - q.x() * p.y();
  }
  if (std::abs(area2) <= kOrientTol)
    throw std::invalid_argument("polygon has zero area");
  if (area2 < 0.0) std::reverse(v.begin(), v.end());

  // Drop collinear middle vertices until every turn is strictly left.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2& a = v[(i + v.size() - 1) % v.size()];
      const Vec2& b = v[i];
      const Vec2& c = v[(i + 1) % v.size()];
      if (orient(a, b, c) <= kOrientTol) {
        if (orient(a, b, c) < -kOrientTol)
          throw std::invalid_argument("polygon is not convex");
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3) throw std::invalid_argument("polygon is degenerate");

  Eigen::Matrix2Xd out(2, static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out.col(static_cast<Eigen::Index>(i)) = v[i];
  return ConvexPolygon(std::move(out));
}

bool point_in_box(const Eigen::VectorXd& p, const HyperBox& b) {
  if (p.size() != b.dim())
    throw std::invalid_argument("point/box dimension mismatch");
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] < b.lower[i] || p[i] > b.lower[i] + b.lengths[i]) return false;
  }
  return true;
}

bool point_in_disk(const Vec2& p, const Disk& d) {
  return (p - d.center).squaredNorm() <= d.radius * d.radius;
}

bool point_in_convex_polygon(const Vec2& p, const Eigen::Matrix2Xd& verts) {
  const Eigen::Index m = verts.cols();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (orient(verts.col(i), verts.col((i + 1) % m), p) < -kOrientTol)
      return false;
  }
  return true;
}

bool point_in_convex_polygon(const Vec2& p, const ConvexPolygon& poly) {
  return point_in_convex_polygon(p, poly.vertices());
}

bool point_in_convex_polygon(const Vec2& p, const PlacedPolygon& poly) {
  return point_in_convex_polygon(p - poly.translation, poly.shape.vertices());
}

bool boxes_disjoint(const HyperBox& a, const HyperBox& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("box dimension mismatch");
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    if (a.lower[i] + a.lengths[i] < b.lower[i]) return true;
    if (b.lower[i] + b.lengths[i] < a.lower[i]) return true;
  }
  return false;
}

bool disks_intersect(const Disk& a, const Disk& b) {
  const double r = a.radius + b.radius;
  return (a.center - b.center).squaredNorm() <= r * r;
}

namespace {

void project(const Eigen::Matrix2Xd& pts, const Vec2& axis, double& lo,
             double& hi) {
  lo = hi = axis.dot(pts.col(0));
  for (Eigen::Index i = 1; i < pts.cols(); ++i) {
    const double v = axis.dot(pts.col(i));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
}

bool separated_by_edges(const Eigen::Matrix2Xd& a, const Eigen::Matrix2Xd& b) {
  const Eigen::Index m = a.cols();
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vec2 e = a.col((i + 1) % m) - a.col(i);
    const Vec2 n(-e.y(), e.x());
    double alo, ahi, blo, bhi;
    project(a, n, alo, ahi);
    project(b, n, blo, bhi);
    if (ahi < blo || bhi < alo) return true;
  }
  return false;
}

}  // namespace

bool convex_polygons_intersect(const Eigen::Matrix2Xd& a,
                               const Eigen::Matrix2Xd& b) {
  return !(separated_by_edges(a, b) || separated_by_edges(b, a));
}

void append_segment_intersections(const Vec2& p, const Vec2& q, const Vec2& r,
                                  const Vec2& s, std::vector<Vec2>& out) {
  const double d1 = orient(r, s, p);
  const double d2 = orient(r, s, q);
  const double d3 = orient(p, q, r);
  const double d4 = orient(p, q, s);
  const auto sgn = [](double v) {
    return v > kOrientTol ? 1 : (v < -kOrientTol ? -1 : 0);
  };
  const int s1 = sgn(d1), s2 = sgn(d2), s3 = sgn(d3), s4 = sgn(d4);

  if (s1 * s2 < 0 && s3 * s4 < 0) {
    const double t = d1 / (d1 - d2);  // intersection splits [p,q] at t
    out.push_back(p + t * (q - p));
    return;
  }

  // Degenerate contact: report every endpoint lying on the other segment.
  const auto on_segment = [&](const Vec2& a, const Vec2& b, const Vec2& x,
                              double cross) {
    if (std::abs(cross) > kOrientTol) return false;
    return x.x() >= std::min(a.x(), b.x()) - kGeomTol &&
           x.x() <= std::max(a.x(), b.x()) + kGeomTol &&
           x.y() >= std::min(a.y(), b.y()) - kGeomTol &&
           x.y() <= std::max(a.y(), b.y()) + kGeomTol;
  };
  if (on_segment(r, s, p, d1)) out.push_back(p);
  if (on_segment(r, s, q, d2)) out.push_back(q);
  if (on_segment(p, q, r, d3)) out.push_back(r);
  if (on_segment(p, q, s, d4)) out.push_back(s);
}

std::vector<Vec2> convex_polygons_intersection_points(
    const Eigen::Matrix2Xd& a, const Eigen::Matrix2Xd& b) {
  std::vector<Vec2> pts;
  const Eigen::Index ma = a.cols(), mb = b.cols();
  for (Eigen::Index i = 0; i < ma; ++i) {
    for (Eigen::Index j = 0; j < mb; ++j) {
      append_segment_intersections(a.col(i), a.col((i + 1) % ma), b.col(j),
                                   b.col((j + 1) % mb), pts);
    }
  }
  std::vector<Vec2> unique;
  for (const Vec2& p : pts) {
    bool seen = false;
    for (const Vec2& q : unique) {
      if ((p - q).norm() <= kGeomTol) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(p);
  }
  return unique;
}

std::vector<Vec2> circle_intersection_points(const Disk& a, const Disk& b) {
  std::vector<Vec2> out;
  const Vec2 d = b.center - a.center;
  const double dist = d.norm();
  if (dist <= kGeomTol) return out;  // concentric: no boundary crossing
  const double rsum = a.radius + b.radius;
  const double rdiff = std::abs(a.radius - b.radius);
  if (dist > rsum + kGeomTol || dist < rdiff - kGeomTol) return out;
  const double x = (dist * dist + a.radius * a.radius - b.radius * b.radius) /
                   (2.0 * dist);
  const double h2 = a.radius * a.radius - x * x;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const Vec2 u = d / dist;
  const Vec2 n(-u.y(), u.x());
  const Vec2 base = a.center + x * u;
  out.push_back(base + h * n);
  if (h > kGeomTol) out.push_back(base - h * n);
  return out;
}

std::vector<Vec2> clip_by_halfplane(const std::vector<Vec2>& poly, double a,
                                    double b, double c, double tol) {
  std::vector<Vec2> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    const double fp = a * p.x() + b * p.y() - c;
    const double fq = a * q.x() + b * q.y() - c;
    if (fp <= tol) out.push_back(p);
    if ((fp < -tol && fq > tol) || (fp > tol && fq < -tol)) {
      const double t = fp / (fp - fq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

Eigen::Matrix2Xd rotated(const Eigen::Matrix2Xd& pts, double angle) {
  return Eigen::Rotation2Dd(angle).toRotationMatrix() * pts;
}

Vec2 rotated(const Vec2& p, double angle) {
  return Eigen::Rotation2Dd(angle) * p;
}

std::pair<Eigen::Index, Eigen::Index> diameter_pair(
    const Eigen::Matrix2Xd& verts) {
  std::pair<Eigen::Index, Eigen::Index> best{0, 0};
  double best2 = -1.0;
  for (Eigen::Index i = 0; i < verts.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < verts.cols(); ++j) {
      const double d2 = (verts.col(i) - verts.col(j)).squaredNorm();
      if (d2 > best2) {
        best2 = d2;
        best = {i, j};
      }
    }
  }
  return best;
}

Eigen::MatrixXd dedup_points(const Eigen::MatrixXd& points) {
  const Eigen::Index n = points.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  const auto lex = [&](Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index c = 0; c < points.cols(); ++c) {
      if (points(a, c) != points(b, c)) return points(a, c) < points(b, c);
    }
    return a < b;  // duplicates ordered by original index
  };
  std::sort(order.begin(), order.end(), lex);

  std::vector<Eigen::Index> keep;
  keep.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && points.row(order[i]) == points.row(order[i - 1])) continue;
    keep.push_back(order[i]);
  }
  if (keep.size() == static_cast<std::size_t>(n)) return points;
  std::sort(keep.begin(), keep.end());  // keep first occurrences in order
  Eigen::MatrixXd out(static_cast<Eigen::Index>(keep.size()), points.cols());
  for (std::size_t i = 0; i < keep.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = points.row(keep[i]);
  return out;
}

double distance_to_convex_boundary(const Vec2& p,
                                   const Eigen::Matrix2Xd& verts) {
  const Eigen::Index m = verts.cols();
  double sd = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vec2 a = verts.col(i);
    const Vec2 b = verts.col((i + 1) % m);
    const Vec2 e = b - a;
    const double len = e.norm();
    if (len <= 0.0) continue;
    sd = std::min(sd, orient(a, b, p) / len);  // signed distance to edge line
  }
  return sd;
}

}  // namespace plycover
