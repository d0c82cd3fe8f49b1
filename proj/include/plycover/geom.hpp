#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

// Geometric primitives and predicates shared by every covering algorithm.
//
// All objects are closed sets: boundary points test as inside, touching
// objects intersect, and "disjoint" demands strictly positive separation.
// Inputs are assumed well-scaled (|coordinate| <= 1e6); the absolute
// tolerances below are calibrated for that range.

namespace plycover {

using Vec2 = Eigen::Vector2d;

/// Absolute tolerance for orientation signs (2-D cross products).
inline constexpr double kOrientTol = 1e-9;
/// Absolute tolerance for coordinate comparisons in sampling-style checks.
inline constexpr double kGeomTol = 1e-9;

/// Closed interval [left, left + length], length > 0.
struct Interval {
  double left = 0.0;
  double length = 1.0;

  double right() const { return left + length; }
  bool contains(double x) const { return left <= x && x <= left + length; }
};

/// Closed axis-aligned box prod_i [lower_i, lower_i + lengths_i], lengths > 0.
struct HyperBox {
  Eigen::VectorXd lower;
  Eigen::VectorXd lengths;

  Eigen::Index dim() const { return lower.size(); }
  Eigen::VectorXd upper() const { return lower + lengths; }
};

/// Closed disk. A unit disk has diameter 1, i.e. radius exactly 1/2.
struct Disk {
  Vec2 center = Vec2::Zero();
  double radius = 0.5;
};

/// Strictly convex polygon, vertices counter-clockwise, collinear vertices
/// removed on construction. Columns of the vertex matrix are the vertices.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// Validates and normalizes: enforces CCW order, drops consecutive
  /// collinear vertices, and requires m >= 3 afterwards. Throws
  /// std::invalid_argument on degenerate input.
  static ConvexPolygon from_vertices(const Eigen::Matrix2Xd& vertices);

  const Eigen::Matrix2Xd& vertices() const { return verts_; }
  Eigen::Index size() const { return verts_.cols(); }
  Vec2 vertex(Eigen::Index i) const { return verts_.col(i); }

  /// Translated vertex matrix.
  Eigen::Matrix2Xd translated(const Vec2& t) const {
    return verts_.colwise() + t;
  }

 private:
  explicit ConvexPolygon(Eigen::Matrix2Xd v) : verts_(std::move(v)) {}
  Eigen::Matrix2Xd verts_;
};

/// Translate of a convex polygon.
struct PlacedPolygon {
  ConvexPolygon shape;
  Vec2 translation = Vec2::Zero();

  Eigen::Matrix2Xd world() const { return shape.translated(translation); }
};

/// Signed area of triangle (a, b, c); > 0 for counter-clockwise.
double orient(const Vec2& a, const Vec2& b, const Vec2& c);

/// Closed containment; throws std::invalid_argument on dimension mismatch.
bool point_in_box(const Eigen::VectorXd& p, const HyperBox& b);

/// Closed containment: ||p - center|| <= radius, compared exactly.
bool point_in_disk(const Vec2& p, const Disk& d);

/// Closed containment: p left of or on every directed edge, orientation
/// signs read with tolerance kOrientTol. Vertex matrix must be CCW.
bool point_in_convex_polygon(const Vec2& p, const Eigen::Matrix2Xd& verts);
bool point_in_convex_polygon(const Vec2& p, const ConvexPolygon& poly);
bool point_in_convex_polygon(const Vec2& p, const PlacedPolygon& poly);

/// True iff the closed boxes share no point: some axis has a strict gap.
/// Touching boxes are NOT disjoint. Throws on dimension mismatch.
bool boxes_disjoint(const HyperBox& a, const HyperBox& b);

/// Closed intersection test; tangent disks intersect.
bool disks_intersect(const Disk& a, const Disk& b);

/// Closed intersection test for convex polygons (separating axis).
/// Touching polygons intersect.
bool convex_polygons_intersect(const Eigen::Matrix2Xd& a,
                               const Eigen::Matrix2Xd& b);

/// All boundary-boundary intersection points of two placed convex polygons,
/// deduplicated. Proper edge crossings and endpoint touches are reported;
/// for collinear overlapping edges the segment endpoints lying on the other
/// segment are reported.
std::vector<Vec2> convex_polygons_intersection_points(
    const Eigen::Matrix2Xd& a, const Eigen::Matrix2Xd& b);

/// Appends intersection points of closed segments [p,q] and [r,s] to `out`.
void append_segment_intersections(const Vec2& p, const Vec2& q, const Vec2& r,
                                  const Vec2& s, std::vector<Vec2>& out);

/// Intersection points of the two circles (0, 1 or 2 points; tangency yields
/// one). Used for arrangement depth candidates.
std::vector<Vec2> circle_intersection_points(const Disk& a, const Disk& b);

/// Clips a convex polygon (given as a CCW vertex loop) by the half-plane
/// a*x + b*y <= c. Returns the clipped loop; empty when nothing remains.
/// `tol` admits points violating the constraint by at most `tol`.
std::vector<Vec2> clip_by_halfplane(const std::vector<Vec2>& poly, double a,
                                    double b, double c, double tol = 0.0);

/// Rotates every column of `pts` by `angle` radians about the origin.
Eigen::Matrix2Xd rotated(const Eigen::Matrix2Xd& pts, double angle);
Vec2 rotated(const Vec2& p, double angle);

/// Indices of a diametral (maximum-distance) pair of vertices.
std::pair<Eigen::Index, Eigen::Index> diameter_pair(
    const Eigen::Matrix2Xd& verts);

/// Distance from an interior point to the polygon boundary (minimum over
/// edges); negative values mean p is outside by that margin.
double distance_to_convex_boundary(const Vec2& p, const Eigen::Matrix2Xd& verts);

/// Removes exactly-duplicate rows, keeping first occurrences in order.
/// Input points are deduplicated on ingestion everywhere: distinct input
/// points are assumed separated by a non-zero distance.
Eigen::MatrixXd dedup_points(const Eigen::MatrixXd& points);

}  // namespace plycover
