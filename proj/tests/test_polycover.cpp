#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "plycover/polycover.hpp"
#include "plycover/verify.hpp"

using namespace plycover;

namespace {

ConvexPolygon poly_of(std::initializer_list<std::pair<double, double>> verts) {
  Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(verts.size()));
  Eigen::Index i = 0;
  for (const auto& [x, y] : verts) m.col(i++) = Vec2(x, y);
  return ConvexPolygon::from_vertices(m);
}

ConvexPolygon regular_ngon(int k, double circumradius = 1.0) {
  Eigen::Matrix2Xd m(2, k);
  for (int i = 0; i < k; ++i) {
    const double a = 2.0 * std::numbers::pi * i / k;
    m.col(i) = Vec2(circumradius * std::cos(a), circumradius * std::sin(a));
  }
  return ConvexPolygon::from_vertices(m);
}

ConvexPolygon random_convex(std::mt19937_64& rng, int cloud = 14) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    std::vector<Vec2> pts(static_cast<std::size_t>(cloud));
    for (auto& p : pts) p = Vec2(u(rng), 0.2 + 0.8 * std::abs(u(rng)));
    for (auto& p : pts) p.y() *= (u(rng) > 0 ? 1.0 : -1.0);
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
      return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
    });
    std::vector<Vec2> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t base = hull.size();
      for (const Vec2& p : pts) {
        while (hull.size() >= base + 2 &&
               orient(hull[hull.size() - 2], hull.back(), p) <= 1e-12)
          hull.pop_back();
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() < 3) continue;
    Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(hull.size()));
    for (std::size_t i = 0; i < hull.size(); ++i)
      m.col(static_cast<Eigen::Index>(i)) = hull[i];
    return ConvexPolygon::from_vertices(m);
  }
}

void check_pair_invariants(const ConvexPolygon& C,
                           const ApproximatingPair& pair) {
  CHECK(pair.lambda <= 2.0 + 1e-9);
  // equal aspect ratio within 1e-9
  const double rx = pair.outer.half.x() / pair.inner.half.x();
  const double ry = pair.outer.half.y() / pair.inner.half.y();
  CHECK(std::abs(rx - ry) <= 1e-9 * std::max(rx, ry));
  CHECK(rx == doctest::Approx(pair.lambda).epsilon(1e-9));
  CHECK(pair.inner.angle == pair.outer.angle);
  // inner corners inside C; C's vertices inside outer
  const Eigen::Matrix2Xd inner_corners = pair.inner.corners();
  for (Eigen::Index i = 0; i < 4; ++i)
    CHECK(point_in_convex_polygon(inner_corners.col(i), C));
  const Eigen::Matrix2Xd outer_local =
      rotated(C.vertices(), -pair.outer.angle);
  const Vec2 center = rotated(pair.outer.center, -pair.outer.angle);
  for (Eigen::Index i = 0; i < outer_local.cols(); ++i) {
    const Vec2 d = outer_local.col(i) - center;
    CHECK(std::abs(d.x()) <= pair.outer.half.x() + 1e-9);
    CHECK(std::abs(d.y()) <= pair.outer.half.y() + 1e-9);
  }
}

}  // namespace

TEST_SUITE("polycover") {

TEST_CASE("a rectangle approximates itself") {
  const auto C = poly_of({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  const auto pair = approximating_pair(C);
  CHECK(pair.lambda == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pair.inner.half.x() == doctest::Approx(1.0));
  CHECK(pair.inner.half.y() == doctest::Approx(0.5));
  check_pair_invariants(C, pair);
}

TEST_CASE("right triangle: axis-aligned candidate reaches lambda = 2") {
  const auto C = poly_of({{0, 0}, {4, 0}, {0, 3}});
  // the bounding box [0,4]x[0,3] admits an inscribed homothet of scale
  // exactly 1/2 (corner constraint x/4 + y/3 <= 1)
  const auto cand = detail::pair_at_angle(C, 0.0);
  REQUIRE(cand.has_value());
  CHECK(1.0 / cand->sigma == doctest::Approx(2.0).epsilon(1e-6));

  const auto pair = approximating_pair(C);
  CHECK(pair.lambda <= 2.0 + 1e-9);
  check_pair_invariants(C, pair);
}

TEST_CASE("regular hexagon pair") {
  const auto C = regular_ngon(6);
  const auto pair = approximating_pair(C);
  CHECK(pair.lambda <= 2.0 + 1e-9);
  check_pair_invariants(C, pair);
}

TEST_CASE("pair invariants over random polygons and k-gons") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 30; ++t) {
    const ConvexPolygon C = random_convex(rng);
    const auto pair = approximating_pair(C);
    check_pair_invariants(C, pair);
    // deterministic
    const auto again = approximating_pair(C);
    CHECK(again.lambda == pair.lambda);
    CHECK(again.inner.center == pair.inner.center);
  }
  for (int k = 3; k <= 12; ++k)
    check_pair_invariants(regular_ngon(k), approximating_pair(regular_ngon(k)));
}

TEST_CASE("unit-square polygon reduces to the square cover") {
  const auto C = poly_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  Eigen::MatrixXd pts(20, 2);
  for (int i = 0; i < 20; ++i) pts.row(i) << u(rng), u(rng);

  const auto cover = polygon_cover(pts, C);
  const auto squares = square_cover(pts);
  REQUIRE(cover.size() == squares.size());
  for (std::size_t i = 0; i < cover.size(); ++i)
    CHECK((cover.translations[i] -
           Vec2(squares.placements[i][0], squares.placements[i][1]))
              .norm() < 1e-9);
  CHECK(exact_ply(cover.to_cover()).ply == 1);
}

TEST_CASE("single point is covered by one translate") {
  const auto C = poly_of({{0, 0}, {4, 0}, {0, 3}});
  const auto cover = polygon_cover(Eigen::MatrixXd{{0.1, 0.1}}, C);
  REQUIRE(cover.size() == 1);
  CHECK(point_in_convex_polygon(Vec2(0.1, 0.1) - cover.translations[0], C));
}

TEST_CASE("hexagon cover of 50 uniform points: valid, ply at most 4") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  Eigen::MatrixXd pts(50, 2);
  for (int i = 0; i < 50; ++i) pts.row(i) << u(rng), u(rng);

  const auto C = regular_ngon(6);
  const auto cover = polygon_cover(pts, C);
  const PlyReport report = verify_cover(pts, cover.to_cover());
  CHECK(report.uncovered.empty());
  CHECK(report.ply <= 4);
}

TEST_CASE("nesting, inner disjointness and per-strip outer bound") {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (const auto& C : {regular_ngon(7), random_convex(rng),
                        poly_of({{0, 0}, {4, 0}, {0, 3}})}) {
    Eigen::MatrixXd pts(40, 2);
    for (int i = 0; i < 40; ++i) pts.row(i) << u(rng), u(rng);
    const auto cover = polygon_cover(pts, C);

    const auto inner = cover.inner_rects_rotated();
    for (std::size_t i = 0; i < inner.size(); ++i)
      for (std::size_t j = i + 1; j < inner.size(); ++j)
        CHECK(boxes_disjoint(inner[i], inner[j]));

    // each translate contains its inner rectangle's corners, and its
    // vertices stay inside its outer rectangle
    const double angle = cover.pair.inner.angle;
    for (std::size_t i = 0; i < cover.size(); ++i) {
      const Vec2 t = cover.translations[i];
      OrientedRect r = cover.pair.inner;
      r.center += t;
      const Eigen::Matrix2Xd corners = r.corners();
      for (Eigen::Index c = 0; c < 4; ++c)
        CHECK(point_in_convex_polygon(Vec2(corners.col(c)) - t, C));

      OrientedRect R = cover.pair.outer;
      R.center += t;
      const Eigen::Matrix2Xd local =
          rotated(C.translated(t), -angle);
      const Vec2 rc = rotated(R.center, -angle);
      for (Eigen::Index c = 0; c < local.cols(); ++c) {
        CHECK(std::abs(local(0, c) - rc.x()) <= R.half.x() + 1e-9);
        CHECK(std::abs(local(1, c) - rc.y()) <= R.half.y() + 1e-9);
      }
    }

    // outer rectangles within one vertical strip keep ply <= 2
    REQUIRE(cover.inner_cover.tree.size() == 1);
    const auto outer = cover.outer_rects_rotated();
    for (const auto& wall : cover.inner_cover.tree.front().walls) {
      REQUIRE(wall.child.size() == 1);
      std::vector<HyperBox> strip;
      for (const auto& leaf : wall.child.front().walls)
        for (std::size_t id : leaf.placements) strip.push_back(outer[id]);
      CHECK(detail::ply_boxes_sweep(strip) <= 2);
    }
  }
}

TEST_CASE("cover is independent of point order") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  Eigen::MatrixXd pts(15, 2);
  for (int i = 0; i < 15; ++i) pts.row(i) << u(rng), u(rng);
  const auto C = regular_ngon(5);
  const auto base = polygon_cover(pts, C);

  Eigen::MatrixXd reversed = pts.colwise().reverse();
  const auto other = polygon_cover(reversed, C);
  REQUIRE(base.size() == other.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    CHECK((base.translations[i] - other.translations[i]).norm() == 0.0);
}

}  // TEST_SUITE
