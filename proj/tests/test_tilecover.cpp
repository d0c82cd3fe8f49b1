#include <doctest.h>

#include <random>

#include "plycover/oracle.hpp"
#include "plycover/tilecover.hpp"
#include "plycover/verify.hpp"

using namespace plycover;

namespace {

Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(r, 2);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

constexpr double kSqrt3 = 1.7320508075688772;

double point_tile_clearance(const TileCover& cover, const Vec2& p) {
  if (const auto* s = std::get_if<SquareTile>(&cover.tile)) {
    const Vec2 local = p - cover.offset;
    const double ux = local.x() - std::floor(local.x() / s->side) * s->side;
    const double uy = local.y() - std::floor(local.y() / s->side) * s->side;
    return std::min(std::min(ux, s->side - ux), std::min(uy, s->side - uy));
  }
  const auto [poly, centers] = cover.hex_placements();
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& c : centers)
    best = std::max(best,
                    distance_to_convex_boundary(p - c, poly.vertices()));
  return best;
}

}  // namespace

TEST_SUITE("tilecover") {

TEST_CASE("square tile examples") {
  const auto cover = tiling_cover(mat({{0.5, 0.5}, {3.2, 0.5}}),
                                  SquareTile{1.0});
  REQUIRE(cover.size() == 2);
  CHECK(cover.offset == Vec2(0, 0));  // zero offset already clears margins
  CHECK(cover.cells[0] == Eigen::Vector2i(0, 0));
  CHECK(cover.cells[1] == Eigen::Vector2i(3, 0));

  // a point on the default cell boundary forces a nonzero offset
  const auto shifted = tiling_cover(mat({{1.0, 0.5}}), SquareTile{1.0});
  REQUIRE(shifted.size() == 1);
  CHECK(shifted.offset != Vec2(0, 0));
  CHECK(point_tile_clearance(shifted, Vec2(1.0, 0.5)) > shifted.margin);
}

TEST_CASE("hexagon tile example") {
  const auto cover = tiling_cover(mat({{0, 0}}), HexTile{1.0});
  REQUIRE(cover.size() == 1);
  const auto [poly, centers] = cover.hex_placements();
  REQUIRE(centers.size() == 1);
  CHECK(point_in_convex_polygon(Vec2(0, 0) - centers[0], poly));
  CHECK(distance_to_convex_boundary(Vec2(0, 0) - centers[0],
                                    poly.vertices()) > 0.0);
}

TEST_CASE("strict mode yields literal 1-ply covers") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Eigen::MatrixXd pts(n, 2);
    for (int i = 0; i < n; ++i) pts.row(i) << u(rng), u(rng);

    const auto sq = tiling_cover(pts, SquareTile{1.0});
    const PlyReport sq_report = verify_cover(pts, sq.to_cover());
    CHECK(sq_report.ply == 1);
    CHECK(sq_report.uncovered.empty());

    const auto hex = tiling_cover(pts, HexTile{0.8});
    const PlyReport hex_report = verify_cover(pts, hex.to_cover());
    CHECK(hex_report.ply == 1);
    CHECK(hex_report.uncovered.empty());

    // coverage margin: every point clears its (shrunk) tile boundary
    for (int i = 0; i < n; ++i) {
      const Vec2 p(pts(i, 0), pts(i, 1));
      CHECK(point_tile_clearance(sq, p) > sq.margin / 2.0);
    }
  }
}

TEST_CASE("non-strict tiles touch but keep membership 1") {
  const auto pts = mat({{0.4, 0.5}, {1.6, 0.5}});
  const auto cover = tiling_cover(pts, SquareTile{1.0}, /*strict=*/false);
  REQUIRE(cover.size() == 2);
  const CoverDocument doc = cover.to_cover();
  CHECK(membership(pts, doc) == 1);
  CHECK(exact_ply(doc).ply == 2);  // closed tiles share the lattice edge
}

TEST_CASE("placements are lattice translates of one tile") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  Eigen::MatrixXd pts(15, 2);
  for (int i = 0; i < 15; ++i) pts.row(i) << u(rng), u(rng);
  const auto cover = tiling_cover(pts, SquareTile{0.9});
  const auto boxes = cover.square_placements();
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Vec2 expect = cover.offset +
                        Vec2(cover.cells[i].x() * 0.9 + cover.margin / 2,
                             cover.cells[i].y() * 0.9 + cover.margin / 2);
    CHECK((Vec2(boxes[i].lower) - expect).norm() < 1e-15);
    CHECK(boxes[i].lengths[0] == doctest::Approx(0.9 - cover.margin));
  }
}

TEST_CASE("square tiling is a 4-approximation on small instances") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Eigen::MatrixXd pts(n, 2);
    for (int i = 0; i < n; ++i) pts.row(i) << u(rng), u(rng);
    const auto cover = tiling_cover(pts, SquareTile{1.0});
    const int opt = opt_1ply_box_cover_size(pts, Eigen::Vector2d(1, 1));
    CHECK(cover.size() <= 4 * static_cast<std::size_t>(opt));
  }
}

TEST_CASE("probe tiles intersect at most 4 cover tiles") {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  Eigen::MatrixXd pts(30, 2);
  for (int i = 0; i < 30; ++i) pts.row(i) << u(rng), u(rng);

  const auto sq = tiling_cover(pts, SquareTile{1.0});
  CHECK(tile_probe_max_intersections(sq, 10000, 123) <= 4);

  const auto hex = tiling_cover(pts, HexTile{0.9});
  CHECK(tile_probe_max_intersections(hex, 10000, 123) <= 4);
}

TEST_CASE("offset search failure is reported") {
  // a point sitting on each candidate offset's cell boundary defeats the
  // whole search sequence
  constexpr double phi = 1.6180339887498949;
  Eigen::MatrixXd pts(kOffsetAttempts, 2);
  for (int k = 0; k < kOffsetAttempts; ++k)
    pts.row(k) << std::fmod(k * phi, 1.0), 0.5;
  CHECK_THROWS_AS(tiling_cover(pts, SquareTile{1.0}), std::runtime_error);
}

TEST_CASE("hex lattice basis matches the flat-top geometry") {
  const auto cover = tiling_cover(mat({{0.1, 0.1}}), HexTile{1.0});
  // neighbors along the two basis vectors are sqrt(3) apart (touching hexes)
  const Vec2 a = tile_cell_center(cover, Eigen::Vector2i(1, 0)) -
                 tile_cell_center(cover, Eigen::Vector2i(0, 0));
  const Vec2 b = tile_cell_center(cover, Eigen::Vector2i(0, 1)) -
                 tile_cell_center(cover, Eigen::Vector2i(0, 0));
  CHECK(a.x() == doctest::Approx(1.5));
  CHECK(std::abs(a.y()) == doctest::Approx(kSqrt3 / 2.0));
  CHECK(b.norm() == doctest::Approx(kSqrt3));
}

}  // TEST_SUITE
