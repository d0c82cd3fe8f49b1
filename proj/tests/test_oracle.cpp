#include <doctest.h>

#include <random>

#include "plycover/geom.hpp"
#include "plycover/oracle.hpp"

using namespace plycover;

namespace {

Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Eigen::MatrixXd m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

const Eigen::Vector2d kUnitSquare(1.0, 1.0);

// The witness must be a valid 1-ply cover of its instance.
void check_witness(const Eigen::MatrixXd& pts, const Eigen::VectorXd& lengths,
                   const BoxOracleResult& result) {
  REQUIRE(result.lowers.size() == static_cast<std::size_t>(result.opt));
  std::vector<HyperBox> boxes;
  for (const auto& lower : result.lowers)
    boxes.push_back(HyperBox{lower, lengths});
  for (std::size_t g = 0; g < result.groups.size(); ++g) {
    for (Eigen::Index id : result.groups[g])
      CHECK(point_in_box(pts.row(id).transpose(), boxes[g]));
  }
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      CHECK(boxes_disjoint(boxes[i], boxes[j]));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("opt_interval_cover_size examples") {
  CHECK(opt_interval_cover_size({}, 1.0) == 0);
  CHECK(opt_interval_cover_size({0.0, 0.5, 1.2}, 1.0) == 2);
  CHECK(opt_interval_cover_size({0.0, 1.0}, 1.0) == 1);  // closed endpoint
  CHECK_THROWS_AS(opt_interval_cover_size(
                      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("opt_1ply_box_cover examples") {
  CHECK(opt_1ply_box_cover_size(mat({{0, 0}, {0.5, 0.5}}), kUnitSquare) == 1);
  CHECK(opt_1ply_box_cover_size(mat({{0, 0}, {1.8, 0}}), kUnitSquare) == 2);
  CHECK(opt_1ply_box_cover_size(mat({{0, 0}, {0.9, 0.9}, {1.8, 0}}),
                                kUnitSquare) == 2);

  const auto result =
      opt_1ply_box_cover(mat({{0, 0}, {0.9, 0.9}, {1.8, 0}}), kUnitSquare);
  CHECK(result.opt == 2);
  check_witness(mat({{0, 0}, {0.9, 0.9}, {1.8, 0}}), kUnitSquare, result);
}

TEST_CASE("strict separation semantics") {
  // Forced separation strictly above 1 is feasible with two squares...
  const Eigen::MatrixXd apart = mat({{0, 0}, {1.0 + 2e-9, 0}});
  const auto r2 = opt_1ply_box_cover(apart, kUnitSquare);
  CHECK(r2.opt == 2);
  check_witness(apart, kUnitSquare, r2);
  // ...whereas points exactly 1 apart share one closed unit square.
  CHECK(opt_1ply_box_cover_size(mat({{0, 0}, {1.0, 0}}), kUnitSquare) == 1);
}

TEST_CASE("difference constraints with strict edges") {
  // x1 = 0, x2 = 1 pinned; x2 - x1 > 1 has a zero-weight strict cycle.
  detail::DiffConstraints g(3);
  g.add(1, 0, 0.0, false);   // x1 <= 0
  g.add(0, 1, 0.0, false);   // x1 >= 0
  g.add(2, 0, 1.0, false);   // x2 <= 1
  g.add(0, 2, -1.0, false);  // x2 >= 1
  g.add(1, 2, -1.0, true);   // x1 - x2 < -1, i.e. x2 - x1 > 1
  CHECK_FALSE(g.feasible());
  g.pop();
  CHECK(g.feasible());

  detail::DiffConstraints h(3);
  h.add(1, 0, 0.0, false);
  h.add(0, 1, 0.0, false);
  h.add(2, 0, 1.0 + 2e-9, false);
  h.add(0, 2, -(1.0 + 2e-9), false);
  h.add(1, 2, -1.0, true);
  std::vector<double> w;
  CHECK(h.feasible(&w));
  CHECK(w[2] - w[1] > 1.0);
}

TEST_CASE("refusals") {
  Eigen::MatrixXd big(8, 2);
  big.setRandom();
  CHECK_THROWS_AS(opt_1ply_box_cover_size(big, kUnitSquare),
                  std::invalid_argument);
  CHECK(opt_1ply_box_cover_size(big, kUnitSquare, 8) >= 1);  // override
  Eigen::MatrixXd d4(2, 4);
  d4.setRandom();
  CHECK_THROWS_AS(opt_1ply_box_cover_size(d4, Eigen::VectorXd::Ones(4)),
                  std::invalid_argument);
}

TEST_CASE("far independent set lower bound") {
  CHECK(far_independent_set_lb(mat({{0, 0}, {1.8, 0}}), Metric::Linf, 1.0) ==
        2);
  CHECK(far_independent_set_lb(mat({{0, 0}, {0.5, 0}}), Metric::Linf, 1.0) ==
        1);
  // 5 points pairwise L2 distance > 1: empty far graph
  const Eigen::MatrixXd ring =
      mat({{0, 0}, {2, 0}, {4, 0}, {0, 2}, {4, 2}});
  CHECK(far_independent_set_lb(ring, Metric::L2, 1.0) == 5);
  // exactly at the threshold counts as sharable (closed)
  CHECK(far_independent_set_lb(mat({{0, 0}, {1.0, 0}}), Metric::L2, 1.0) == 1);
}

TEST_CASE("d=1 oracle agrees with the interval oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Eigen::MatrixXd pts(n, 1);
    std::vector<double> coords;
    for (int i = 0; i < n; ++i) {
      pts(i, 0) = u(rng);
      coords.push_back(pts(i, 0));
    }
    CHECK(opt_1ply_box_cover_size(pts, Eigen::VectorXd::Ones(1)) ==
          opt_interval_cover_size(coords, 1.0));
  }
}

TEST_CASE("monotonicity under subset chains") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 2.5);
  for (int t = 0; t < 25; ++t) {
    Eigen::MatrixXd pts(6, 2);
    for (int i = 0; i < 6; ++i) pts.row(i) << u(rng), u(rng);
    int prev = 0;
    for (int n = 1; n <= 6; ++n) {
      const int opt = opt_1ply_box_cover_size(pts.topRows(n), kUnitSquare);
      CHECK(opt >= prev);  // adding points never shrinks the optimum
      prev = opt;
    }
  }
}

}  // TEST_SUITE
