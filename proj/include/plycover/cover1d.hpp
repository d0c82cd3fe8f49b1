#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "plycover/geom.hpp"

namespace plycover {

/// A 1-ply cover of a coordinate multiset by closed length-`length`
/// intervals. Left endpoints are strictly increasing with gaps strictly
/// larger than `length`, so the closed intervals are pairwise disjoint,
/// and every left endpoint equals some input coordinate.
struct IntervalCover {
  double length = 1.0;
  std::vector<double> lefts;

  std::size_t size() const { return lefts.size(); }
  Interval interval(std::size_t i) const { return {lefts[i], length}; }

  /// Index of the unique interval containing x, if any.
  std::optional<std::size_t> find(double x) const;
};

/// Left-to-right greedy sweep: opens a new interval anchored at each
/// uncovered coordinate. Produces a minimum-size 1-ply interval cover in
/// O(n log n). Coordinates are deduplicated; the covered test
/// `c <= left + length` is exact, no tolerance. Throws
/// std::invalid_argument on non-positive length or non-finite input.
IntervalCover separate(std::vector<double> coords, double length);
IntervalCover separate(const Eigen::Ref<const Eigen::VectorXd>& coords,
                       double length);

}  // namespace plycover
