#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "plycover/cover.hpp"
#include "plycover/cover1d.hpp"

// 1-ply covers by unit squares, fixed a x b rectangles and fixed hyperboxes.
// The planar algorithm separates on x, then on y within each vertical strip;
// in d dimensions the recursion separates on dimension d, d-1, ..., 3 first
// and finishes with the planar pass, so boxes inherit strict gaps (and hence
// pairwise disjointness) from every interval cover on the way down.

namespace plycover {

struct StripLevel;

/// One wall of an interval cover: the points that fell into it and either a
/// child level (inner dimensions still to be separated) or the boxes it
/// emitted.
struct StripWall {
  Interval range;
  std::vector<Eigen::Index> points;        // input row indices, ascending
  std::vector<std::size_t> placements;     // leaf level only
  std::vector<StripLevel> child;           // 0 or 1 entries
};

/// One recursion level: the axis it separated on, the interval cover used,
/// and the walls in left-to-right order.
struct StripLevel {
  int axis = -1;
  IntervalCover cover;
  std::vector<StripWall> walls;
};

struct BoxCover {
  Eigen::VectorXd lengths;                  // per-axis box lengths
  std::vector<Eigen::VectorXd> placements;  // lower corners
  std::vector<StripLevel> tree;             // empty iff no input points

  Eigen::Index dim() const { return lengths.size(); }
  std::size_t size() const { return placements.size(); }

  std::vector<HyperBox> boxes() const;
  CoverDocument to_cover(const std::string& algorithm,
                         std::uint64_t seed = 0) const;
};

/// 1-ply unit square cover, O(n log n). `points` is n x 2, one row per point.
BoxCover square_cover(const Eigen::MatrixXd& points);

/// 1-ply cover by a x b rectangles (a along x, b along y).
BoxCover rect_cover(const Eigen::MatrixXd& points, double a, double b);

/// 1-ply cover by fixed hyperboxes in d >= 1 dimensions; separates on
/// dimension d first, recursing per wall, O(d n log n).
BoxCover hyperbox_cover(const Eigen::MatrixXd& points,
                        const Eigen::VectorXd& lengths);

}  // namespace plycover
