#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "plycover/boxcover.hpp"
#include "plycover/cover.hpp"

// 4-ply cover by translates of an arbitrary convex polygon C. An
// approximating pair of homothetic rectangles (inner in C, C in outer, side
// ratio lambda <= 2) fixes a rotated frame; the inner rectangles produce a
// 1-ply rectangle cover there, and each inner rectangle is replaced by the
// translate of C that carries its own inner rectangle onto it. Adjacent
// outer rectangles overlap at most pairwise per strip and per strip pair,
// which caps the ply at 4.

namespace plycover {

/// Axis-aligned-after-rotation rectangle: center, half extents, frame angle.
struct OrientedRect {
  Vec2 center = Vec2::Zero();
  Vec2 half = Vec2::Zero();
  double angle = 0.0;

  /// CCW corners in world coordinates.
  Eigen::Matrix2Xd corners() const;
};

/// Homothetic rectangle pair: inner inside C, C inside outer, equal aspect
/// ratio and orientation, lambda = outer side / inner side <= 2. The centers
/// generally differ; the ply analysis normalizes them by a common shift of
/// all outer copies, which leaves every pairwise relation unchanged.
struct ApproximatingPair {
  OrientedRect inner;
  OrientedRect outer;
  double lambda = 1.0;
  Vec2 inner_offset = Vec2::Zero();  // inner center relative to C's vertex 0
};

/// Deterministic pair construction. Candidate orientations are the diameter
/// direction and every edge direction; per candidate the outer rectangle is
/// the bounding rectangle and the inner one the maximal homothet fitted by
/// bisection with a half-plane-intersection feasibility oracle. Throws
/// std::runtime_error (with per-candidate diagnostics) if no candidate
/// reaches lambda <= 2 + 1e-9.
ApproximatingPair approximating_pair(const ConvexPolygon& C);

struct PolygonCover {
  ConvexPolygon polygon;
  ApproximatingPair pair;
  std::vector<Vec2> translations;
  BoxCover inner_cover;  // rectangle cover in the rotated frame

  std::size_t size() const { return translations.size(); }

  /// Outer rectangles as axis-aligned boxes in the rotated frame, one per
  /// translation, same order.
  std::vector<HyperBox> outer_rects_rotated() const;
  /// Inner rectangles likewise (the grid rectangles themselves).
  std::vector<HyperBox> inner_rects_rotated() const;

  CoverDocument to_cover(std::uint64_t seed = 0) const;
};

PolygonCover polygon_cover(const Eigen::MatrixXd& points,
                           const ConvexPolygon& C);

namespace detail {

struct PairCandidate {
  double angle = 0.0;
  double sigma = 0.0;        // inner scale; lambda = 1 / sigma
  Vec2 inner_center_rot;     // rotated-frame centers
  Vec2 outer_center_rot;
  Vec2 outer_half;
};

/// Evaluates one candidate orientation (exposed for tests). Returns nullopt
/// when the bisection cannot fit any inner rectangle (degenerate frames).
std::optional<PairCandidate> pair_at_angle(const ConvexPolygon& C,
                                           double angle);

}  // namespace detail

}  // namespace plycover
