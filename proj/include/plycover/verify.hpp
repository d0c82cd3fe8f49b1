#pragma once

#include <Eigen/Dense>

#include <vector>

#include "plycover/cover.hpp"

// Ground-truth checkers: coverage, membership (max containment count over
// input points) and exact arrangement ply (max containment count over the
// whole plane). The ply is computed over a finite candidate set that
// provably attains the maximum for each supported shape family.

namespace plycover {

struct PlyReport {
  int ply = 0;
  Eigen::VectorXd witness;  // point attaining the ply; empty for empty covers
  int membership = 0;       // 0 when no instance was supplied
  std::vector<Eigen::VectorXd> uncovered;
};

/// Exact maximum number of cover objects containing any single input point.
/// `argmax` (optional) receives the attaining point, ties broken by
/// lexicographically smallest point.
int membership(const Eigen::MatrixXd& points, const CoverDocument& cover,
               Eigen::VectorXd* argmax = nullptr);

/// Exact arrangement ply of the cover with a witness point. Empty cover
/// has ply 0. Throws std::invalid_argument for unsupported shapes.
PlyReport exact_ply(const CoverDocument& cover);

/// Input points not contained in any cover object (exact closed test).
std::vector<Eigen::VectorXd> check_coverage(const Eigen::MatrixXd& points,
                                            const CoverDocument& cover);

/// Full report: ply + witness + membership + uncovered, for the CLI.
PlyReport verify_cover(const Eigen::MatrixXd& points,
                       const CoverDocument& cover);

namespace detail {

/// Depth over the candidate grid: per axis all lower and upper coordinates.
/// O((2k)^d) candidates for k boxes; exact comparisons.
int ply_boxes_grid(const std::vector<HyperBox>& boxes,
                   Eigen::VectorXd* witness = nullptr);

/// Sweep-line depth for d = 2 boxes: O(k log k) via a range-add segment
/// tree over compressed y coordinates. Exact comparisons; closed boxes.
int ply_boxes_sweep(const std::vector<HyperBox>& boxes,
                    Vec2* witness = nullptr);

/// Depth over disk-arrangement candidates: all centers plus all pairwise
/// circle intersection points. Candidate evaluation admits a 1e-12 slack to
/// absorb the rounding of computed intersection points.
int ply_disks(const std::vector<Disk>& disks, Vec2* witness = nullptr);

/// Depth over polygon-arrangement candidates: all placed vertices plus all
/// pairwise boundary intersection points.
int ply_polygons(const ConvexPolygon& shape,
                 const std::vector<Vec2>& translations,
                 Vec2* witness = nullptr);

}  // namespace detail

}  // namespace plycover
