#pragma once

#include <Eigen/Dense>

#include <vector>

#include "plycover/cover.hpp"
#include "plycover/cover1d.hpp"

// 2-ply unit-disk cover: separate the x- and the y-coordinates globally with
// interval length 1/sqrt(2), then emit the circumcircle of every occupied
// grid cell. Cells have side 1/sqrt(2), so each circumcircle has radius
// exactly 1/2. Diagonally adjacent disks are strictly separated, which caps
// the arrangement ply at 2 and the number of cover disks any unit disk can
// intersect at 7.

namespace plycover {

/// Interval length used by the disk construction: 1/sqrt(2).
inline const double kDiskGridSide = 0.7071067811865476;

struct DiskCover {
  IntervalCover xcover;                     // vertical strips
  IntervalCover ycover;                     // horizontal strips (global)
  std::vector<Disk> disks;                  // radius 0.5 each
  std::vector<Eigen::Vector2i> cells;       // (column, row) per disk

  std::size_t size() const { return disks.size(); }
  CoverDocument to_cover(std::uint64_t seed = 0) const;
};

DiskCover disk_cover(const Eigen::MatrixXd& points);

/// Number of cover disks a probe unit disk (radius 1/2) centered at `probe`
/// intersects; closed semantics, exact squared-distance comparison.
int probe_intersection_count(const std::vector<Disk>& disks,
                             const Vec2& probe);

/// Grid index over disk centers for bulk probe audits.
class DiskIndex {
 public:
  explicit DiskIndex(const std::vector<Disk>& disks);
  /// Count of indexed disks with center within distance 1 of `probe`
  /// (closed), i.e. the probe intersection count for unit disks.
  int count_intersecting(const Vec2& probe) const;

 private:
  std::vector<Disk> disks_;
  double cell_ = 1.0;
  std::vector<std::pair<std::int64_t, std::size_t>> buckets_;  // sorted keys
  std::int64_t key(int ix, int iy) const;
};

}  // namespace plycover
