#include "plycover/diskcover.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

namespace plycover {

DiskCover disk_cover(const Eigen::MatrixXd& points) {
  if (points.rows() > 0 && points.cols() != 2)
    throw std::invalid_argument("disk_cover: expects 2-D points");

  DiskCover cover;
  if (points.rows() == 0) {
    cover.xcover = separate(std::vector<double>{}, kDiskGridSide);
    cover.ycover = separate(std::vector<double>{}, kDiskGridSide);
    return cover;
  }
  cover.xcover = separate(points.col(0), kDiskGridSide);
  cover.ycover = separate(points.col(1), kDiskGridSide);

  std::map<std::pair<int, int>, bool> occupied;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const auto cx = cover.xcover.find(points(i, 0));
    const auto cy = cover.ycover.find(points(i, 1));
    assert(cx.has_value() && cy.has_value());
    occupied[{static_cast<int>(*cx), static_cast<int>(*cy)}] = true;
  }

  const double half = kDiskGridSide / 2.0;
  for (const auto& [cell, _] : occupied) {
    const auto [cx, cy] = cell;
    Disk d;
    d.center = Vec2(cover.xcover.lefts[static_cast<std::size_t>(cx)] + half,
                    cover.ycover.lefts[static_cast<std::size_t>(cy)] + half);
    d.radius = 0.5;
    cover.disks.push_back(d);
    cover.cells.emplace_back(cx, cy);
  }
  return cover;
}

CoverDocument DiskCover::to_cover(std::uint64_t seed) const {
  CoverDocument doc;
  doc.shape = DiskShape{};
  doc.placements.reserve(disks.size());
  for (const auto& d : disks)
    doc.placements.push_back(Eigen::Vector2d(d.center));
  doc.provenance = Provenance{"disk_cover", seed, "0.1.0"};
  return doc;
}

int probe_intersection_count(const std::vector<Disk>& disks,
                             const Vec2& probe) {
  int count = 0;
  for (const auto& d : disks) {
    const double r = d.radius + 0.5;
    if ((probe - d.center).squaredNorm() <= r * r) ++count;
  }
  return count;
}

std::int64_t DiskIndex::key(int ix, int iy) const {
  return (static_cast<std::int64_t>(ix) << 32) ^
         static_cast<std::int64_t>(static_cast<std::uint32_t>(iy));
}

DiskIndex::DiskIndex(const std::vector<Disk>& disks) : disks_(disks) {
  buckets_.reserve(disks_.size());
  for (std::size_t i = 0; i < disks_.size(); ++i) {
    const int ix = static_cast<int>(std::floor(disks_[i].center.x() / cell_));
    const int iy = static_cast<int>(std::floor(disks_[i].center.y() / cell_));
    buckets_.emplace_back(key(ix, iy), i);
  }
  std::sort(buckets_.begin(), buckets_.end());
}

int DiskIndex::count_intersecting(const Vec2& probe) const {
  const int ix = static_cast<int>(std::floor(probe.x() / cell_));
  const int iy = static_cast<int>(std::floor(probe.y() / cell_));
  int count = 0;
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      const std::int64_t k = key(ix + dx, iy + dy);
      auto it = std::lower_bound(
          buckets_.begin(), buckets_.end(), std::pair<std::int64_t, std::size_t>{k, 0});
      for (; it != buckets_.end() && it->first == k; ++it) {
        if ((probe - disks_[it->second].center).squaredNorm() <= 1.0) ++count;
      }
    }
  }
  return count;
}

}  // namespace plycover
