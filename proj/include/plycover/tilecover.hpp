#pragma once

#include <Eigen/Dense>

#include <variant>
#include <vector>

#include "plycover/cover.hpp"

// 1-ply covers from plane tilings (square and flat-top regular-hexagon
// lattices). A lattice offset is searched deterministically until every
// input point clears the cell boundaries by a margin delta' = 1e-6 * scale;
// occupied cells are then emitted. In strict mode (the default) each emitted
// tile is shrunk by delta'/2, so the closed tiles are pairwise strictly
// disjoint and the arrangement ply is literally 1; all points remain
// covered with margin > delta'/2.

namespace plycover {

struct SquareTile {
  double side = 1.0;
};

struct HexTile {
  double rho = 1.0;  // circumradius, flat-top orientation
};

using TileDescriptor = std::variant<SquareTile, HexTile>;

struct TileCover {
  TileDescriptor tile;
  Vec2 offset = Vec2::Zero();
  double margin = 0.0;  // delta'
  bool strict = true;
  std::vector<Eigen::Vector2i> cells;  // square: (i, j); hex: axial (q, r)

  std::size_t size() const { return cells.size(); }

  /// Emitted tiles for square lattices (shrunk in strict mode).
  std::vector<HyperBox> square_placements() const;
  /// Emitted tiles for hexagon lattices: common polygon + center per cell.
  std::pair<ConvexPolygon, std::vector<Vec2>> hex_placements() const;

  CoverDocument to_cover(std::uint64_t seed = 0) const;
};

/// Number of offsets tried before giving up.
inline constexpr int kOffsetAttempts = 1000;

/// Builds the tiling cover. Throws std::runtime_error when no offset in the
/// deterministic search sequence clears every point off the cell boundaries
/// (pathological input density relative to delta').
TileCover tiling_cover(const Eigen::MatrixXd& points,
                       const TileDescriptor& tile, bool strict = true);

/// Center of the lattice cell with the given index, at the cover's offset.
Vec2 tile_cell_center(const TileCover& cover, const Eigen::Vector2i& cell);

/// Maximum number of cover tiles intersected by any of `probes` translated
/// copies of the tile, placed pseudo-randomly over the cover's extent
/// (closed intersection tests). The paper's m_t audit.
int tile_probe_max_intersections(const TileCover& cover, int probes,
                                 std::uint64_t seed);

}  // namespace plycover
