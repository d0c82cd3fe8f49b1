#include "plycover/tilecover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace plycover {

namespace {

constexpr double kPhi = 1.6180339887498949;  // golden ratio
constexpr double kSqrt3 = 1.7320508075688772;

double tile_scale(const TileDescriptor& tile) {
  if (const auto* s = std::get_if<SquareTile>(&tile)) return s->side;
  return std::get<HexTile>(tile).rho;
}

// Lattice periods along x and y for the offset search.
Vec2 tile_periods(const TileDescriptor& tile) {
  if (const auto* s = std::get_if<SquareTile>(&tile))
    return Vec2(s->side, s->side);
  const double rho = std::get<HexTile>(tile).rho;
  return Vec2(1.5 * rho, kSqrt3 * rho);
}

Eigen::Vector2i hex_cell_of(const Vec2& p, double rho) {
  // fractional axial coordinates (flat-top), then cube rounding
  const double qf = (2.0 / 3.0) * p.x() / rho;
  const double rf = (-1.0 / 3.0 * p.x() + kSqrt3 / 3.0 * p.y()) / rho;
  const double xf = qf, zf = rf, yf = -xf - zf;
  double rx = std::round(xf), ry = std::round(yf), rz = std::round(zf);
  const double dx = std::abs(rx - xf), dy = std::abs(ry - yf),
               dz = std::abs(rz - zf);
  if (dx > dy && dx > dz) {
    rx = -ry - rz;
  } else if (dy > dz) {
    ry = -rx - rz;
  } else {
    rz = -rx - ry;
  }
  return Eigen::Vector2i(static_cast<int>(rx), static_cast<int>(rz));
}

Vec2 hex_center(const Eigen::Vector2i& cell, double rho) {
  return Vec2(1.5 * cell.x() * rho,
              kSqrt3 * (cell.y() + 0.5 * cell.x()) * rho);
}

struct CellAssignment {
  Eigen::Vector2i cell;
  double clearance;  // distance from the point to its cell's boundary
};

CellAssignment assign_cell(const Vec2& p, const TileDescriptor& tile,
                           const Vec2& offset,
                           const Eigen::Matrix2Xd& hexverts) {
  const Vec2 local = p - offset;
  if (const auto* s = std::get_if<SquareTile>(&tile)) {
    const double side = s->side;
    const int i = static_cast<int>(std::floor(local.x() / side));
    const int j = static_cast<int>(std::floor(local.y() / side));
    const double ux = local.x() - i * side;
    const double uy = local.y() - j * side;
    const double clearance =
        std::min(std::min(ux, side - ux), std::min(uy, side - uy));
    return {Eigen::Vector2i(i, j), clearance};
  }
  const double rho = std::get<HexTile>(tile).rho;
  const Eigen::Vector2i cell = hex_cell_of(local, rho);
  const double clearance =
      distance_to_convex_boundary(local - hex_center(cell, rho), hexverts);
  return {cell, clearance};
}

}  // namespace

TileCover tiling_cover(const Eigen::MatrixXd& points,
                       const TileDescriptor& tile, bool strict) {
  if (points.rows() > 0 && points.cols() != 2)
    throw std::invalid_argument("tiling_cover: expects 2-D points");
  if (!(tile_scale(tile) > 0.0))
    throw std::invalid_argument("tiling_cover: tile scale must be positive");

  TileCover cover;
  cover.tile = tile;
  cover.strict = strict;
  const double scale = tile_scale(tile);
  cover.margin = 1e-6 * scale;

  Eigen::Matrix2Xd hexverts;
  if (std::holds_alternative<HexTile>(tile))
    hexverts = hexagon(std::get<HexTile>(tile).rho).vertices();

  if (points.rows() == 0) return cover;

  const Vec2 periods = tile_periods(tile);
  std::vector<CellAssignment> assignment(
      static_cast<std::size_t>(points.rows()));
  bool found = false;
  for (int k = 0; k < kOffsetAttempts && !found; ++k) {
    const Vec2 offset(std::fmod(k * kPhi, periods.x()),
                      std::fmod(k * kPhi * kPhi, periods.y()));
    double worst = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      const auto a = assign_cell(Vec2(points(i, 0), points(i, 1)), tile,
                                 offset, hexverts);
      assignment[static_cast<std::size_t>(i)] = a;
      worst = std::min(worst, a.clearance);
      if (worst <= cover.margin) break;
    }
    if (worst > cover.margin) {
      cover.offset = offset;
      found = true;
    }
  }
  if (!found)
    throw std::runtime_error(
        "tiling_cover: no lattice offset cleared all points off cell "
        "boundaries after " +
        std::to_string(kOffsetAttempts) + " attempts");

  std::map<std::pair<int, int>, bool> occupied;
  for (const auto& a : assignment)
    occupied[{a.cell.x(), a.cell.y()}] = true;
  for (const auto& [c, _] : occupied)
    cover.cells.emplace_back(c.first, c.second);
  return cover;
}

Vec2 tile_cell_center(const TileCover& cover, const Eigen::Vector2i& cell) {
  if (const auto* s = std::get_if<SquareTile>(&cover.tile)) {
    return cover.offset +
           Vec2((cell.x() + 0.5) * s->side, (cell.y() + 0.5) * s->side);
  }
  return cover.offset + hex_center(cell, std::get<HexTile>(cover.tile).rho);
}

std::vector<HyperBox> TileCover::square_placements() const {
  const auto* s = std::get_if<SquareTile>(&tile);
  if (!s) throw std::invalid_argument("not a square tiling");
  const double shrink = strict ? margin / 2.0 : 0.0;
  const double side = s->side - 2.0 * shrink;
  std::vector<HyperBox> out;
  out.reserve(cells.size());
  for (const auto& c : cells) {
    Eigen::Vector2d lower = offset + Vec2(c.x() * s->side + shrink,
                                          c.y() * s->side + shrink);
    out.push_back(HyperBox{lower, Eigen::Vector2d(side, side)});
  }
  return out;
}

std::pair<ConvexPolygon, std::vector<Vec2>> TileCover::hex_placements() const {
  const auto* h = std::get_if<HexTile>(&tile);
  if (!h) throw std::invalid_argument("not a hexagon tiling");
  // inward offset by margin/2 shrinks the circumradius by margin/sqrt(3)
  const double rho = h->rho - (strict ? margin / kSqrt3 : 0.0);
  std::vector<Vec2> centers;
  centers.reserve(cells.size());
  for (const auto& c : cells) centers.push_back(tile_cell_center(*this, c));
  return {hexagon(rho), std::move(centers)};
}

CoverDocument TileCover::to_cover(std::uint64_t seed) const {
  CoverDocument doc;
  if (const auto* s = std::get_if<SquareTile>(&tile)) {
    const auto boxes = square_placements();
    doc.shape = TileSquareShape{s->side,
                                boxes.empty() ? s->side : boxes[0].lengths[0],
                                offset};
    for (const auto& b : boxes) doc.placements.push_back(b.lower);
    doc.provenance = Provenance{"tiling_cover_square", seed, "0.1.0"};
  } else {
    const auto* h = std::get_if<HexTile>(&tile);
    auto [poly, centers] = hex_placements();
    const double placed_rho = poly.vertex(0).norm();
    doc.shape = TileHexShape{h->rho, placed_rho, offset};
    for (const auto& c : centers)
      doc.placements.push_back(Eigen::Vector2d(c));
    doc.provenance = Provenance{"tiling_cover_hex", seed, "0.1.0"};
  }
  return doc;
}

int tile_probe_max_intersections(const TileCover& cover, int probes,
                                 std::uint64_t seed) {
  if (cover.cells.empty()) return 0;
  std::mt19937_64 rng(seed);

  Vec2 lo(std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity());
  Vec2 hi = -lo;
  for (const auto& c : cover.cells) {
    const Vec2 center = tile_cell_center(cover, c);
    lo = lo.cwiseMin(center);
    hi = hi.cwiseMax(center);
  }
  const double scale = tile_scale(cover.tile);
  lo.array() -= 2.0 * scale;
  hi.array() += 2.0 * scale;
  std::uniform_real_distribution<double> ux(lo.x(), hi.x());
  std::uniform_real_distribution<double> uy(lo.y(), hi.y());

  int worst = 0;
  if (const auto* s = std::get_if<SquareTile>(&cover.tile)) {
    const auto placed = cover.square_placements();
    for (int t = 0; t < probes; ++t) {
      const Vec2 p(ux(rng), uy(rng));
      const HyperBox probe{Eigen::Vector2d(p),
                           Eigen::Vector2d(s->side, s->side)};
      int count = 0;
      for (const auto& b : placed)
        if (!boxes_disjoint(probe, b)) ++count;
      worst = std::max(worst, count);
    }
  } else {
    const auto [poly, centers] = cover.hex_placements();
    const Eigen::Matrix2Xd nominal =
        hexagon(std::get<HexTile>(cover.tile).rho).vertices();
    std::vector<Eigen::Matrix2Xd> placed;
    placed.reserve(centers.size());
    for (const Vec2& c : centers) placed.push_back(poly.translated(c));
    for (int t = 0; t < probes; ++t) {
      const Vec2 p(ux(rng), uy(rng));
      const Eigen::Matrix2Xd probe = nominal.colwise() + p;
      int count = 0;
      for (const auto& hex : placed)
        if (convex_polygons_intersect(probe, hex)) ++count;
      worst = std::max(worst, count);
    }
  }
  return worst;
}

}  // namespace plycover
