#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "plycover/geom.hpp"

// The universal cover exchange format: a shape descriptor plus a placement
// list. Every covering algorithm lowers its result into a CoverDocument,
// which the verifier, the renderer and the file formats consume.

namespace plycover {

struct SquareShape {};  // unit squares; placements are lower corners

struct RectShape {  // a x b rectangles; placements are lower corners
  double a = 1.0;
  double b = 1.0;
};

struct HyperBoxShape {  // fixed hyperboxes; placements are lower corners
  Eigen::VectorXd lengths;
};

struct DiskShape {};  // unit disks (radius 1/2); placements are centers

struct TileSquareShape {  // square-lattice tiles; placements are lower corners
  double side = 1.0;
  double placed_side = 1.0;  // emitted side (shrunk in strict mode)
  Vec2 offset = Vec2::Zero();
};

struct TileHexShape {  // flat-top hexagon lattice; placements are centers
  double rho = 1.0;         // nominal circumradius
  double placed_rho = 1.0;  // emitted circumradius (shrunk in strict mode)
  Vec2 offset = Vec2::Zero();
};

struct PolygonShape {  // convex polygon translates; placements are translations
  ConvexPolygon polygon;
};

using ShapeDescriptor =
    std::variant<SquareShape, RectShape, HyperBoxShape, DiskShape,
                 TileSquareShape, TileHexShape, PolygonShape>;

struct Provenance {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string version = "0.1.0";
};

struct CoverDocument {
  ShapeDescriptor shape;
  std::vector<Eigen::VectorXd> placements;
  Provenance provenance;

  std::size_t size() const { return placements.size(); }
};

/// Placement arity expected for a shape (2 for planar shapes, d for boxes).
Eigen::Index shape_placement_dim(const ShapeDescriptor& shape);

/// Flat-top regular hexagon with circumradius rho centered at the origin.
ConvexPolygon hexagon(double rho);

/// Materializations used by the verifier and the renderer. Each throws
/// std::invalid_argument when the document's shape does not match.
std::vector<HyperBox> cover_boxes(const CoverDocument& doc);
std::vector<Disk> cover_disks(const CoverDocument& doc);
/// Returns the common polygon and one translation per placement.
std::pair<ConvexPolygon, std::vector<Vec2>> cover_polygons(
    const CoverDocument& doc);

/// True when the shape materializes to axis-aligned boxes.
bool shape_is_boxes(const ShapeDescriptor& shape);
/// True when the shape materializes to convex polygon translates.
bool shape_is_polygons(const ShapeDescriptor& shape);

}  // namespace plycover
