#pragma once

#include <optional>
#include <string>

#include "plycover/cover.hpp"
#include "plycover/instance.hpp"

namespace plycover {

/// Parsed `--shape` argument. Grammar: square | rect:a,b |
/// hyperbox:l1,l2,... | disk | tile-square:<s> | tile-hex:<rho> | polygon
/// (the latter requires a polygon).
struct ShapeSpec {
  enum class Kind { Square, Rect, HyperBox, Disk, TileSquare, TileHex, Polygon };
  Kind kind = Kind::Square;
  Eigen::VectorXd lengths;  // rect / hyperbox
  double scale = 1.0;       // tile side or circumradius
  std::optional<ConvexPolygon> polygon;
};

ShapeSpec parse_shape_spec(const std::string& text);

/// Dispatches to the covering algorithm selected by the shape spec.
CoverDocument run_cover(const Instance& instance, const ShapeSpec& shape);

}  // namespace plycover
