#include "plycover/harness.hpp"

#include <sstream>
#include <stdexcept>

#include "plycover/boxcover.hpp"
#include "plycover/diskcover.hpp"
#include "plycover/polycover.hpp"
#include "plycover/tilecover.hpp"

namespace plycover {

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad number in shape spec: " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

ShapeSpec parse_shape_spec(const std::string& text) {
  ShapeSpec spec;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : text.substr(colon + 1);

  if (head == "square") {
    spec.kind = ShapeSpec::Kind::Square;
  } else if (head == "rect") {
    const auto v = parse_numbers(args);
    if (v.size() != 2) throw std::invalid_argument("rect:a,b expects 2 sides");
    spec.kind = ShapeSpec::Kind::Rect;
    spec.lengths = Eigen::Vector2d(v[0], v[1]);
  } else if (head == "hyperbox") {
    const auto v = parse_numbers(args);
    if (v.empty()) throw std::invalid_argument("hyperbox needs lengths");
    spec.kind = ShapeSpec::Kind::HyperBox;
    spec.lengths = Eigen::Map<const Eigen::VectorXd>(
        v.data(), static_cast<Eigen::Index>(v.size()));
  } else if (head == "cube") {
    spec.kind = ShapeSpec::Kind::HyperBox;
    spec.lengths = Eigen::VectorXd::Ones(3);
  } else if (head == "disk") {
    spec.kind = ShapeSpec::Kind::Disk;
  } else if (head == "tile-square") {
    spec.kind = ShapeSpec::Kind::TileSquare;
    spec.scale = args.empty() ? 1.0 : std::stod(args);
  } else if (head == "tile-hex") {
    spec.kind = ShapeSpec::Kind::TileHex;
    spec.scale = args.empty() ? 1.0 : std::stod(args);
  } else if (head == "polygon") {
    spec.kind = ShapeSpec::Kind::Polygon;
  } else {
    throw std::invalid_argument("unknown shape: " + text);
  }
  return spec;
}

CoverDocument run_cover(const Instance& instance, const ShapeSpec& shape) {
  const std::uint64_t seed = instance.meta.seed;
  switch (shape.kind) {
    case ShapeSpec::Kind::Square:
      return square_cover(instance.points).to_cover("square_cover", seed);
    case ShapeSpec::Kind::Rect:
      return rect_cover(instance.points, shape.lengths[0], shape.lengths[1])
          .to_cover("rect_cover", seed);
    case ShapeSpec::Kind::HyperBox:
      return hyperbox_cover(instance.points, shape.lengths)
          .to_cover("hyperbox_cover", seed);
    case ShapeSpec::Kind::Disk:
      return disk_cover(instance.points).to_cover(seed);
    case ShapeSpec::Kind::TileSquare:
      return tiling_cover(instance.points, SquareTile{shape.scale})
          .to_cover(seed);
    case ShapeSpec::Kind::TileHex:
      return tiling_cover(instance.points, HexTile{shape.scale})
          .to_cover(seed);
    case ShapeSpec::Kind::Polygon:
      if (!shape.polygon)
        throw std::invalid_argument("polygon shape requires --polygon-file");
      return polygon_cover(instance.points, *shape.polygon).to_cover(seed);
  }
  throw std::logic_error("unreachable shape kind");
}

}  // namespace plycover
