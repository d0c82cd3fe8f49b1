#include "plycover/cover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plycover {

Eigen::Index shape_placement_dim(const ShapeDescriptor& shape) {
  if (const auto* hb = std::get_if<HyperBoxShape>(&shape))
    return hb->lengths.size();
  return 2;
}

ConvexPolygon hexagon(double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("hexagon: rho must be > 0");
  Eigen::Matrix2Xd v(2, 6);
  for (int k = 0; k < 6; ++k) {
    const double a = k * std::numbers::pi / 3.0;
    v.col(k) = Vec2(rho * std::cos(a), rho * std::sin(a));
  }
  return ConvexPolygon::from_vertices(v);
}

bool shape_is_boxes(const ShapeDescriptor& shape) {
  return std::holds_alternative<SquareShape>(shape) ||
         std::holds_alternative<RectShape>(shape) ||
         std::holds_alternative<HyperBoxShape>(shape) ||
         std::holds_alternative<TileSquareShape>(shape);
}

bool shape_is_polygons(const ShapeDescriptor& shape) {
  return std::holds_alternative<TileHexShape>(shape) ||
         std::holds_alternative<PolygonShape>(shape);
}

std::vector<HyperBox> cover_boxes(const CoverDocument& doc) {
  if (!shape_is_boxes(doc.shape))
    throw std::invalid_argument("cover does not consist of boxes");
  Eigen::VectorXd lengths;
  if (std::holds_alternative<SquareShape>(doc.shape)) {
    lengths = Eigen::Vector2d(1.0, 1.0);
  } else if (const auto* r = std::get_if<RectShape>(&doc.shape)) {
    lengths = Eigen::Vector2d(r->a, r->b);
  } else if (const auto* h = std::get_if<HyperBoxShape>(&doc.shape)) {
    lengths = h->lengths;
  } else {
    const auto& t = std::get<TileSquareShape>(doc.shape);
    lengths = Eigen::Vector2d(t.placed_side, t.placed_side);
  }
  std::vector<HyperBox> boxes;
  boxes.reserve(doc.placements.size());
  for (const auto& p : doc.placements) {
    if (p.size() != lengths.size())
      throw std::invalid_argument("placement arity mismatch");
    boxes.push_back(HyperBox{p, lengths});
  }
  return boxes;
}

std::vector<Disk> cover_disks(const CoverDocument& doc) {
  if (!std::holds_alternative<DiskShape>(doc.shape))
    throw std::invalid_argument("cover does not consist of disks");
  std::vector<Disk> disks;
  disks.reserve(doc.placements.size());
  for (const auto& p : doc.placements) {
    if (p.size() != 2) throw std::invalid_argument("placement arity mismatch");
    disks.push_back(Disk{Vec2(p[0], p[1]), 0.5});
  }
  return disks;
}

std::pair<ConvexPolygon, std::vector<Vec2>> cover_polygons(
    const CoverDocument& doc) {
  ConvexPolygon poly;
  if (const auto* hx = std::get_if<TileHexShape>(&doc.shape)) {
    poly = hexagon(hx->placed_rho);
  } else if (const auto* pg = std::get_if<PolygonShape>(&doc.shape)) {
    poly = pg->polygon;
  } else {
    throw std::invalid_argument("cover does not consist of polygons");
  }
  std::vector<Vec2> translations;
  translations.reserve(doc.placements.size());
  for (const auto& p : doc.placements) {
    if (p.size() != 2) throw std::invalid_argument("placement arity mismatch");
    translations.emplace_back(p[0], p[1]);
  }
  return {std::move(poly), std::move(translations)};
}

}  // namespace plycover
