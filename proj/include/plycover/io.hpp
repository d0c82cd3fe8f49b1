#pragma once

#include <json.hpp>

#include <string>

#include "plycover/cover.hpp"
#include "plycover/instance.hpp"
#include "plycover/verify.hpp"

// JSON file formats. Instances: {"dim": d, "points": [[...], ...],
// "meta": {...}}. Covers: {"shape": {"kind": ...}, "placements": [[...]],
// "provenance": {...}}. Polygons: {"vertices": [[x, y], ...]} in CCW order.
// Serialization round-trips doubles losslessly.

namespace plycover {

nlohmann::json to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoverDocument& cover);
CoverDocument cover_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PlyReport& report);

nlohmann::json to_json(const ConvexPolygon& polygon);
ConvexPolygon polygon_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);
CoverDocument load_cover(const std::string& path);
void save_cover(const CoverDocument& cover, const std::string& path);
ConvexPolygon load_polygon(const std::string& path);

}  // namespace plycover
