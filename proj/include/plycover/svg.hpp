#pragma once

#include <string>

#include "plycover/cover.hpp"
#include "plycover/instance.hpp"

namespace plycover {

/// Renders a 2-D instance (points as dots) and optionally a cover (objects
/// as outlined shapes) to SVG. Deterministic byte output for identical
/// inputs. Throws std::invalid_argument for non-2-D instances.
std::string render_svg(const Instance& instance,
                       const CoverDocument* cover = nullptr);

void write_svg(const Instance& instance, const CoverDocument* cover,
               const std::string& path);

}  // namespace plycover
