#pragma once

#include <optional>
#include <string>

#include "mapwalk/families.hpp"
#include "mapwalk/linalg.hpp"
#include "mapwalk/map.hpp"

namespace mapwalk {

// One animation frame: the map with arc opacity proportional to
// |amplitude| and color by sign (red positive, blue negative). Grid
// layouts draw the cut-open torus; anything else falls back to vertices
// on a circle.
std::string render_frame_svg(const Map& map, const std::optional<GridLayout>& layout,
                             const RealVector& amplitudes);

}  // namespace mapwalk
