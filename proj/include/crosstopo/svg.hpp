// Minimal static SVG emission: component-colored raster masks and error
// curves. Coordinates are rendered from exact rationals with fixed-point
// formatting, so output bytes are deterministic.

#pragma once

#include "crosstopo/raster.hpp"

#include <string>
#include <vector>

namespace crosstopo {

std::string mask_svg(const GridMask& mask, const ComponentLabels& labels,
                     int pixels_per_cell = 8);

/// One polyline per curve; values are plotted against index 1..len.
std::string error_curves_svg(const std::vector<std::vector<Rat>>& curves,
                             const std::vector<std::string>& names);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace crosstopo
