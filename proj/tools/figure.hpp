#pragma once

#include <string>

#include "record.hpp"

namespace polyquant::cli {

/// Renders the polygon, the constraint curve (dashed), and the quantizer
/// sites into a 512x512 SVG centered on the origin, circumradius = 200 px.
/// Conditional sites are drawn red, free sites blue.
std::string render_svg(const ResultRecord& record);

}  // namespace polyquant::cli
