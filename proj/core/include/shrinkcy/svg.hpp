#pragma once

#include <string>

#include "shrinkcy/toric.hpp"

namespace shrinkcy {

// Renders a triangulated section as a standalone SVG document: a lattice
// grid, every triangulation edge, and one labeled node per lattice point.
// Corner and interior nodes are black; boundary nodes that are not corners
// are red. When the section's interior stars have been annotated, each
// interior node also carries its surface name. Pure integer arithmetic
// throughout, so equal sections produce identical bytes.
std::string render_svg(const FanSection& fs);

}  // namespace shrinkcy
