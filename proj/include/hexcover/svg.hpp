#pragma once

#include <ostream>

#include "hexcover/simulator.hpp"

namespace hexcover {

/// Standalone SVG of a finished mission: covered area (translucent fill),
/// cell grid with the cells the planner explored as occupied shaded, the
/// obstacle discs, and the pose trace as a polyline with one vertex per
/// sample. The viewBox equals the environment bounds in meters (y flipped,
/// as SVG y grows downward).
void render_svg(const MissionResult& result, const Environment& env, const GridParams& g,
                std::ostream& out);

}  // namespace hexcover
