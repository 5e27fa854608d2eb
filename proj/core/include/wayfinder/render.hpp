#pragma once

// Static SVG rendering of a floor plan, the agents' goal ellipses, and
// (optionally) one run's trajectory with event markers.

#include <span>
#include <string>

#include "wayfinder/scenario.hpp"
#include "wayfinder/sim.hpp"

namespace wayfinder {

/// One <path> per room (circulation rooms shaded), one <line> per door gap,
/// one <ellipse> per goal region, and, when a trajectory is given, one
/// <polyline> with a point per sample plus <circle> markers at events. The
/// viewBox fits the plan's bounding box with a 5% margin; the y axis is
/// flipped so model coordinates read naturally.
std::string render_svg(const FloorPlan& plan, std::span<const AgentSpec> agents,
                       const Trajectory* trajectory = nullptr);

}  // namespace wayfinder
