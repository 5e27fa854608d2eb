#pragma once

// Decision engine: score the doorways of the current room by their shortest
// path to the goal region, apply the strategy stack (circulation preference
// over path length, lowest door id on ties), detect dead ends, and drive the
// in-region exploration. All functions are pure with respect to their inputs.

#include <string>
#include <vector>

#include "wayfinder/cogmap.hpp"
#include "wayfinder/floorplan.hpp"
#include "wayfinder/geometry.hpp"

namespace wayfinder {

struct DoorScore {
  std::string door;
  // Directed mode: shortest path from the door midpoint to the goal ellipse
  // with only the current room's walls as obstacles (+inf when unreachable).
  // Explore mode: in-room walking distance from the agent to the door.
  double path_len = 0.0;
  bool leads_to_circulation = false;
  bool visited_target = false;
};

enum class DecisionMode { directed, explore, backtrack };

std::string_view to_string(DecisionMode mode);

struct Decision {
  std::string chosen;
  DecisionMode mode = DecisionMode::directed;
  std::vector<DoorScore> all_scores;  // diagnostic, id-ordered
};

/// One score per door of the room, ordered by door id. The entry door is
/// scored like any other; rooms with unknown class count as non-circulation.
std::vector<DoorScore> score_doors(const Room& room, const FloorPlan& plan,
                                   const CognitiveMap& map, const Point2& agent_pos);

/// Picks among doors leading to unvisited rooms with finite path length.
/// When the circulation preference is on and a circulation candidate exists,
/// the choice is restricted to those. Ties within kPathTieEps go to the
/// lowest door id. With no candidates the decision is a backtrack through
/// the entry-stack top; throws NoRouteFoundError when the stack is empty.
Decision choose_door(std::vector<DoorScore> scores, const CognitiveMap& map,
                     const StrategyConfig& cfg);

/// In-goal-region search: head for the nearest doorway (in-room walking
/// distance) that leads to an unvisited room; backtrack when exhausted.
Decision explore_step(const Room& room, const FloorPlan& plan, const CognitiveMap& map,
                      const Point2& agent_pos);

/// Dispatch: an exit door in the current room always wins; otherwise explore
/// when inside the goal ellipse, else directed scoring.
Decision next_decision(const FloorPlan& plan, const CognitiveMap& map, const Room& room,
                       const Point2& agent_pos);

}  // namespace wayfinder
