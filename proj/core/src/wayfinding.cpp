#include "wayfinder/wayfinding.hpp"

#include <cmath>
#include <limits>

#include "wayfinder/errors.hpp"

namespace wayfinder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Decision backtrack_or_fail(std::vector<DoorScore> scores, const CognitiveMap& map) {
  if (map.entry_stack().empty()) {
    throw NoRouteFoundError("no unvisited candidate door and nothing to backtrack through");
  }
  return {map.entry_stack().back(), DecisionMode::backtrack, std::move(scores)};
}

}  // namespace

std::string_view to_string(DecisionMode mode) {
  switch (mode) {
    case DecisionMode::directed:
      return "directed";
    case DecisionMode::explore:
      return "explore";
    case DecisionMode::backtrack:
      return "backtrack";
  }
  return "directed";
}

std::vector<DoorScore> score_doors(const Room& room, const FloorPlan& plan,
                                   const CognitiveMap& map, const Point2& agent_pos) {
  (void)agent_pos;  // directed scores depend on the doors, not the agent's position
  const std::vector<Door> doors = plan.doors_of(room.id);
  const std::vector<Segment> walls = walls_of(room, doors);

  std::vector<DoorScore> scores;
  scores.reserve(doors.size());
  for (const Door& door : doors) {
    DoorScore s;
    s.door = door.id;
    try {
      s.path_len = shortest_path_to_ellipse(door.midpoint(), map.current_goal(), walls,
                                            map.strategy().n_ellipse_samples)
                       .length;
    } catch (const UnreachableError&) {
      s.path_len = kInf;
    }
    const std::string& far = door.other_room(room.id);
    s.leads_to_circulation = map.class_of(far) == RoomClass::circulation;
    s.visited_target = map.visited(far);
    scores.push_back(std::move(s));
  }
  return scores;
}

Decision choose_door(std::vector<DoorScore> scores, const CognitiveMap& map,
                     const StrategyConfig& cfg) {
  std::vector<const DoorScore*> candidates;
  for (const DoorScore& s : scores) {
    if (!s.visited_target && std::isfinite(s.path_len)) candidates.push_back(&s);
  }

  if (cfg.use_circulation_preference) {
    std::vector<const DoorScore*> circulation;
    for (const DoorScore* s : candidates) {
      if (s->leads_to_circulation) circulation.push_back(s);
    }
    if (!circulation.empty()) candidates = std::move(circulation);
  }

  if (candidates.empty()) return backtrack_or_fail(std::move(scores), map);

  double best_len = kInf;
  for (const DoorScore* s : candidates) best_len = std::min(best_len, s->path_len);

  // Candidates follow the id-ordering of scores, so the first within the tie
  // tolerance has the lowest door id.
  std::string chosen;
  for (const DoorScore* s : candidates) {
    if (s->path_len <= best_len + kPathTieEps) {
      chosen = s->door;
      break;
    }
  }
  return {std::move(chosen), DecisionMode::directed, std::move(scores)};
}

Decision explore_step(const Room& room, const FloorPlan& plan, const CognitiveMap& map,
                      const Point2& agent_pos) {
  const std::vector<Door> doors = plan.doors_of(room.id);
  const std::vector<Segment> walls = walls_of(room, doors);

  std::vector<DoorScore> scores;
  scores.reserve(doors.size());
  std::string best_door;
  double best_len = kInf;
  for (const Door& door : doors) {
    DoorScore s;
    s.door = door.id;
    try {
      s.path_len = shortest_path_between(agent_pos, door.midpoint(), walls).length;
    } catch (const UnreachableError&) {
      s.path_len = kInf;
    }
    const std::string& far = door.other_room(room.id);
    s.leads_to_circulation = map.class_of(far) == RoomClass::circulation;
    s.visited_target = map.visited(far);

    // Ties go to the lowest door id, which is the one seen first.
    if (!door.leads_outside() && !s.visited_target && std::isfinite(s.path_len) &&
        s.path_len < best_len - kPathTieEps) {
      best_len = s.path_len;
      best_door = door.id;
    }
    scores.push_back(std::move(s));
  }

  if (best_door.empty()) return backtrack_or_fail(std::move(scores), map);
  return {std::move(best_door), DecisionMode::explore, std::move(scores)};
}

Decision next_decision(const FloorPlan& plan, const CognitiveMap& map, const Room& room,
                       const Point2& agent_pos) {
  const std::vector<Door> doors = plan.doors_of(room.id);
  for (const Door& door : doors) {  // id-ordered: the first exit door wins
    if (door.leads_outside()) {
      return {door.id, DecisionMode::directed, score_doors(room, plan, map, agent_pos)};
    }
  }
  if (map.is_goal_reached(agent_pos)) {
    return explore_step(room, plan, map, agent_pos);
  }
  return choose_door(score_doors(room, plan, map, agent_pos), map, map.strategy());
}

}  // namespace wayfinder
