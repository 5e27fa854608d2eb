#pragma once

// Per-agent knowledge state: goal ellipses, visited-set memory, the
// traversal stack used for backtracking, and the strategy configuration.
// One CognitiveMap per agent; it is mutated only by that agent's run.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wayfinder/floorplan.hpp"
#include "wayfinder/geometry.hpp"

namespace wayfinder {

enum class TieBreak { lowest_door_id };

struct StrategyConfig {
  bool use_circulation_preference = false;
  int n_ellipse_samples = 64;  // >= 8
  TieBreak tie_break = TieBreak::lowest_door_id;

  bool operator==(const StrategyConfig&) const = default;
};

class CognitiveMap {
 public:
  CognitiveMap(std::vector<GoalEllipse> goal_ellipses,
               std::map<std::string, RoomClass> known_classes, StrategyConfig strategy);

  // The active goal region; always the first ellipse.
  const GoalEllipse& current_goal() const { return goal_ellipses_.front(); }
  const std::vector<GoalEllipse>& goal_ellipses() const { return goal_ellipses_; }
  const StrategyConfig& strategy() const { return strategy_; }

  bool is_goal_reached(const Point2& p) const { return point_in_ellipse(p, current_goal()); }

  std::optional<RoomClass> class_of(const std::string& room_id) const;
  bool visited(const std::string& room_id) const { return visited_rooms_.contains(room_id); }

  // Marks the room the agent starts in, without a door.
  void record_start(const std::string& room_id) { visited_rooms_.insert(room_id); }

  // Forward move: the room becomes visited, the door is remembered and
  // pushed on the traversal stack.
  void record_entry(const std::string& room_id, const std::string& via_door);

  // Backtrack move: returns the door to walk back through and pops it.
  // Throws EmptyStackError when there is nothing left to unwind.
  std::string pop_entry();

  const std::set<std::string>& visited_rooms() const { return visited_rooms_; }
  const std::set<std::string>& traversed_doors() const { return traversed_doors_; }
  const std::vector<std::string>& entry_stack() const { return entry_stack_; }
  const std::map<std::string, RoomClass>& known_classes() const { return known_classes_; }

 private:
  std::vector<GoalEllipse> goal_ellipses_;
  std::map<std::string, RoomClass> known_classes_;
  StrategyConfig strategy_;
  std::set<std::string> visited_rooms_;
  std::set<std::string> traversed_doors_;
  std::vector<std::string> entry_stack_;
};

}  // namespace wayfinder
