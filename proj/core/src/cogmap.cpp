#include "wayfinder/cogmap.hpp"

#include <stdexcept>

#include "wayfinder/errors.hpp"

namespace wayfinder {

CognitiveMap::CognitiveMap(std::vector<GoalEllipse> goal_ellipses,
                           std::map<std::string, RoomClass> known_classes,
                           StrategyConfig strategy)
    : goal_ellipses_(std::move(goal_ellipses)),
      known_classes_(std::move(known_classes)),
      strategy_(strategy) {
  if (goal_ellipses_.empty()) {
    throw std::invalid_argument("CognitiveMap: at least one goal ellipse is required");
  }
  if (strategy_.n_ellipse_samples < 8) {
    throw std::invalid_argument("CognitiveMap: n_ellipse_samples must be >= 8");
  }
}

std::optional<RoomClass> CognitiveMap::class_of(const std::string& room_id) const {
  const auto it = known_classes_.find(room_id);
  if (it == known_classes_.end()) return std::nullopt;
  return it->second;
}

void CognitiveMap::record_entry(const std::string& room_id, const std::string& via_door) {
  visited_rooms_.insert(room_id);
  traversed_doors_.insert(via_door);
  entry_stack_.push_back(via_door);
}

std::string CognitiveMap::pop_entry() {
  if (entry_stack_.empty()) {
    throw EmptyStackError("pop_entry: traversal stack is empty");
  }
  std::string door = entry_stack_.back();
  entry_stack_.pop_back();
  return door;
}

}  // namespace wayfinder
