#pragma once

// Building model: rooms, doors, classifications, and the room adjacency
// structure. A FloorPlan is immutable once validated and may be shared
// across concurrent simulation runs.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wayfinder/geometry.hpp"

namespace wayfinder {

// Reserved id for the exterior pseudo-room. A door whose room_b equals this
// id is an exit; reaching it terminates a run.
inline constexpr std::string_view kOutsideId = "outside";

// Door endpoints must sit on both room boundaries within this tolerance.
inline constexpr double kDoorBoundaryEps = 1e-6;

enum class RoomClass { circulation, common, outside };

std::string_view to_string(RoomClass cls);
RoomClass room_class_from_string(std::string_view name);  // throws ValidationError

struct Room {
  std::string id;
  Polygon boundary;
  RoomClass cls = RoomClass::common;

  bool operator==(const Room&) const = default;
};

// A door is a gap in the shared wall between two rooms (or between a room
// and the outside). Agents path through its midpoint.
struct Door {
  std::string id;
  Segment segment;
  std::string room_a;
  std::string room_b;  // room id or kOutsideId

  bool operator==(const Door&) const = default;

  Point2 midpoint() const { return segment.midpoint(); }
  bool leads_outside() const { return room_b == kOutsideId; }
  // The room on the far side, seen from `from`.
  const std::string& other_room(std::string_view from) const {
    return room_a == from ? room_b : room_a;
  }
};

class FloorPlan {
 public:
  FloorPlan() = default;  // empty; real plans come from validated()

  // Checks every model invariant (ids, polygons, door placement, room
  // overlap, adjacency connectivity) and throws ValidationError naming the
  // offending entity. Rooms and doors are kept sorted by id.
  static FloorPlan validated(std::vector<Room> rooms, std::vector<Door> doors);

  const std::vector<Room>& rooms() const { return rooms_; }
  const std::vector<Door>& doors() const { return doors_; }

  const Room& room(std::string_view id) const;  // throws ValidationError if absent
  const Door& door(std::string_view id) const;
  const Room* find_room(std::string_view id) const;

  // All doors incident to the room, ordered by id.
  std::vector<Door> doors_of(std::string_view room_id) const;
  std::vector<std::string> exit_door_ids() const;

  bool operator==(const FloorPlan&) const = default;

 private:
  std::vector<Room> rooms_;
  std::vector<Door> doors_;
};

// The room's boundary with door segments subtracted; doors are gaps whose
// jambs remain wall endpoints. Pieces shorter than kPointEps are dropped.
std::vector<Segment> walls_of(const Room& room, std::span<const Door> doors);

// Id of the room containing p. Boundary points resolve to the
// lexicographically smallest room id. Throws OutsideAllRoomsError.
std::string locate_room(const Point2& p, const FloorPlan& plan);

// Door-to-door graph used for connectivity checks and diagnostics: door
// midpoints plus one interior node per room, weighted by in-room shortest
// path lengths against walls_of.
struct NavGraph {
  enum class NodeKind { door, room };

  struct Node {
    NodeKind kind = NodeKind::door;
    std::string id;
    Point2 pos;
  };

  struct Edge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;

  bool is_connected() const;
};

NavGraph build_nav_graph(const FloorPlan& plan);

}  // namespace wayfinder
