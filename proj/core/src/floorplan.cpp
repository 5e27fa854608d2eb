#include "wayfinder/floorplan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "wayfinder/errors.hpp"

namespace wayfinder {

namespace {

bool finite_point(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void validate_polygon(const Polygon& poly, const std::string& entity) {
  if (poly.vertices.size() < 3) throw ValidationError(entity, "polygon needs at least 3 vertices");
  for (const Point2& v : poly.vertices) {
    if (!finite_point(v)) throw ValidationError(entity, "polygon has non-finite coordinates");
  }
  const double area = polygon_signed_area(poly);
  if (std::abs(area) <= kPointEps) throw ValidationError(entity, "polygon has zero area");
  if (area < 0.0) throw ValidationError(entity, "polygon vertices must be counter-clockwise");
  if (!polygon_is_simple(poly)) throw ValidationError(entity, "polygon is self-intersecting");
}

// The polygon edge carrying both door endpoints, if any.
const Segment* edge_containing(const std::vector<Segment>& edges, const Segment& door) {
  for (const Segment& e : edges) {
    if (on_segment(door.a, e, kDoorBoundaryEps) && on_segment(door.b, e, kDoorBoundaryEps)) {
      return &e;
    }
  }
  return nullptr;
}

// Strict transversal crossing; collinear contact is a legal shared wall.
bool edges_properly_cross(const Segment& s, const Segment& w) {
  const int d1 = orientation(w.a, w.b, s.a);
  const int d2 = orientation(w.a, w.b, s.b);
  const int d3 = orientation(s.a, s.b, w.a);
  const int d4 = orientation(s.a, s.b, w.b);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

bool interiors_overlap(const Polygon& a, const Polygon& b) {
  const auto ea = polygon_edges(a);
  const auto eb = polygon_edges(b);
  for (const Segment& sa : ea) {
    for (const Segment& sb : eb) {
      if (edges_properly_cross(sa, sb)) return true;
    }
  }
  // Containment without edge crossings: probe vertices and edge midpoints.
  for (const Segment& sa : ea) {
    if (polygon_contains_strict(b, sa.a) || polygon_contains_strict(b, sa.midpoint())) return true;
  }
  for (const Segment& sb : eb) {
    if (polygon_contains_strict(a, sb.a) || polygon_contains_strict(a, sb.midpoint())) return true;
  }
  return false;
}

}  // namespace

std::string_view to_string(RoomClass cls) {
  switch (cls) {
    case RoomClass::circulation:
      return "circulation";
    case RoomClass::common:
      return "common";
    case RoomClass::outside:
      return "outside";
  }
  return "common";
}

RoomClass room_class_from_string(std::string_view name) {
  if (name == "circulation") return RoomClass::circulation;
  if (name == "common") return RoomClass::common;
  if (name == "outside") return RoomClass::outside;
  throw ValidationError(std::string(name), "unknown room class (expected circulation, common or outside)");
}

FloorPlan FloorPlan::validated(std::vector<Room> rooms, std::vector<Door> doors) {
  if (rooms.empty()) throw ValidationError("plan", "a floor plan needs at least one room");

  std::sort(rooms.begin(), rooms.end(), [](const Room& a, const Room& b) { return a.id < b.id; });
  std::sort(doors.begin(), doors.end(), [](const Door& a, const Door& b) { return a.id < b.id; });

  std::set<std::string> room_ids;
  int outside_count = 0;
  for (const Room& r : rooms) {
    if (r.id.empty()) throw ValidationError("room", "empty room id");
    if (!room_ids.insert(r.id).second) throw ValidationError(r.id, "duplicate room id");
    validate_polygon(r.boundary, r.id);
    if (r.cls == RoomClass::outside) {
      ++outside_count;
      if (outside_count > 1) throw ValidationError(r.id, "only one room may have class outside");
      if (r.id != kOutsideId) {
        throw ValidationError(r.id, "a room with class outside must use the reserved id \"outside\"");
      }
    } else if (r.id == kOutsideId) {
      throw ValidationError(r.id, "the id \"outside\" is reserved for the exterior room");
    }
  }

  const auto room_by_id = [&](std::string_view id) -> const Room* {
    for (const Room& r : rooms) {
      if (r.id == id) return &r;
    }
    return nullptr;
  };

  std::set<std::string> door_ids;
  for (const Door& d : doors) {
    if (d.id.empty()) throw ValidationError("door", "empty door id");
    if (!door_ids.insert(d.id).second) throw ValidationError(d.id, "duplicate door id");
    if (!finite_point(d.segment.a) || !finite_point(d.segment.b)) {
      throw ValidationError(d.id, "door endpoints must be finite");
    }
    if (d.segment.length() <= kPointEps) throw ValidationError(d.id, "door segment has zero length");
    if (d.room_a == d.room_b) throw ValidationError(d.id, "door connects a room to itself");
    if (d.room_a == kOutsideId) {
      throw ValidationError(d.id, "room_a must be a real room; put \"outside\" in room_b");
    }
    const Room* a = room_by_id(d.room_a);
    if (a == nullptr || a->cls == RoomClass::outside) {
      throw ValidationError(d.id, "unknown room id \"" + d.room_a + "\" in room_a");
    }
    if (edge_containing(polygon_edges(a->boundary), d.segment) == nullptr) {
      throw ValidationError(d.id, "door segment does not lie on the boundary of room \"" + d.room_a + "\"");
    }
    if (d.room_b != kOutsideId) {
      const Room* b = room_by_id(d.room_b);
      if (b == nullptr || b->cls == RoomClass::outside) {
        throw ValidationError(d.id, "unknown room id \"" + d.room_b + "\" in room_b");
      }
      if (edge_containing(polygon_edges(b->boundary), d.segment) == nullptr) {
        throw ValidationError(d.id, "door segment does not lie on the boundary of room \"" + d.room_b + "\"");
      }
    }
  }

  for (std::size_t i = 0; i < rooms.size(); ++i) {
    for (std::size_t j = i + 1; j < rooms.size(); ++j) {
      if (interiors_overlap(rooms[i].boundary, rooms[j].boundary)) {
        throw ValidationError(rooms[i].id, "room interior overlaps room \"" + rooms[j].id + "\"");
      }
    }
  }

  // Adjacency connectivity over rooms plus the outside node.
  {
    std::map<std::string, std::vector<std::string>> adj;
    for (const Room& r : rooms) adj[r.id];
    bool has_exterior = false;
    for (const Door& d : doors) {
      adj[d.room_a].push_back(d.room_b);
      adj[std::string(d.room_b)].push_back(d.room_a);
      if (d.leads_outside()) has_exterior = true;
    }
    if (has_exterior) adj[std::string(kOutsideId)];

    std::set<std::string> seen;
    std::vector<std::string> stack{rooms.front().id};
    seen.insert(rooms.front().id);
    while (!stack.empty()) {
      const std::string cur = stack.back();
      stack.pop_back();
      for (const std::string& next : adj[cur]) {
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    for (const auto& [id, _] : adj) {
      if (!seen.contains(id)) {
        throw ValidationError(id, "not connected to the rest of the floor plan");
      }
    }
  }

  FloorPlan plan;
  plan.rooms_ = std::move(rooms);
  plan.doors_ = std::move(doors);
  return plan;
}

const Room* FloorPlan::find_room(std::string_view id) const {
  const auto it = std::lower_bound(rooms_.begin(), rooms_.end(), id,
                                   [](const Room& r, std::string_view v) { return r.id < v; });
  if (it != rooms_.end() && it->id == id) return &*it;
  return nullptr;
}

const Room& FloorPlan::room(std::string_view id) const {
  const Room* r = find_room(id);
  if (r == nullptr) throw ValidationError(std::string(id), "unknown room id");
  return *r;
}

const Door& FloorPlan::door(std::string_view id) const {
  const auto it = std::lower_bound(doors_.begin(), doors_.end(), id,
                                   [](const Door& d, std::string_view v) { return d.id < v; });
  if (it == doors_.end() || it->id != id) throw ValidationError(std::string(id), "unknown door id");
  return *it;
}

std::vector<Door> FloorPlan::doors_of(std::string_view room_id) const {
  std::vector<Door> out;
  for (const Door& d : doors_) {
    if (d.room_a == room_id || d.room_b == room_id) out.push_back(d);
  }
  return out;  // doors_ is id-sorted
}

std::vector<std::string> FloorPlan::exit_door_ids() const {
  std::vector<std::string> out;
  for (const Door& d : doors_) {
    if (d.leads_outside()) out.push_back(d.id);
  }
  return out;
}

std::vector<Segment> walls_of(const Room& room, std::span<const Door> doors) {
  std::vector<Segment> out;
  for (const Segment& edge : polygon_edges(room.boundary)) {
    const Point2 dir = edge.b - edge.a;
    const double len = edge.length();
    const auto param = [&](const Point2& p) {
      return ((p.x - edge.a.x) * dir.x + (p.y - edge.a.y) * dir.y) / len;
    };

    std::vector<std::pair<double, double>> gaps;
    for (const Door& d : doors) {
      if (!on_segment(d.segment.a, edge, kDoorBoundaryEps) ||
          !on_segment(d.segment.b, edge, kDoorBoundaryEps)) {
        continue;
      }
      double t0 = std::clamp(param(d.segment.a), 0.0, len);
      double t1 = std::clamp(param(d.segment.b), 0.0, len);
      if (t0 > t1) std::swap(t0, t1);
      gaps.emplace_back(t0, t1);
    }
    std::sort(gaps.begin(), gaps.end());

    const Point2 unit = dir * (1.0 / len);
    const auto at = [&](double t) { return edge.a + unit * t; };
    double cursor = 0.0;
    for (const auto& [lo, hi] : gaps) {
      if (lo - cursor > kPointEps) out.push_back({at(cursor), at(lo)});
      cursor = std::max(cursor, hi);
    }
    if (len - cursor > kPointEps) out.push_back({at(cursor), edge.b});
  }
  return out;
}

std::string locate_room(const Point2& p, const FloorPlan& plan) {
  for (const Room& r : plan.rooms()) {  // id-sorted: boundary ties go to the smallest id
    if (polygon_contains(r.boundary, p)) return r.id;
  }
  throw OutsideAllRoomsError("locate_room: point (" + std::to_string(p.x) + ", " +
                             std::to_string(p.y) + ") is outside all rooms");
}

bool NavGraph::is_connected() const {
  if (nodes.empty()) return true;
  std::vector<std::vector<int>> adj(nodes.size());
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == nodes.size();
}

NavGraph build_nav_graph(const FloorPlan& plan) {
  NavGraph g;
  std::map<std::string, int> door_node;
  for (const Door& d : plan.doors()) {
    door_node[d.id] = static_cast<int>(g.nodes.size());
    g.nodes.push_back({NavGraph::NodeKind::door, d.id, d.midpoint()});
  }

  for (const Room& room : plan.rooms()) {
    if (room.cls == RoomClass::outside) continue;
    const std::vector<Door> doors = plan.doors_of(room.id);
    const std::vector<Segment> walls = walls_of(room, doors);

    const int room_idx = static_cast<int>(g.nodes.size());
    g.nodes.push_back({NavGraph::NodeKind::room, room.id, polygon_interior_point(room.boundary)});

    for (std::size_t i = 0; i < doors.size(); ++i) {
      for (std::size_t j = i + 1; j < doors.size(); ++j) {
        try {
          const double w = shortest_path_between(doors[i].midpoint(), doors[j].midpoint(), walls).length;
          g.edges.push_back({door_node[doors[i].id], door_node[doors[j].id], w});
        } catch (const UnreachableError&) {
          // malformed room geometry; the doors stay unlinked
        }
      }
      try {
        const double w = shortest_path_between(g.nodes[room_idx].pos, doors[i].midpoint(), walls).length;
        g.edges.push_back({room_idx, door_node[doors[i].id], w});
      } catch (const UnreachableError&) {
      }
    }
  }
  return g;
}

}  // namespace wayfinder
