#include "wayfinder/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <stdexcept>

#include <json.hpp>

#include "wayfinder/errors.hpp"

namespace wayfinder {

namespace {

using nlohmann::json;

// Inward offset for boundary points so that in-room paths may run parallel
// to a wall the point sits on. Far below every model tolerance.
constexpr double kInsetDelta = 1e-6;

// Helper node just inside the room for a point lying on the boundary.
// Returns false when the point is interior (no helper needed).
bool inward_inset(const Point2& p, const Room& room, Point2& out) {
  for (const Segment& edge : polygon_edges(room.boundary)) {
    if (!on_segment(p, edge)) continue;
    const double len = edge.length();
    if (len <= kPointEps) continue;
    const Point2 dir = (edge.b - edge.a) * (1.0 / len);
    // CCW polygon: the interior lies to the left of the edge.
    const Point2 candidate{p.x - dir.y * kInsetDelta, p.y + dir.x * kInsetDelta};
    if (polygon_contains(room.boundary, candidate)) {
      out = candidate;
      return true;
    }
  }
  return false;
}

json sample_to_json(const TrajectorySample& s) {
  return json::array({s.t, s.pos.x, s.pos.y, s.room});
}

}  // namespace

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::enter_room:
      return "enter_room";
    case EventKind::choose_door:
      return "choose_door";
    case EventKind::backtrack:
      return "backtrack";
    case EventKind::reach_ellipse:
      return "reach_ellipse";
    case EventKind::exit:
      return "exit";
  }
  return "enter_room";
}

std::string_view to_string(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::exited:
      return "exited";
    case RunOutcome::no_route:
      return "no_route";
    case RunOutcome::step_limit:
      return "step_limit";
  }
  return "no_route";
}

long RunResult::backtrack_count() const {
  return std::count_if(trajectory.events.begin(), trajectory.events.end(),
                       [](const Event& e) { return e.kind == EventKind::backtrack; });
}

std::vector<Point2> plan_waypoints(const Point2& from, const Point2& to, const Room& room,
                                   std::span<const Door> doors) {
  if (distance(from, to) <= kPointEps) return {from};

  // Full boundary as obstacles: wall pieces plus the door segments. Points
  // on the boundary still connect inward because endpoint contact with an
  // obstacle never blocks.
  std::vector<Segment> obstacles = walls_of(room, doors);
  for (const Door& d : doors) obstacles.push_back(d.segment);

  std::vector<Point2> targets{to};
  Point2 inset;
  if (inward_inset(from, room, inset)) targets.push_back(inset);
  if (inward_inset(to, room, inset)) targets.push_back(inset);

  // Node 0 is `from`, node 1 is `to`; extras only mediate.
  const VisibilityGraph g = build_visibility_graph(from, targets, obstacles);
  std::vector<std::vector<std::pair<int, double>>> adj(g.nodes.size());
  for (const auto& e : g.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  std::vector<double> dist(g.nodes.size(), std::numeric_limits<double>::infinity());
  std::vector<int> prev(g.nodes.size(), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0.0;
  heap.emplace(0.0, 0);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        prev[v] = u;
        heap.emplace(dist[v], v);
      }
    }
  }
  if (!std::isfinite(dist[1])) {
    throw UnreachableError("plan_waypoints: no in-room path from (" + std::to_string(from.x) +
                           ", " + std::to_string(from.y) + ") in room \"" + room.id + "\"");
  }
  std::vector<Point2> path;
  for (int v = 1; v != -1; v = prev[v]) path.push_back(g.nodes[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

RunResult run_agent(const FloorPlan& plan, const AgentSpec& spec, const SimParams& params) {
  if (params.dt <= 0.0) throw std::invalid_argument("run_agent: dt must be positive");
  if (params.speed <= 0.0) throw std::invalid_argument("run_agent: speed must be positive");
  if (params.step_limit < 1) throw std::invalid_argument("run_agent: step_limit must be >= 1");

  RunResult result;
  std::string room_id = locate_room(spec.start, plan);
  CognitiveMap map = make_cognitive_map(spec, plan);
  map.record_start(room_id);

  Point2 pos = spec.start;
  double t = 0.0;
  long steps = 0;

  result.trajectory.samples.push_back({t, pos, room_id});
  result.trajectory.events.push_back({t, EventKind::enter_room, room_id});
  result.rooms_visited.push_back(room_id);

  bool inside_goal = map.is_goal_reached(pos);
  if (inside_goal) result.trajectory.events.push_back({t, EventKind::reach_ellipse, room_id});

  // The visited-set plus stack discipline bounds the number of decisions;
  // exceeding this budget means the engine is broken, not the scenario.
  const long decision_budget = 4 * static_cast<long>(plan.doors().size() + plan.rooms().size()) + 64;

  while (true) {
    if (static_cast<long>(result.decisions.size()) > decision_budget) {
      throw Error("run_agent: decision budget exceeded; wayfinding invariant violated");
    }

    const Room& room = plan.room(room_id);
    Decision decision;
    try {
      decision = next_decision(plan, map, room, pos);
    } catch (const NoRouteFoundError&) {
      result.outcome = RunOutcome::no_route;
      break;
    }
    const Door& door = plan.door(decision.chosen);
    result.trajectory.events.push_back(
        {t,
         decision.mode == DecisionMode::backtrack ? EventKind::backtrack : EventKind::choose_door,
         decision.chosen});
    result.decisions.push_back({room_id, decision});

    const std::vector<Door> doors = plan.doors_of(room_id);
    const std::vector<Point2> waypoints = plan_waypoints(pos, door.midpoint(), room, doors);

    // Walk the polyline one tick at a time, stopping at each corner so the
    // samples trace the exact path.
    bool limit_hit = false;
    for (std::size_t seg = 1; seg < waypoints.size();) {
      if (steps >= params.step_limit) {
        limit_hit = true;
        break;
      }
      const double left = distance(pos, waypoints[seg]);
      const double budget = params.speed * params.dt;
      Point2 next;
      if (left <= budget + 1e-12) {
        next = waypoints[seg];
        ++seg;
      } else {
        next = pos + (waypoints[seg] - pos) * (budget / left);
      }
      t += params.dt;
      ++steps;
      result.path_length += distance(pos, next);
      pos = next;
      result.trajectory.samples.push_back({t, pos, room_id});

      const bool now_inside = map.is_goal_reached(pos);
      if (now_inside && !inside_goal) {
        result.trajectory.events.push_back({t, EventKind::reach_ellipse, room_id});
      }
      inside_goal = now_inside;
    }
    if (limit_hit) {
      result.outcome = RunOutcome::step_limit;
      break;
    }

    // Crossing: the agent stands on the door midpoint.
    if (door.leads_outside()) {
      result.trajectory.events.push_back({t, EventKind::exit, door.id});
      result.outcome = RunOutcome::exited;
      break;
    }
    const std::string next_room = door.other_room(room_id);
    if (decision.mode == DecisionMode::backtrack) {
      map.pop_entry();
    } else {
      map.record_entry(next_room, door.id);
    }
    room_id = next_room;
    result.trajectory.events.push_back({t, EventKind::enter_room, room_id});
    if (std::find(result.rooms_visited.begin(), result.rooms_visited.end(), room_id) ==
        result.rooms_visited.end()) {
      result.rooms_visited.push_back(room_id);
    }
  }

  result.final_visited_rooms.assign(map.visited_rooms().begin(), map.visited_rooms().end());
  result.final_traversed_doors.assign(map.traversed_doors().begin(), map.traversed_doors().end());
  return result;
}

std::vector<RunResult> run_batch(const FloorPlan& plan, std::span<const AgentSpec> agents,
                                 const SimParams& params) {
  std::vector<RunResult> results;
  results.reserve(agents.size());
  for (const AgentSpec& spec : agents) results.push_back(run_agent(plan, spec, params));
  return results;
}

std::string run_result_to_json(const RunResult& result, const std::string& agent_id) {
  json doc;
  doc["agent"] = agent_id;
  doc["outcome"] = std::string(to_string(result.outcome));
  doc["path_length"] = result.path_length;
  doc["rooms_visited"] = result.rooms_visited;
  doc["backtracks"] = result.backtrack_count();

  doc["samples"] = json::array();
  for (const TrajectorySample& s : result.trajectory.samples) {
    doc["samples"].push_back(sample_to_json(s));
  }

  doc["events"] = json::array();
  for (const Event& e : result.trajectory.events) {
    doc["events"].push_back(
        {{"t", e.t}, {"kind", std::string(to_string(e.kind))}, {"detail", e.detail}});
  }

  doc["decisions"] = json::array();
  for (const DecisionRecord& rec : result.decisions) {
    // Normalized diagnostic weights: shortest path over this one, 0 when
    // unreachable. Reported only; never used for the choice.
    double min_len = std::numeric_limits<double>::infinity();
    for (const DoorScore& s : rec.decision.all_scores) min_len = std::min(min_len, s.path_len);
    json scores = json::array();
    for (const DoorScore& s : rec.decision.all_scores) {
      json sj{{"door", s.door},
              {"leads_to_circulation", s.leads_to_circulation},
              {"visited_target", s.visited_target}};
      if (std::isfinite(s.path_len)) {
        sj["path_len"] = s.path_len;
        sj["weight"] = s.path_len > 0.0 && std::isfinite(min_len)
                           ? min_len / s.path_len
                           : 1.0;
      } else {
        sj["path_len"] = nullptr;
        sj["weight"] = 0.0;
      }
      scores.push_back(std::move(sj));
    }
    doc["decisions"].push_back({{"room", rec.room},
                                {"mode", std::string(to_string(rec.decision.mode))},
                                {"chosen", rec.decision.chosen},
                                {"scores", std::move(scores)}});
  }

  doc["cognitive_map"] = {{"visited_rooms", result.final_visited_rooms},
                          {"traversed_doors", result.final_traversed_doors}};

  return doc.dump(2) + "\n";
}

std::string trajectory_to_csv(const Trajectory& trajectory) {
  std::string out = "t,x,y,room_id\n";
  char buf[160];
  for (const TrajectorySample& s : trajectory.samples) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.9g,%.9g,", s.t, s.pos.x, s.pos.y);
    out += buf;
    out += s.room;
    out += '\n';
  }
  return out;
}

Trajectory trajectory_from_run_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  Trajectory traj;
  if (doc.contains("samples")) {
    for (const json& sj : doc["samples"]) {
      if (!sj.is_array() || sj.size() != 4) {
        throw ValidationError("samples", "each sample must be [t, x, y, room_id]");
      }
      traj.samples.push_back(
          {sj[0].get<double>(), {sj[1].get<double>(), sj[2].get<double>()}, sj[3].get<std::string>()});
    }
  }
  if (doc.contains("events")) {
    for (const json& ej : doc["events"]) {
      Event e;
      e.t = ej.at("t").get<double>();
      const std::string kind = ej.at("kind").get<std::string>();
      if (kind == "enter_room") {
        e.kind = EventKind::enter_room;
      } else if (kind == "choose_door") {
        e.kind = EventKind::choose_door;
      } else if (kind == "backtrack") {
        e.kind = EventKind::backtrack;
      } else if (kind == "reach_ellipse") {
        e.kind = EventKind::reach_ellipse;
      } else if (kind == "exit") {
        e.kind = EventKind::exit;
      } else {
        throw ValidationError("events", "unknown event kind \"" + kind + "\"");
      }
      e.detail = ej.value("detail", "");
      traj.events.push_back(std::move(e));
    }
  }
  return traj;
}

}  // namespace wayfinder
