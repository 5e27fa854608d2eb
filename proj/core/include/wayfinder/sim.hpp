#pragma once

// Run engine: waypoint locomotion at constant speed, trajectory and event
// recording, termination handling, and batch execution. Locomotion is
// deliberately simple polyline following; the model's substance lives in
// the wayfinding decisions.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wayfinder/scenario.hpp"
#include "wayfinder/wayfinding.hpp"

namespace wayfinder {

struct SimParams {
  double dt = 0.05;              // seconds per tick
  double speed = 1.0;            // meters per second
  long step_limit = 1'000'000;   // movement ticks before giving up
};

enum class EventKind { enter_room, choose_door, backtrack, reach_ellipse, exit };

std::string_view to_string(EventKind kind);

struct TrajectorySample {
  double t = 0.0;
  Point2 pos;
  std::string room;

  bool operator==(const TrajectorySample&) const = default;
};

struct Event {
  double t = 0.0;
  EventKind kind = EventKind::enter_room;
  std::string detail;  // room id, door id, or agent id depending on kind

  bool operator==(const Event&) const = default;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<Event> events;

  bool operator==(const Trajectory&) const = default;
};

enum class RunOutcome { exited, no_route, step_limit };

std::string_view to_string(RunOutcome outcome);

struct DecisionRecord {
  std::string room;
  Decision decision;
};

struct RunResult {
  Trajectory trajectory;
  RunOutcome outcome = RunOutcome::no_route;
  std::vector<std::string> rooms_visited;  // first-visit order, start room included
  double path_length = 0.0;                // polyline length of the samples
  std::vector<DecisionRecord> decisions;
  std::vector<std::string> final_visited_rooms;
  std::vector<std::string> final_traversed_doors;

  long backtrack_count() const;
};

/// Shortest in-room path between two points on or inside the room. The full
/// room boundary acts as obstacle so the path can never leave the room;
/// points sitting exactly on the boundary (door midpoints) get a tiny inward
/// helper node so paths along a wall line stay feasible.
std::vector<Point2> plan_waypoints(const Point2& from, const Point2& to, const Room& room,
                                   std::span<const Door> doors);

/// Runs one agent to termination: exited when it crosses an exit door,
/// no_route when it is stuck at its start with nothing left to try,
/// step_limit otherwise. Deterministic: equal inputs give equal results.
RunResult run_agent(const FloorPlan& plan, const AgentSpec& spec, const SimParams& params = {});

/// Independent runs over one plan, results in input order.
std::vector<RunResult> run_batch(const FloorPlan& plan, std::span<const AgentSpec> agents,
                                 const SimParams& params = {});

// Run-result dump (JSON, same conventions as scenario files) and the
// trajectory table (CSV with header t,x,y,room_id). Both are reproducible
// byte for byte.
std::string run_result_to_json(const RunResult& result, const std::string& agent_id);
std::string trajectory_to_csv(const Trajectory& trajectory);

/// Reads the samples and events back out of a run dump (for rendering).
Trajectory trajectory_from_run_json(std::string_view text);

}  // namespace wayfinder
