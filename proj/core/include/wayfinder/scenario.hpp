#pragma once

// Scenario file I/O. A scenario is a single UTF-8 JSON document with the
// top-level keys `meta`, `rooms`, `doors` and `agents`; coordinates are in
// meters. Parsing is strict: unknown keys are rejected to catch typos.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wayfinder/cogmap.hpp"
#include "wayfinder/floorplan.hpp"

namespace wayfinder {

struct AgentSpec {
  std::string id;
  Point2 start;
  std::vector<GoalEllipse> goal_ellipses;
  StrategyConfig strategy;
  std::uint64_t rng_seed = 0;  // reserved; the model is deterministic

  bool operator==(const AgentSpec&) const = default;
};

struct Scenario {
  FloorPlan plan;
  std::vector<AgentSpec> agents;

  bool operator==(const Scenario&) const = default;
};

// Builds the per-agent knowledge state for a run. With the circulation
// preference enabled the agent can tell room classes apart building-wide;
// without it the class map stays empty.
CognitiveMap make_cognitive_map(const AgentSpec& spec, const FloorPlan& plan);

/// Parses and validates a scenario document.
/// Throws ParseError on malformed JSON (message carries line/column) and
/// ValidationError, naming the entity, on any model violation.
Scenario parse_scenario(std::string_view text);

/// Inverse of parse_scenario up to formatting; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace wayfinder
