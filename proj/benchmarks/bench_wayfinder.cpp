#include <random>

#include <benchmark/benchmark.h>

#include "wayfinder/floorplan.hpp"
#include "wayfinder/geometry.hpp"
#include "wayfinder/scenario.hpp"
#include "wayfinder/sim.hpp"
#include "wayfinder/wayfinding.hpp"

#ifndef WAYFINDER_SCENARIO_DIR
#define WAYFINDER_SCENARIO_DIR "scenarios"
#endif

#include <fstream>
#include <sstream>

namespace {

using namespace wayfinder;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scenario scenario1() {
  return parse_scenario(read_file(std::string(WAYFINDER_SCENARIO_DIR) + "/scenario1.json"));
}

// A fixed 20-wall scene, start 14 m from the goal.
struct Scene {
  std::vector<Segment> walls;
  GoalEllipse goal{{16.0, 10.0}, 2.0, 1.2, 0.6};
  Point2 start{2.0, 2.0};

  Scene() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (walls.size() < 20) {
      const Point2 a{1 + 16 * unit(rng), 1 + 16 * unit(rng)};
      const Point2 b{a.x + 4 * (unit(rng) - 0.5), a.y + 4 * (unit(rng) - 0.5)};
      const Segment w{a, b};
      if (w.length() < 1.0) continue;
      if (point_segment_distance(start, w) < 0.8) continue;
      if (point_segment_distance(goal.center, w) < 3.0) continue;
      walls.push_back(w);
    }
  }
};

const Scene& scene() {
  static const Scene s;
  return s;
}

void BM_ShortestPathToEllipse(benchmark::State& state) {
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        shortest_path_to_ellipse(scene().start, scene().goal, scene().walls, samples).length);
  }
}
BENCHMARK(BM_ShortestPathToEllipse)->Arg(16)->Arg(64)->Arg(256);

void BM_GridPathOracle(benchmark::State& state) {
  const double cell = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_path_oracle(scene().start, scene().goal, scene().walls, cell));
  }
}
BENCHMARK(BM_GridPathOracle)->Arg(10)->Arg(20);

void BM_ScoreDoors(benchmark::State& state) {
  const Scenario s = scenario1();
  const CognitiveMap map = make_cognitive_map(s.agents[0], s.plan);
  const Room& room = s.plan.room("corr_mid");
  for (auto _ : state) {
    benchmark::DoNotOptimize(score_doors(room, s.plan, map, {5, 7}));
  }
}
BENCHMARK(BM_ScoreDoors);

void BM_RunScenario1(benchmark::State& state) {
  const Scenario s = scenario1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_agent(s.plan, s.agents[0]).path_length);
  }
}
BENCHMARK(BM_RunScenario1);

}  // namespace

BENCHMARK_MAIN();
