// wayfinder CLI: validate scenario files, run simulations, render SVG
// figures. Thin shell over the library; exit codes are 0 success,
// 1 validation failure, 2 run failure, 3 I/O failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wayfinder/errors.hpp"
#include "wayfinder/render.hpp"
#include "wayfinder/scenario.hpp"
#include "wayfinder/sim.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRunFailure = 2;
constexpr int kExitIo = 3;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << content;
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

struct Overrides {
  std::optional<double> dt;
  std::optional<long> step_limit;
  std::optional<int> ellipse_samples;
  bool no_circulation_preference = false;
  std::optional<std::uint64_t> seed;  // reserved; the model is deterministic
};

void apply_overrides(wayfinder::Scenario& scenario, const Overrides& ov, wayfinder::SimParams& params) {
  if (ov.dt) params.dt = *ov.dt;
  if (ov.step_limit) params.step_limit = *ov.step_limit;
  for (wayfinder::AgentSpec& agent : scenario.agents) {
    if (ov.ellipse_samples) agent.strategy.n_ellipse_samples = *ov.ellipse_samples;
    if (ov.no_circulation_preference) agent.strategy.use_circulation_preference = false;
    if (ov.seed) agent.rng_seed = *ov.seed;
  }
}

int cmd_validate(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  try {
    const wayfinder::Scenario scenario = wayfinder::parse_scenario(text);
    std::cout << "OK: " << scenario.plan.rooms().size() << " rooms, "
              << scenario.plan.doors().size() << " doors, " << scenario.agents.size()
              << " agents\n";
    return kExitOk;
  } catch (const wayfinder::Error& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return kExitValidation;
  }
}

int cmd_run(const std::string& path, const std::string& out_dir, const Overrides& ov) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  wayfinder::Scenario scenario;
  try {
    scenario = wayfinder::parse_scenario(text);
  } catch (const wayfinder::Error& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return kExitValidation;
  }

  wayfinder::SimParams params;
  apply_overrides(scenario, ov, params);

  try {
    fs::create_directories(out_dir);
    const auto results = wayfinder::run_batch(scenario.plan, scenario.agents, params);
    bool all_exited = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const wayfinder::RunResult& r = results[i];
      const std::string& id = scenario.agents[i].id;
      write_file(fs::path(out_dir) / (id + "_run.json"), wayfinder::run_result_to_json(r, id));
      write_file(fs::path(out_dir) / (id + "_trajectory.csv"),
                 wayfinder::trajectory_to_csv(r.trajectory));
      std::cout << "agent " << id << ": outcome=" << wayfinder::to_string(r.outcome)
                << " path_length=" << r.path_length << " rooms_visited=" << r.rooms_visited.size()
                << " backtracks=" << r.backtrack_count() << "\n";
      all_exited = all_exited && r.outcome == wayfinder::RunOutcome::exited;
    }
    return all_exited ? kExitOk : kExitRunFailure;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const wayfinder::Error& e) {
    std::cerr << "run failed: " << e.what() << "\n";
    return kExitRunFailure;
  }
}

int cmd_render(const std::string& path, const std::string& out_dir, const std::string& run_dump) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  wayfinder::Scenario scenario;
  try {
    scenario = wayfinder::parse_scenario(text);
  } catch (const wayfinder::Error& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    std::optional<wayfinder::Trajectory> trajectory;
    if (!run_dump.empty()) {
      trajectory = wayfinder::trajectory_from_run_json(read_file(run_dump));
    }
    fs::create_directories(out_dir);
    const fs::path out = fs::path(out_dir) / (fs::path(path).stem().string() + ".svg");
    write_file(out, wayfinder::render_svg(scenario.plan, scenario.agents,
                                          trajectory ? &*trajectory : nullptr));
    std::cout << "wrote " << out.string() << "\n";
    return kExitOk;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const wayfinder::Error& e) {
    std::cerr << "render failed: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wayfinder - floorplan wayfinding simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = ".";
  std::string run_dump;
  Overrides ov;

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
  validate->add_option("scenario", scenario_path, "Scenario JSON file")->required();

  CLI::App* run = app.add_subcommand("run", "Simulate every agent in a scenario");
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out", out_dir, "Output directory for dumps and CSV files");
  double dt = 0.0;
  long step_limit = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  run->add_option("--dt", dt, "Tick length in seconds")->check(CLI::PositiveNumber);
  run->add_option("--step-limit", step_limit, "Maximum movement ticks")->check(CLI::PositiveNumber);
  run->add_option("--ellipse-samples", samples, "Goal boundary samples per path query")
      ->check(CLI::Range(8, 100000));
  run->add_flag("--no-circulation-preference", ov.no_circulation_preference,
                "Disable the circulation-room strategy for all agents");
  run->add_option("--seed", seed, "Reserved; the current model is deterministic");

  CLI::App* render = app.add_subcommand("render", "Render the floor plan (and a run) as SVG");
  render->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  render->add_option("--out", out_dir, "Output directory for the SVG");
  render->add_option("--run", run_dump, "Run dump JSON to overlay as a trajectory");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    if (run->count("--dt") > 0) ov.dt = dt;
    if (run->count("--step-limit") > 0) ov.step_limit = step_limit;
    if (run->count("--ellipse-samples") > 0) ov.ellipse_samples = samples;
    if (run->count("--seed") > 0) ov.seed = seed;
    return cmd_run(scenario_path, out_dir, ov);
  }
  if (validate->parsed()) return cmd_validate(scenario_path);
  if (render->parsed()) return cmd_render(scenario_path, out_dir, run_dump);
  return kExitOk;
}
