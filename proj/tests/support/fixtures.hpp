#pragma once

// Shared fixtures: file loading, the shipped scenario files, and small
// hand-built plans for focused tests.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wayfinder/scenario.hpp"

#ifndef WAYFINDER_SCENARIO_DIR
#define WAYFINDER_SCENARIO_DIR "scenarios"
#endif

namespace wayfinder::test {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string scenario_path(const std::string& name) {
  return std::string(WAYFINDER_SCENARIO_DIR) + "/" + name;
}

inline Scenario load_scenario(const std::string& name) {
  return parse_scenario(read_file(scenario_path(name)));
}

inline Room rect_room(std::string id, double x0, double y0, double x1, double y1,
                      RoomClass cls = RoomClass::common) {
  Room room;
  room.id = std::move(id);
  room.cls = cls;
  room.boundary.vertices = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  return room;
}

}  // namespace wayfinder::test
