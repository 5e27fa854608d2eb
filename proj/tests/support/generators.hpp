#pragma once

// Deterministic random instance generators shared by the unit and
// acceptance suites: open scenes (walls + ellipse + start) for the geometry
// cross-checks, and grid-based floor plans for parser and termination runs.

#include <algorithm>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "wayfinder/floorplan.hpp"
#include "wayfinder/geometry.hpp"
#include "wayfinder/scenario.hpp"

namespace wayfinder::test {

struct RandomScene {
  std::vector<Segment> walls;
  GoalEllipse ellipse;
  Point2 start;
};

inline double segment_gap(const Segment& a, const Segment& b) {
  return std::min(std::min(point_segment_distance(a.a, b), point_segment_distance(a.b, b)),
                  std::min(point_segment_distance(b.a, a), point_segment_distance(b.b, a)));
}

// Open scene in [0,20]^2. Clearances keep the grid oracle's wall fattening
// (one cell per side) from closing any passage the exact path can use.
inline RandomScene make_random_scene(std::mt19937_64& rng, int max_walls = 20) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RandomScene scene;

  scene.ellipse.center = {4.0 + 12.0 * unit(rng), 4.0 + 12.0 * unit(rng)};
  scene.ellipse.semi_major = 0.8 + 1.7 * unit(rng);
  scene.ellipse.semi_minor = 0.5 + (scene.ellipse.semi_major - 0.5) * unit(rng);
  scene.ellipse.rotation = std::numbers::pi * 0.999 * unit(rng);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Point2 p{0.5 + 19.0 * unit(rng), 0.5 + 19.0 * unit(rng)};
    const double gap = distance(p, scene.ellipse.center) - scene.ellipse.semi_major;
    if (gap >= 6.0 && gap <= 14.0) {
      scene.start = p;
      break;
    }
  }

  const int wall_count = static_cast<int>(unit(rng) * (max_walls + 1));
  for (int i = 0; i < wall_count; ++i) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      const Point2 a{1.0 + 18.0 * unit(rng), 1.0 + 18.0 * unit(rng)};
      const double angle = 2.0 * std::numbers::pi * unit(rng);
      const double len = 1.0 + 4.0 * unit(rng);
      const Point2 b{a.x + std::cos(angle) * len, a.y + std::sin(angle) * len};
      if (b.x < 1.0 || b.x > 19.0 || b.y < 1.0 || b.y > 19.0) continue;
      const Segment w{a, b};
      if (point_segment_distance(scene.start, w) < 0.5) continue;
      if (point_segment_distance(scene.ellipse.center, w) < scene.ellipse.semi_major + 0.4) continue;
      bool clear = true;
      for (const Segment& other : scene.walls) {
        if (segment_gap(w, other) < 0.3) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      scene.walls.push_back(w);
      break;
    }
  }
  return scene;
}

// Rectangular-grid floor plan with a spanning tree of doors (plus extras),
// one exit on the building boundary, and a single agent.
inline Scenario make_random_scenario(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int cols = 2 + static_cast<int>(unit(rng) * 3);
  const int rows = 2 + static_cast<int>(unit(rng) * 3);

  std::vector<double> xs{0.0};
  std::vector<double> ys{0.0};
  for (int c = 0; c < cols; ++c) xs.push_back(xs.back() + 3.0 + 3.0 * unit(rng));
  for (int r = 0; r < rows; ++r) ys.push_back(ys.back() + 3.0 + 3.0 * unit(rng));

  const auto room_id = [&](int c, int r) {
    return "r" + std::to_string(c) + std::to_string(r);
  };

  std::vector<Room> rooms;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Room room;
      room.id = room_id(c, r);
      room.cls = unit(rng) < 0.35 ? RoomClass::circulation : RoomClass::common;
      room.boundary.vertices = {{xs[c], ys[r]}, {xs[c + 1], ys[r]}, {xs[c + 1], ys[r + 1]}, {xs[c], ys[r + 1]}};
      rooms.push_back(std::move(room));
    }
  }

  // Grid edges; a shuffled Kruskal yields the spanning tree.
  struct GridEdge {
    int c0, r0, c1, r1;
  };
  std::vector<GridEdge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({c, r, c + 1, r});
      if (r + 1 < rows) edges.push_back({c, r, c, r + 1});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);

  std::vector<int> parent(static_cast<std::size_t>(cols) * rows);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const auto cell = [&](int c, int r) { return r * cols + c; };

  int door_seq = 0;
  std::vector<Door> doors;
  const auto add_door = [&](const GridEdge& e) {
    Door d;
    d.id = "d" + std::string(door_seq < 10 ? "0" : "") + std::to_string(door_seq);
    ++door_seq;
    d.room_a = room_id(e.c0, e.r0);
    d.room_b = room_id(e.c1, e.r1);
    if (e.c1 != e.c0) {  // vertical shared edge at xs[c1]
      const double lo = ys[e.r0];
      const double hi = ys[e.r0 + 1];
      const double width = 0.8 + 0.3 * unit(rng);
      const double center = lo + 0.6 + width / 2.0 + (hi - lo - 1.2 - width) * unit(rng);
      d.segment = {{xs[e.c1], center - width / 2.0}, {xs[e.c1], center + width / 2.0}};
    } else {  // horizontal shared edge at ys[r1]
      const double lo = xs[e.c0];
      const double hi = xs[e.c0 + 1];
      const double width = 0.8 + 0.3 * unit(rng);
      const double center = lo + 0.6 + width / 2.0 + (hi - lo - 1.2 - width) * unit(rng);
      d.segment = {{center - width / 2.0, ys[e.r1]}, {center + width / 2.0, ys[e.r1]}};
    }
    doors.push_back(std::move(d));
  };

  for (const GridEdge& e : edges) {
    const int a = find(cell(e.c0, e.r0));
    const int b = find(cell(e.c1, e.r1));
    if (a != b) {
      parent[a] = b;
      add_door(e);
    } else if (unit(rng) < 0.3) {
      add_door(e);
    }
  }

  // Exit from a random boundary room through the building's outer wall.
  {
    const int c = static_cast<int>(unit(rng) * cols);
    Door d;
    d.id = "dexit";
    d.room_a = room_id(c, 0);
    d.room_b = std::string(kOutsideId);
    const double lo = xs[c];
    const double hi = xs[c + 1];
    const double width = 1.0;
    const double center = lo + 0.6 + width / 2.0 + (hi - lo - 1.2 - width) * unit(rng);
    d.segment = {{center - width / 2.0, 0.0}, {center + width / 2.0, 0.0}};
    doors.push_back(std::move(d));
  }
  const Point2 exit_mid = doors.back().midpoint();

  AgentSpec agent;
  agent.id = "agent";
  const int sc = static_cast<int>(unit(rng) * cols);
  const int sr = static_cast<int>(unit(rng) * rows);
  agent.start = {(xs[sc] + xs[sc + 1]) / 2.0, (ys[sr] + ys[sr + 1]) / 2.0};
  GoalEllipse goal;
  goal.center = exit_mid;
  goal.semi_major = 1.5;
  goal.semi_minor = 0.6 + 0.9 * unit(rng);
  goal.rotation = std::numbers::pi * 0.999 * unit(rng);
  agent.goal_ellipses.push_back(goal);
  agent.strategy.use_circulation_preference = unit(rng) < 0.5;
  agent.strategy.n_ellipse_samples = 16 + static_cast<int>(unit(rng) * 3) * 16;
  agent.rng_seed = rng();

  return Scenario{FloorPlan::validated(std::move(rooms), std::move(doors)), {std::move(agent)}};
}

}  // namespace wayfinder::test
