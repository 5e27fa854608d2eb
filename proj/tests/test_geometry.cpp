#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "wayfinder/errors.hpp"
#include "wayfinder/geometry.hpp"

using namespace wayfinder;

TEST_CASE("point_in_ellipse basic containment") {
  const GoalEllipse e{{0, 0}, 2.0, 1.0, 0.0};
  CHECK(point_in_ellipse({1, 0}, e));
  CHECK(point_in_ellipse({2, 0}, e));  // boundary counts as inside
  CHECK_FALSE(point_in_ellipse({0, 1.0001}, e));
}

TEST_CASE("point_in_ellipse respects rotation") {
  const GoalEllipse e{{3, 3}, 2.0, 0.5, std::numbers::pi / 4};
  // Along the rotated major axis.
  const Point2 tip{3 + 1.9 * std::cos(std::numbers::pi / 4), 3 + 1.9 * std::sin(std::numbers::pi / 4)};
  CHECK(point_in_ellipse(tip, e));
  // Same distance along the unrotated x axis falls outside the narrow cross-section.
  CHECK_FALSE(point_in_ellipse({3 + 1.9, 3}, e));
}

TEST_CASE("closest_point_on_ellipse on the major axis") {
  const auto r = closest_point_on_ellipse({4, 0}, {{0, 0}, 2.0, 1.0, 0.0});
  CHECK(r.distance == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.point.x == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(r.point.y) < 1e-9);
}

TEST_CASE("closest_point_on_ellipse circle reduces to radial projection") {
  const auto r = closest_point_on_ellipse({0, 5}, {{0, 0}, 1.0, 1.0, 0.0});
  CHECK(r.distance == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(r.point.x) < 1e-9);
  CHECK(r.point.y == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closest_point_on_ellipse matches dense boundary sampling") {
  const GoalEllipse e{{0, 0}, 2.0, 1.0, 0.0};
  const Point2 p{3, 3};
  const double brute = test::brute_force_ellipse_distance(p, e, 1'000'000);
  const auto r = closest_point_on_ellipse(p, e);
  CHECK(std::abs(r.distance - brute) <= 1e-6);
}

TEST_CASE("closest_point_on_ellipse rejects interior points") {
  CHECK_THROWS_AS(closest_point_on_ellipse({0.5, 0.1}, {{0, 0}, 2.0, 1.0, 0.0}),
                  PointInsideEllipseError);
}

TEST_CASE("closest point lies on the ellipse and matches sampling on random queries") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    GoalEllipse e;
    e.center = {unit(rng) * 10 - 5, unit(rng) * 10 - 5};
    e.semi_major = 0.5 + 3.0 * unit(rng);
    e.semi_minor = 0.1 + (e.semi_major - 0.1) * unit(rng);
    e.rotation = std::numbers::pi * 0.999 * unit(rng);
    const Point2 p{e.center.x + (unit(rng) - 0.5) * 20, e.center.y + (unit(rng) - 0.5) * 20};
    if (point_in_ellipse(p, e)) continue;

    const auto r = closest_point_on_ellipse(p, e);
    // The returned point satisfies the ellipse equation.
    const double c = std::cos(e.rotation), s = std::sin(e.rotation);
    const double dx = r.point.x - e.center.x, dy = r.point.y - e.center.y;
    const double u = (dx * c + dy * s) / e.semi_major;
    const double v = (-dx * s + dy * c) / e.semi_minor;
    CHECK(std::abs(u * u + v * v - 1.0) <= 1e-9);
    // And it is no farther than the best of 20k samples.
    const double brute = test::brute_force_ellipse_distance(p, e, 20'000);
    CHECK(r.distance <= brute + 1e-6);
    CHECK(r.distance >= brute - 1e-3);  // sampling is the coarse side
  }
}

TEST_CASE("segment_intersects_walls classification") {
  const std::vector<Segment> wall{{{2, -1}, {2, 1}}};
  CHECK_FALSE(segment_intersects_walls({{0, 0}, {1, 0}}, wall));  // disjoint
  CHECK(segment_intersects_walls({{0, 0}, {4, 0}}, wall));        // proper crossing
  CHECK_FALSE(segment_intersects_walls({{0, 0}, {2, -1}}, wall)); // shared endpoint only

  // Passing exactly through a wall endpoint does not block.
  CHECK_FALSE(segment_intersects_walls({{0, -1}, {4, -1}}, wall));
  // Collinear overlap blocks; collinear point-touch does not.
  const std::vector<Segment> horizontal{{{1, 0}, {2, 0}}};
  CHECK(segment_intersects_walls({{0, 0}, {3, 0}}, horizontal));
  CHECK_FALSE(segment_intersects_walls({{2, 0}, {3, 0}}, horizontal));
  // T-contact: segment endpoint in the wall's interior is not an intersection.
  const std::vector<Segment> long_wall{{{1, 0}, {4, 0}}};
  CHECK_FALSE(segment_intersects_walls({{2, 0}, {3, 1}}, long_wall));
}

TEST_CASE("visibility graph in the open and around a wall") {
  const Point2 target{3, 4};
  SUBCASE("no walls: single edge with Euclidean weight") {
    const auto g = build_visibility_graph({0, 0}, std::span(&target, 1), {});
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].weight == doctest::Approx(5.0).epsilon(1e-12));
  }
  SUBCASE("blocking wall removes the direct edge") {
    const std::vector<Segment> walls{{{1.5, -2}, {1.5, 6}}};
    const auto g = build_visibility_graph({0, 0}, std::span(&target, 1), walls);
    CHECK_FALSE(g.has_edge(0, 1));          // start-target blocked
    CHECK(g.has_edge(0, 2));                // start sees the lower wall endpoint
    CHECK(g.has_edge(0, 3));                // and the upper one
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 3));
  }
}

TEST_CASE("visibility edges match a pairwise parametric brute force") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 12; ++iter) {
    const auto scene = test::make_random_scene(rng, 20);
    std::vector<Point2> targets;
    for (int k = 0; k < 12; ++k) {
      targets.push_back(test::ellipse_boundary_at(scene.ellipse, 2 * std::numbers::pi * k / 12));
    }
    const auto g = build_visibility_graph(scene.start, targets, scene.walls);

    const int n = static_cast<int>(g.nodes.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (distance(g.nodes[i], g.nodes[j]) <= kPointEps) continue;
        bool blocked = false;
        for (const Segment& w : scene.walls) {
          if (test::parametric_blocks({g.nodes[i], g.nodes[j]}, w)) {
            blocked = true;
            break;
          }
        }
        CHECK(g.has_edge(i, j) == !blocked);
      }
    }
  }
}

TEST_CASE("visibility edges are symmetric") {
  std::mt19937_64 rng(13);
  const auto scene = test::make_random_scene(rng, 15);
  const Point2 t = scene.ellipse.center;
  const auto g = build_visibility_graph(scene.start, std::span(&t, 1), scene.walls);
  for (const auto& e : g.edges) {
    CHECK(g.has_edge(e.u, e.v));
    CHECK(g.has_edge(e.v, e.u));
  }
}

TEST_CASE("shortest_path_to_ellipse handles the inside and beeline cases") {
  const GoalEllipse e{{0, 0}, 2.0, 1.0, 0.0};
  SUBCASE("inside: zero path") {
    const auto r = shortest_path_to_ellipse({0.5, 0.2}, e, {});
    CHECK(r.length == 0.0);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0] == Point2{0.5, 0.2});
  }
  SUBCASE("open space: beeline minus the semi-major axis, exactly") {
    const auto r = shortest_path_to_ellipse({10, 0}, e, {});
    CHECK(r.length == doctest::Approx(8.0).epsilon(1e-9));
    REQUIRE(r.points.size() == 2);
    CHECK(r.points.back().x == doctest::Approx(2.0));
  }
  SUBCASE("n_samples below 8 is rejected") {
    CHECK_THROWS_AS(shortest_path_to_ellipse({10, 0}, e, {}, 7), std::invalid_argument);
  }
}

TEST_CASE("shortest_path_to_ellipse detours around an L-shaped wall, matching the grid oracle") {
  // The L blocks the beeline and the route over the top; the taut path dips
  // under the corner at (5,-5) with both legs at 45 degrees, where the
  // octile metric is exact and the grid oracle must agree tightly.
  const GoalEllipse goal{{10, 0}, 1.0, 1.0, 0.0};
  const std::vector<Segment> walls{{{5, -5}, {5, 5}}, {{5, 5}, {9, 5}}};
  const auto r = shortest_path_to_ellipse({0, 0}, goal, walls, 64);

  const double expected = std::sqrt(50.0) + (std::hypot(5.0, 5.0) - 1.0);
  CHECK(r.length == doctest::Approx(expected).epsilon(0.002));
  // Both wall corners give tied routes: under at (5,-5), or through the L's
  // own corner node at (5,5), which endpoint contact leaves traversable.
  REQUIRE(r.points.size() == 3);
  CHECK(r.points[1].x == doctest::Approx(5.0));
  CHECK(std::abs(r.points[1].y) == doctest::Approx(5.0));

  const double grid = grid_path_oracle({0, 0}, goal, walls, 0.05);
  CHECK(std::abs(r.length - grid) / grid <= 0.02);
}

TEST_CASE("shortest_path_to_ellipse is unreachable from a boxed start") {
  // Walls overlap past the corners; a box meeting at exact corner points
  // would leak, since endpoint contact does not block (door jambs).
  const std::vector<Segment> box{{{-1.2, -1}, {1.2, -1}},
                                 {{1, -1.2}, {1, 1.2}},
                                 {{1.2, 1}, {-1.2, 1}},
                                 {{-1, 1.2}, {-1, -1.2}}};
  CHECK_THROWS_AS(shortest_path_to_ellipse({0, 0}, {{10, 0}, 1.0, 1.0, 0.0}, box), UnreachableError);

  // The corner-point box does leak through its corner nodes.
  const std::vector<Segment> leaky{
      {{-1, -1}, {1, -1}}, {{1, -1}, {1, 1}}, {{1, 1}, {-1, 1}}, {{-1, 1}, {-1, -1}}};
  CHECK_NOTHROW(shortest_path_to_ellipse({0, 0}, {{10, 0}, 1.0, 1.0, 0.0}, leaky));
}

TEST_CASE("shortest_path_to_ellipse properties on random scenes") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 25; ++iter) {
    const auto scene = test::make_random_scene(rng, 14);
    const auto r = shortest_path_to_ellipse(scene.start, scene.ellipse, scene.walls, 64);

    // Zero exactly when inside (start is generated outside).
    CHECK(r.length > 0.0);
    CHECK_FALSE(point_in_ellipse(scene.start, scene.ellipse));

    // Never shorter than the Euclidean distance to the boundary.
    const double lower = closest_point_on_ellipse(scene.start, scene.ellipse).distance;
    CHECK(r.length >= lower - 1e-9);

    // Doubling the samples never lengthens the path (nested sample sets).
    const auto finer = shortest_path_to_ellipse(scene.start, scene.ellipse, scene.walls, 128);
    CHECK(finer.length <= r.length + 1e-9);

    // Removing a wall never lengthens the path.
    if (!scene.walls.empty()) {
      std::vector<Segment> fewer(scene.walls.begin(), scene.walls.end() - 1);
      const auto relaxed = shortest_path_to_ellipse(scene.start, scene.ellipse, fewer, 64);
      CHECK(relaxed.length <= r.length + 1e-9);
    }

    // The reported polyline has the reported length and respects the walls.
    double poly = 0.0;
    for (std::size_t i = 1; i < r.points.size(); ++i) {
      poly += distance(r.points[i - 1], r.points[i]);
      CHECK_FALSE(segment_intersects_walls({r.points[i - 1], r.points[i]}, scene.walls));
    }
    CHECK(poly == doctest::Approx(r.length).epsilon(1e-9));
  }
}

TEST_CASE("grid oracle brackets the beeline in open space") {
  const double grid = grid_path_oracle({10, 0}, {{0, 0}, 2.0, 2.0, 0.0}, {}, 0.05);
  CHECK(grid >= 8.0 * 0.98);
  CHECK(grid <= 8.0 * 1.083);
}

TEST_CASE("grid oracle reports enclosure") {
  const std::vector<Segment> box{{{-1.2, -1}, {1.2, -1}},
                                 {{1, -1.2}, {1, 1.2}},
                                 {{1.2, 1}, {-1.2, 1}},
                                 {{-1, 1.2}, {-1, -1.2}}};
  CHECK_THROWS_AS(grid_path_oracle({0, 0}, {{10, 0}, 1.0, 1.0, 0.0}, box, 0.05), UnreachableError);
}

TEST_CASE("visibility and grid paths agree on random scenes (smoke)") {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 15; ++iter) {
    const auto scene = test::make_random_scene(rng, 20);
    const double vis = shortest_path_to_ellipse(scene.start, scene.ellipse, scene.walls, 64).length;
    const double grid = grid_path_oracle(scene.start, scene.ellipse, scene.walls, 0.05);
    CHECK(std::abs(vis - grid) / grid <= 0.10);
  }
}

TEST_CASE("polygon predicates") {
  Polygon square;
  square.vertices = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  CHECK(polygon_signed_area(square) == doctest::Approx(16.0));
  CHECK(polygon_is_simple(square));
  CHECK(polygon_contains(square, {2, 2}));
  CHECK(polygon_contains(square, {0, 2}));         // boundary inclusive
  CHECK_FALSE(polygon_contains_strict(square, {0, 2}));
  CHECK_FALSE(polygon_contains(square, {5, 2}));

  Polygon bowtie;
  bowtie.vertices = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  CHECK_FALSE(polygon_is_simple(bowtie));

  Polygon lshape;
  lshape.vertices = {{0, 0}, {6, 0}, {6, 6}, {4, 6}, {4, 2}, {0, 2}};
  CHECK(polygon_is_simple(lshape));
  CHECK(polygon_contains(lshape, {1, 1}));
  CHECK_FALSE(polygon_contains(lshape, {1, 4}));  // notch
  const Point2 interior = polygon_interior_point(lshape);
  CHECK(polygon_contains_strict(lshape, interior));
}

TEST_CASE("polygon containment agrees with a winding-number oracle") {
  Polygon lshape;
  lshape.vertices = {{0, 0}, {6, 0}, {6, 6}, {4, 6}, {4, 2}, {0, 2}};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(-1.0, 7.0);
  for (int i = 0; i < 10'000; ++i) {
    const Point2 p{unit(rng), unit(rng)};
    CHECK(polygon_contains(lshape, p) == test::winding_contains(lshape, p));
  }
}
