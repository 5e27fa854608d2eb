#pragma once

// 2D primitives for the wayfinding model: segments, simple polygons,
// goal ellipses, visibility graphs and shortest-path queries, plus a
// grid-based path oracle used for cross-checking.

#include <span>
#include <vector>

namespace wayfinder {

// Zero threshold for cross products in orientation predicates.
inline constexpr double kOrientEps = 1e-12;
// Point/segment coincidence and segment-arithmetic tolerance.
inline constexpr double kPointEps = 1e-9;
// Absolute tolerance when comparing path lengths for ties.
inline constexpr double kPathTieEps = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2&) const = default;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Point2& a, double s) { return {a.x * s, a.y * s}; }

double distance(const Point2& a, const Point2& b);

struct Segment {
  Point2 a;
  Point2 b;

  bool operator==(const Segment&) const = default;

  double length() const { return distance(a, b); }
  Point2 midpoint() const { return {(a.x + b.x) * 0.5, (a.y + b.y) * 0.5}; }
};

struct Aabb {
  Point2 lo;
  Point2 hi;

  void expand(const Point2& p);
  void expand(const Aabb& other);
  void pad(double margin);
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 when |cross| <= kOrientEps.
int orientation(const Point2& a, const Point2& b, const Point2& c);

double point_segment_distance(const Point2& p, const Segment& s);
bool on_segment(const Point2& p, const Segment& s, double eps = kPointEps);

// True iff the open interior of `s` properly crosses a wall or overlaps one
// collinearly in more than a single point. Touching a wall endpoint (or
// contact at an endpoint of `s` itself) does not count: door jambs must stay
// traversable.
bool segment_intersects_walls(const Segment& s, std::span<const Segment> walls);

// -- polygons ---------------------------------------------------------------

struct Polygon {
  std::vector<Point2> vertices;  // counter-clockwise

  bool operator==(const Polygon&) const = default;
};

std::vector<Segment> polygon_edges(const Polygon& poly);
double polygon_signed_area(const Polygon& poly);
double polygon_perimeter(const Polygon& poly);
bool polygon_is_simple(const Polygon& poly);
// Containment is boundary-inclusive; the strict variant excludes the boundary.
bool polygon_contains(const Polygon& poly, const Point2& p);
bool polygon_contains_strict(const Polygon& poly, const Point2& p);
Aabb polygon_bbox(const Polygon& poly);
// A point strictly inside the polygon (centroid when it qualifies, otherwise
// a deterministic scan of the bounding box).
Point2 polygon_interior_point(const Polygon& poly);

// -- ellipses ---------------------------------------------------------------

// The agent's fuzzy memory of a destination region.
struct GoalEllipse {
  Point2 center;
  double semi_major = 1.0;  // a >= b > 0
  double semi_minor = 1.0;
  double rotation = 0.0;  // radians, in [0, pi)

  bool operator==(const GoalEllipse&) const = default;
};

// Boundary point at parameter angle t (ellipse frame parametrization).
Point2 ellipse_point(const GoalEllipse& e, double t);
Aabb ellipse_bbox(const GoalEllipse& e);

// Containment is boundary-inclusive.
bool point_in_ellipse(const Point2& p, const GoalEllipse& e);

struct ClosestPoint {
  Point2 point;
  double distance = 0.0;
};

/// Boundary point of `e` nearest to `p` and its distance, for `p` strictly
/// outside the ellipse. Solved by bisecting the stationarity condition of the
/// squared distance on the boundary parametrization.
/// Throws PointInsideEllipseError when `p` is inside.
ClosestPoint closest_point_on_ellipse(const Point2& p, const GoalEllipse& e);

// -- visibility graphs and shortest paths -----------------------------------

struct VisibilityGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
  };

  std::vector<Point2> nodes;  // start, targets..., wall endpoints...
  std::vector<Edge> edges;    // undirected, stored once with u < v
  std::vector<Segment> obstacles;

  bool has_edge(int u, int v) const;
};

// Nodes are {start} + targets + all wall endpoints; an edge connects two
// nodes iff the open segment between them intersects no wall.
VisibilityGraph build_visibility_graph(const Point2& start,
                                       std::span<const Point2> targets,
                                       std::span<const Segment> walls);

struct PathResult {
  double length = 0.0;
  std::vector<Point2> points;
};

/// Shortest obstacle-avoiding path from `start` to the ellipse region.
/// The region is discretized as n_samples uniformly spaced boundary points
/// plus the analytic closest point from `start`, which makes the unobstructed
/// case exact. Returns (0, [start]) when `start` is already inside.
/// Throws UnreachableError when no target can be reached.
PathResult shortest_path_to_ellipse(const Point2& start, const GoalEllipse& e,
                                    std::span<const Segment> walls,
                                    int n_samples = 64);

/// Shortest obstacle-avoiding point-to-point path.
PathResult shortest_path_between(const Point2& from, const Point2& to,
                                 std::span<const Segment> walls);

/// Independent cross-check for shortest_path_to_ellipse: Dijkstra on a
/// uniform 8-neighbor grid with the given cell size. Cells crossed by a wall
/// are blocked; any cell whose center lies inside the ellipse is a target.
/// The octile metric overestimates Euclidean lengths by at most ~8.3%.
double grid_path_oracle(const Point2& start, const GoalEllipse& e,
                        std::span<const Segment> walls, double cell);

}  // namespace wayfinder
