#include "wayfinder/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "wayfinder/errors.hpp"

namespace wayfinder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

// Single-wall version of segment_intersects_walls.
bool blocks(const Segment& s, const Segment& w) {
  const int d1 = orientation(w.a, w.b, s.a);
  const int d2 = orientation(w.a, w.b, s.b);
  if (d1 == 0 && d2 == 0) {
    // Collinear: blocked only when the overlap is longer than a point.
    const Point2 dir = w.b - w.a;
    const double len = std::hypot(dir.x, dir.y);
    if (len <= kPointEps) return false;
    const double ta = dot(s.a - w.a, dir) / len;
    const double tb = dot(s.b - w.a, dir) / len;
    const double lo = std::max(std::min(ta, tb), 0.0);
    const double hi = std::min(std::max(ta, tb), len);
    return hi - lo > kPointEps;
  }
  const int d3 = orientation(s.a, s.b, w.a);
  const int d4 = orientation(s.a, s.b, w.b);
  // Any zero orientation means contact at an endpoint only, which is allowed.
  return d1 * d2 < 0 && d3 * d4 < 0;
}

struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int> prev;
};

ShortestPaths dijkstra(const VisibilityGraph& g, int source) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }

  ShortestPaths sp{std::vector<double>(n, kInf), std::vector<int>(n, -1)};
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  sp.dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > sp.dist[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      const double nd = d + w;
      if (nd < sp.dist[v]) {
        sp.dist[v] = nd;
        sp.prev[v] = u;
        heap.emplace(nd, v);
      }
    }
  }
  return sp;
}

std::vector<Point2> reconstruct(const VisibilityGraph& g, const ShortestPaths& sp, int target) {
  std::vector<Point2> path;
  for (int v = target; v != -1; v = sp.prev[v]) path.push_back(g.nodes[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool segment_intersects_aabb(const Segment& s, const Point2& lo, const Point2& hi) {
  // Liang-Barsky clip of the parameter interval against the four slabs.
  double t0 = 0.0, t1 = 1.0;
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  auto clip = [&](double p, double q) {
    if (std::abs(p) < 1e-15) return q >= 0.0;
    const double r = q / p;
    if (p < 0.0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  return clip(-dx, s.a.x - lo.x) && clip(dx, hi.x - s.a.x) &&
         clip(-dy, s.a.y - lo.y) && clip(dy, hi.y - s.a.y);
}

}  // namespace

double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

void Aabb::expand(const Point2& p) {
  lo.x = std::min(lo.x, p.x);
  lo.y = std::min(lo.y, p.y);
  hi.x = std::max(hi.x, p.x);
  hi.y = std::max(hi.y, p.y);
}

void Aabb::expand(const Aabb& other) {
  expand(other.lo);
  expand(other.hi);
}

void Aabb::pad(double margin) {
  lo.x -= margin;
  lo.y -= margin;
  hi.x += margin;
  hi.y += margin;
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  const double v = cross(a, b, c);
  if (std::abs(v) <= kOrientEps) return 0;
  return v > 0.0 ? 1 : -1;
}

double point_segment_distance(const Point2& p, const Segment& s) {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.a + d * t);
}

bool on_segment(const Point2& p, const Segment& s, double eps) {
  return point_segment_distance(p, s) <= eps;
}

bool segment_intersects_walls(const Segment& s, std::span<const Segment> walls) {
  for (const Segment& w : walls) {
    if (w.length() <= kPointEps) continue;
    if (blocks(s, w)) return true;
  }
  return false;
}

std::vector<Segment> polygon_edges(const Polygon& poly) {
  std::vector<Segment> edges;
  const std::size_t n = poly.vertices.size();
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({poly.vertices[i], poly.vertices[(i + 1) % n]});
  }
  return edges;
}

double polygon_signed_area(const Polygon& poly) {
  double twice = 0.0;
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p = poly.vertices[i];
    const Point2& q = poly.vertices[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

double polygon_perimeter(const Polygon& poly) {
  double total = 0.0;
  for (const Segment& e : polygon_edges(poly)) total += e.length();
  return total;
}

bool polygon_is_simple(const Polygon& poly) {
  const auto edges = polygon_edges(poly);
  const std::size_t n = edges.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (blocks(edges[i], edges[j])) return false;  // cross or collinear spike
      if (adjacent) continue;
      // Non-adjacent edges must not even touch.
      if (on_segment(edges[i].a, edges[j]) || on_segment(edges[i].b, edges[j]) ||
          on_segment(edges[j].a, edges[i]) || on_segment(edges[j].b, edges[i])) {
        return false;
      }
    }
  }
  return true;
}

bool polygon_contains(const Polygon& poly, const Point2& p) {
  for (const Segment& e : polygon_edges(poly)) {
    if (on_segment(p, e)) return true;
  }
  bool inside = false;
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly.vertices[i];
    const Point2& b = poly.vertices[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

bool polygon_contains_strict(const Polygon& poly, const Point2& p) {
  for (const Segment& e : polygon_edges(poly)) {
    if (on_segment(p, e)) return false;
  }
  return polygon_contains(poly, p);
}

Aabb polygon_bbox(const Polygon& poly) {
  Aabb box{poly.vertices.front(), poly.vertices.front()};
  for (const Point2& v : poly.vertices) box.expand(v);
  return box;
}

Point2 polygon_interior_point(const Polygon& poly) {
  Point2 centroid{};
  for (const Point2& v : poly.vertices) centroid = centroid + v;
  centroid = centroid * (1.0 / static_cast<double>(poly.vertices.size()));
  if (polygon_contains_strict(poly, centroid)) return centroid;

  const Aabb box = polygon_bbox(poly);
  for (int res : {33, 129}) {
    for (int iy = 1; iy < res; ++iy) {
      for (int ix = 1; ix < res; ++ix) {
        const Point2 p{box.lo.x + (box.hi.x - box.lo.x) * ix / res,
                       box.lo.y + (box.hi.y - box.lo.y) * iy / res};
        if (polygon_contains_strict(poly, p)) return p;
      }
    }
  }
  throw Error("polygon_interior_point: no interior point found (degenerate polygon)");
}

Point2 ellipse_point(const GoalEllipse& e, double t) {
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  const double ex = e.semi_major * std::cos(t);
  const double ey = e.semi_minor * std::sin(t);
  return {e.center.x + ex * c - ey * s, e.center.y + ex * s + ey * c};
}

Aabb ellipse_bbox(const GoalEllipse& e) {
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  const double a = e.semi_major;
  const double b = e.semi_minor;
  const double dx = std::sqrt(a * a * c * c + b * b * s * s);
  const double dy = std::sqrt(a * a * s * s + b * b * c * c);
  return {{e.center.x - dx, e.center.y - dy}, {e.center.x + dx, e.center.y + dy}};
}

bool point_in_ellipse(const Point2& p, const GoalEllipse& e) {
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  const double dx = p.x - e.center.x;
  const double dy = p.y - e.center.y;
  const double u = (dx * c + dy * s) / e.semi_major;
  const double v = (-dx * s + dy * c) / e.semi_minor;
  return u * u + v * v <= 1.0;
}

ClosestPoint closest_point_on_ellipse(const Point2& p, const GoalEllipse& e) {
  if (point_in_ellipse(p, e)) {
    throw PointInsideEllipseError("closest_point_on_ellipse: point lies inside the ellipse");
  }
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  const double dx = p.x - e.center.x;
  const double dy = p.y - e.center.y;
  // Ellipse frame, folded into the first quadrant.
  double px = dx * c + dy * s;
  double py = -dx * s + dy * c;
  const double sx = px < 0.0 ? -1.0 : 1.0;
  const double sy = py < 0.0 ? -1.0 : 1.0;
  px = std::abs(px);
  py = std::abs(py);

  const double a = e.semi_major;
  const double b = e.semi_minor;
  // Stationarity of the squared distance to (a cos t, b sin t) on [0, pi/2]:
  // g(0) <= 0 <= g(pi/2) for points outside, and the root is the minimum.
  auto g = [&](double t) {
    return (b * b - a * a) * std::sin(t) * std::cos(t) + a * px * std::sin(t) -
           b * py * std::cos(t);
  };
  double lo = 0.0;
  double hi = std::numbers::pi / 2.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  const double fx = sx * a * std::cos(t);
  const double fy = sy * b * std::sin(t);
  const Point2 world{e.center.x + fx * c - fy * s, e.center.y + fx * s + fy * c};
  return {world, distance(p, world)};
}

bool VisibilityGraph::has_edge(int u, int v) const {
  const int a = std::min(u, v);
  const int b = std::max(u, v);
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return e.u == a && e.v == b; });
}

VisibilityGraph build_visibility_graph(const Point2& start,
                                       std::span<const Point2> targets,
                                       std::span<const Segment> walls) {
  VisibilityGraph g;
  g.nodes.reserve(1 + targets.size() + 2 * walls.size());
  g.nodes.push_back(start);
  g.nodes.insert(g.nodes.end(), targets.begin(), targets.end());
  for (const Segment& w : walls) {
    g.nodes.push_back(w.a);
    g.nodes.push_back(w.b);
  }
  g.obstacles.assign(walls.begin(), walls.end());

  const int n = static_cast<int>(g.nodes.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Segment s{g.nodes[i], g.nodes[j]};
      if (s.length() <= kPointEps) continue;  // coincident nodes
      if (!segment_intersects_walls(s, walls)) {
        g.edges.push_back({i, j, s.length()});
      }
    }
  }
  return g;
}

PathResult shortest_path_to_ellipse(const Point2& start, const GoalEllipse& e,
                                    std::span<const Segment> walls, int n_samples) {
  if (n_samples < 8) throw std::invalid_argument("shortest_path_to_ellipse: n_samples must be >= 8");
  if (point_in_ellipse(start, e)) return {0.0, {start}};

  std::vector<Point2> targets;
  targets.reserve(static_cast<std::size_t>(n_samples) + 1);
  for (int k = 0; k < n_samples; ++k) {
    targets.push_back(ellipse_point(e, 2.0 * std::numbers::pi * k / n_samples));
  }
  targets.push_back(closest_point_on_ellipse(start, e).point);

  const VisibilityGraph g = build_visibility_graph(start, targets, walls);
  const ShortestPaths sp = dijkstra(g, 0);

  int best = -1;
  for (int i = 1; i <= static_cast<int>(targets.size()); ++i) {
    if (best < 0 || sp.dist[i] < sp.dist[best]) best = i;
  }
  if (best < 0 || sp.dist[best] == kInf) {
    throw UnreachableError("shortest_path_to_ellipse: no ellipse target reachable");
  }
  return {sp.dist[best], reconstruct(g, sp, best)};
}

PathResult shortest_path_between(const Point2& from, const Point2& to,
                                 std::span<const Segment> walls) {
  if (distance(from, to) <= kPointEps) return {0.0, {from}};
  const Point2 targets[] = {to};
  const VisibilityGraph g = build_visibility_graph(from, targets, walls);
  const ShortestPaths sp = dijkstra(g, 0);
  if (sp.dist[1] == kInf) throw UnreachableError("shortest_path_between: target unreachable");
  return {sp.dist[1], reconstruct(g, sp, 1)};
}

double grid_path_oracle(const Point2& start, const GoalEllipse& e,
                        std::span<const Segment> walls, double cell) {
  if (cell <= 0.0) throw std::invalid_argument("grid_path_oracle: cell must be positive");

  Aabb box{start, start};
  box.expand(ellipse_bbox(e));
  for (const Segment& w : walls) {
    box.expand(w.a);
    box.expand(w.b);
  }
  box.pad(std::max(2.0 * cell, 0.2));

  const int width = std::max(1, static_cast<int>(std::ceil((box.hi.x - box.lo.x) / cell)));
  const int height = std::max(1, static_cast<int>(std::ceil((box.hi.y - box.lo.y) / cell)));
  const auto index = [&](int ix, int iy) { return iy * width + ix; };
  const auto center = [&](int ix, int iy) {
    return Point2{box.lo.x + (ix + 0.5) * cell, box.lo.y + (iy + 0.5) * cell};
  };

  std::vector<char> blocked(static_cast<std::size_t>(width) * height, 0);
  for (const Segment& w : walls) {
    if (w.length() <= kPointEps) continue;
    const int x0 = std::clamp(static_cast<int>((std::min(w.a.x, w.b.x) - box.lo.x) / cell) - 1, 0, width - 1);
    const int x1 = std::clamp(static_cast<int>((std::max(w.a.x, w.b.x) - box.lo.x) / cell) + 1, 0, width - 1);
    const int y0 = std::clamp(static_cast<int>((std::min(w.a.y, w.b.y) - box.lo.y) / cell) - 1, 0, height - 1);
    const int y1 = std::clamp(static_cast<int>((std::max(w.a.y, w.b.y) - box.lo.y) / cell) + 1, 0, height - 1);
    for (int iy = y0; iy <= y1; ++iy) {
      for (int ix = x0; ix <= x1; ++ix) {
        if (blocked[index(ix, iy)]) continue;
        const Point2 lo{box.lo.x + ix * cell, box.lo.y + iy * cell};
        const Point2 hi{lo.x + cell, lo.y + cell};
        if (segment_intersects_aabb(w, lo, hi)) blocked[index(ix, iy)] = 1;
      }
    }
  }

  std::vector<char> target(static_cast<std::size_t>(width) * height, 0);
  {
    // Only cells overlapping the ellipse bbox can be targets.
    const Aabb eb = ellipse_bbox(e);
    const int x0 = std::clamp(static_cast<int>((eb.lo.x - box.lo.x) / cell) - 1, 0, width - 1);
    const int x1 = std::clamp(static_cast<int>((eb.hi.x - box.lo.x) / cell) + 1, 0, width - 1);
    const int y0 = std::clamp(static_cast<int>((eb.lo.y - box.lo.y) / cell) - 1, 0, height - 1);
    const int y1 = std::clamp(static_cast<int>((eb.hi.y - box.lo.y) / cell) + 1, 0, height - 1);
    for (int iy = y0; iy <= y1; ++iy) {
      for (int ix = x0; ix <= x1; ++ix) {
        if (point_in_ellipse(center(ix, iy), e)) target[index(ix, iy)] = 1;
      }
    }
  }

  const int sx = std::clamp(static_cast<int>((start.x - box.lo.x) / cell), 0, width - 1);
  const int sy = std::clamp(static_cast<int>((start.y - box.lo.y) / cell), 0, height - 1);
  if (blocked[index(sx, sy)]) throw UnreachableError("grid_path_oracle: start cell is blocked");
  if (target[index(sx, sy)]) return 0.0;

  const double diag = cell * std::numbers::sqrt2;
  std::vector<double> dist(static_cast<std::size_t>(width) * height, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[index(sx, sy)] = 0.0;
  heap.emplace(0.0, index(sx, sy));

  while (!heap.empty()) {
    const auto [d, idx] = heap.top();
    heap.pop();
    if (d > dist[idx]) continue;
    if (target[idx]) return d;
    const int ix = idx % width;
    const int iy = idx / width;
    for (int dyy = -1; dyy <= 1; ++dyy) {
      for (int dxx = -1; dxx <= 1; ++dxx) {
        if (dxx == 0 && dyy == 0) continue;
        const int nx = ix + dxx;
        const int ny = iy + dyy;
        if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
        if (blocked[index(nx, ny)]) continue;
        if (dxx != 0 && dyy != 0) {
          // No corner cutting: both orthogonal neighbors must be free.
          if (blocked[index(ix + dxx, iy)] || blocked[index(ix, iy + dyy)]) continue;
        }
        const double nd = d + ((dxx != 0 && dyy != 0) ? diag : cell);
        if (nd < dist[index(nx, ny)]) {
          dist[index(nx, ny)] = nd;
          heap.emplace(nd, index(nx, ny));
        }
      }
    }
  }
  throw UnreachableError("grid_path_oracle: no target cell reachable");
}

}  // namespace wayfinder
