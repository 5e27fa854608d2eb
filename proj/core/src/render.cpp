#include "wayfinder/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace wayfinder {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const char* room_fill(RoomClass cls) {
  switch (cls) {
    case RoomClass::circulation:
      return "#cfe0f1";
    case RoomClass::outside:
      return "#f2efe9";
    case RoomClass::common:
      break;
  }
  return "#ffffff";
}

const char* event_color(EventKind kind) {
  switch (kind) {
    case EventKind::backtrack:
      return "#cc3333";
    case EventKind::reach_ellipse:
      return "#2d8633";
    case EventKind::exit:
      return "#222222";
    case EventKind::enter_room:
    case EventKind::choose_door:
      break;
  }
  return "#888888";
}

Point2 position_at(const Trajectory& traj, double t) {
  for (const TrajectorySample& s : traj.samples) {
    if (s.t >= t) return s.pos;
  }
  return traj.samples.empty() ? Point2{} : traj.samples.back().pos;
}

}  // namespace

std::string render_svg(const FloorPlan& plan, std::span<const AgentSpec> agents,
                       const Trajectory* trajectory) {
  Aabb box = polygon_bbox(plan.rooms().front().boundary);
  for (const Room& r : plan.rooms()) box.expand(polygon_bbox(r.boundary));
  const double width = box.hi.x - box.lo.x;
  const double height = box.hi.y - box.lo.y;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(box.lo.x - 0.05 * width) +
         " " + num(box.lo.y - 0.05 * height) + " " + num(1.1 * width) + " " + num(1.1 * height) +
         "\">\n";
  // Flip the y axis: y -> (lo.y + hi.y) - y keeps everything inside the box.
  svg += "<g transform=\"matrix(1 0 0 -1 0 " + num(box.lo.y + box.hi.y) + ")\">\n";

  for (const Room& r : plan.rooms()) {
    std::string d;
    const auto& verts = r.boundary.vertices;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      d += (i == 0 ? "M " : "L ") + num(verts[i].x) + " " + num(verts[i].y) + " ";
    }
    d += "Z";
    svg += "<path class=\"room " + std::string(to_string(r.cls)) + "\" id=\"room-" + r.id +
           "\" d=\"" + d + "\" fill=\"" + room_fill(r.cls) +
           "\" stroke=\"#333333\" stroke-width=\"0.12\"/>\n";
  }

  for (const Door& d : plan.doors()) {
    svg += "<line class=\"door\" id=\"door-" + d.id + "\" x1=\"" + num(d.segment.a.x) +
           "\" y1=\"" + num(d.segment.a.y) + "\" x2=\"" + num(d.segment.b.x) + "\" y2=\"" +
           num(d.segment.b.y) + "\" stroke=\"#ffffff\" stroke-width=\"0.18\"/>\n";
  }

  for (const AgentSpec& agent : agents) {
    for (const GoalEllipse& e : agent.goal_ellipses) {
      const double deg = e.rotation * 180.0 / std::numbers::pi;
      svg += "<ellipse class=\"goal\" cx=\"0\" cy=\"0\" rx=\"" + num(e.semi_major) + "\" ry=\"" +
             num(e.semi_minor) + "\" transform=\"translate(" + num(e.center.x) + " " +
             num(e.center.y) + ") rotate(" + num(deg) +
             ")\" fill=\"#e8b84b\" fill-opacity=\"0.25\" stroke=\"#b98a1d\" stroke-width=\"0.08\" "
             "stroke-dasharray=\"0.3 0.2\"/>\n";
    }
  }

  if (trajectory != nullptr && !trajectory->samples.empty()) {
    std::string pts;
    for (const TrajectorySample& s : trajectory->samples) {
      pts += num(s.pos.x) + "," + num(s.pos.y) + " ";
    }
    if (!pts.empty()) pts.pop_back();
    svg += "<polyline class=\"trajectory\" points=\"" + pts +
           "\" fill=\"none\" stroke=\"#1b4f9c\" stroke-width=\"0.1\"/>\n";

    for (const Event& e : trajectory->events) {
      if (e.kind == EventKind::enter_room || e.kind == EventKind::choose_door) continue;
      const Point2 p = position_at(*trajectory, e.t);
      svg += "<circle class=\"event-" + std::string(to_string(e.kind)) + "\" cx=\"" + num(p.x) +
             "\" cy=\"" + num(p.y) + "\" r=\"0.22\" fill=\"" + event_color(e.kind) + "\"/>\n";
    }
  }

  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace wayfinder
