#include "wayfinder/scenario.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <json.hpp>

#include "wayfinder/errors.hpp"

namespace wayfinder {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& entity) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) throw ValidationError(entity, "unknown key \"" + key + "\"");
  }
}

const json& require(const json& obj, const char* key, const std::string& entity) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(entity, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& entity) {
  const json& v = require(obj, key, entity);
  if (!v.is_string()) throw ValidationError(entity, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

double as_number(const json& v, const std::string& entity, const std::string& what) {
  if (!v.is_number()) throw ValidationError(entity, what + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError(entity, what + " must be finite");
  return d;
}

Point2 as_point(const json& v, const std::string& entity, const std::string& what) {
  if (!v.is_array() || v.size() != 2) {
    throw ValidationError(entity, what + " must be an [x, y] pair");
  }
  return {as_number(v[0], entity, what), as_number(v[1], entity, what)};
}

GoalEllipse parse_ellipse(const json& v, const std::string& entity) {
  if (!v.is_object()) throw ValidationError(entity, "goal ellipse must be an object");
  reject_unknown_keys(v, {"center", "semi_major", "semi_minor", "rotation"}, entity);
  GoalEllipse e;
  e.center = as_point(require(v, "center", entity), entity, "center");
  e.semi_major = as_number(require(v, "semi_major", entity), entity, "semi_major");
  e.semi_minor = as_number(require(v, "semi_minor", entity), entity, "semi_minor");
  e.rotation = as_number(require(v, "rotation", entity), entity, "rotation");
  if (!(e.semi_minor > 0.0) || e.semi_major < e.semi_minor) {
    throw ValidationError(entity, "goal ellipse needs semi_major >= semi_minor > 0");
  }
  if (e.rotation < 0.0 || e.rotation >= std::numbers::pi) {
    throw ValidationError(entity, "goal ellipse rotation must lie in [0, pi)");
  }
  return e;
}

json ellipse_to_json(const GoalEllipse& e) {
  return json{{"center", {e.center.x, e.center.y}},
              {"semi_major", e.semi_major},
              {"semi_minor", e.semi_minor},
              {"rotation", e.rotation}};
}

}  // namespace

CognitiveMap make_cognitive_map(const AgentSpec& spec, const FloorPlan& plan) {
  std::map<std::string, RoomClass> known;
  if (spec.strategy.use_circulation_preference) {
    for (const Room& r : plan.rooms()) known[r.id] = r.cls;
  }
  return CognitiveMap(spec.goal_ellipses, std::move(known), spec.strategy);
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ValidationError("document", "top level must be a JSON object");
  reject_unknown_keys(doc, {"meta", "rooms", "doors", "agents"}, "document");

  {
    const json& meta = require(doc, "meta", "document");
    if (!meta.is_object()) throw ValidationError("meta", "must be an object");
    reject_unknown_keys(meta, {"format_version", "units"}, "meta");
    const json& version = require(meta, "format_version", "meta");
    if (!version.is_number_integer() || version.get<int>() != 1) {
      throw ValidationError("meta", "format_version must be 1");
    }
    if (require_string(meta, "units", "meta") != "meters") {
      throw ValidationError("meta", "units must be \"meters\"");
    }
  }

  const json& rooms_json = require(doc, "rooms", "document");
  if (!rooms_json.is_array()) throw ValidationError("rooms", "must be an array");
  std::vector<Room> rooms;
  for (const json& rj : rooms_json) {
    if (!rj.is_object()) throw ValidationError("rooms", "each room must be an object");
    std::string id = rj.contains("id") && rj["id"].is_string() ? rj["id"].get<std::string>() : "room";
    reject_unknown_keys(rj, {"id", "class", "vertices"}, id);
    id = require_string(rj, "id", id);
    Room room;
    room.id = id;
    room.cls = room_class_from_string(require_string(rj, "class", id));
    const json& verts = require(rj, "vertices", id);
    if (!verts.is_array()) throw ValidationError(id, "\"vertices\" must be an array");
    for (const json& vj : verts) room.boundary.vertices.push_back(as_point(vj, id, "vertex"));
    rooms.push_back(std::move(room));
  }

  const json& doors_json = require(doc, "doors", "document");
  if (!doors_json.is_array()) throw ValidationError("doors", "must be an array");
  std::vector<Door> doors;
  for (const json& dj : doors_json) {
    if (!dj.is_object()) throw ValidationError("doors", "each door must be an object");
    std::string id = dj.contains("id") && dj["id"].is_string() ? dj["id"].get<std::string>() : "door";
    reject_unknown_keys(dj, {"id", "endpoints", "room_a", "room_b"}, id);
    id = require_string(dj, "id", id);
    Door door;
    door.id = id;
    const json& eps = require(dj, "endpoints", id);
    if (!eps.is_array() || eps.size() != 2) {
      throw ValidationError(id, "\"endpoints\" must hold exactly two [x, y] pairs");
    }
    door.segment.a = as_point(eps[0], id, "endpoint");
    door.segment.b = as_point(eps[1], id, "endpoint");
    door.room_a = require_string(dj, "room_a", id);
    door.room_b = require_string(dj, "room_b", id);
    doors.push_back(std::move(door));
  }

  Scenario scenario{FloorPlan::validated(std::move(rooms), std::move(doors)), {}};

  const json& agents_json = require(doc, "agents", "document");
  if (!agents_json.is_array()) throw ValidationError("agents", "must be an array");
  std::set<std::string> agent_ids;
  for (const json& aj : agents_json) {
    if (!aj.is_object()) throw ValidationError("agents", "each agent must be an object");
    std::string id = aj.contains("id") && aj["id"].is_string() ? aj["id"].get<std::string>() : "agent";
    reject_unknown_keys(aj, {"id", "start", "goal_ellipses", "strategies", "rng_seed"}, id);
    id = require_string(aj, "id", id);
    if (!agent_ids.insert(id).second) throw ValidationError(id, "duplicate agent id");

    AgentSpec spec;
    spec.id = id;
    spec.start = as_point(require(aj, "start", id), id, "start");
    const json& goals = require(aj, "goal_ellipses", id);
    if (!goals.is_array() || goals.empty()) {
      throw ValidationError(id, "\"goal_ellipses\" must hold at least one ellipse");
    }
    for (const json& gj : goals) spec.goal_ellipses.push_back(parse_ellipse(gj, id));

    if (aj.contains("strategies")) {
      const json& st = aj["strategies"];
      if (!st.is_object()) throw ValidationError(id, "\"strategies\" must be an object");
      reject_unknown_keys(st, {"circulation_preference", "ellipse_samples", "tie_break"}, id);
      if (st.contains("circulation_preference")) {
        if (!st["circulation_preference"].is_boolean()) {
          throw ValidationError(id, "\"circulation_preference\" must be a boolean");
        }
        spec.strategy.use_circulation_preference = st["circulation_preference"].get<bool>();
      }
      if (st.contains("ellipse_samples")) {
        if (!st["ellipse_samples"].is_number_integer() || st["ellipse_samples"].get<int>() < 8) {
          throw ValidationError(id, "\"ellipse_samples\" must be an integer >= 8");
        }
        spec.strategy.n_ellipse_samples = st["ellipse_samples"].get<int>();
      }
      if (st.contains("tie_break")) {
        if (!st["tie_break"].is_string() || st["tie_break"].get<std::string>() != "lowest_door_id") {
          throw ValidationError(id, "\"tie_break\" must be \"lowest_door_id\"");
        }
      }
    }
    if (aj.contains("rng_seed")) {
      if (!aj["rng_seed"].is_number_unsigned() && !aj["rng_seed"].is_number_integer()) {
        throw ValidationError(id, "\"rng_seed\" must be a non-negative integer");
      }
      spec.rng_seed = aj["rng_seed"].get<std::uint64_t>();
    }

    try {
      locate_room(spec.start, scenario.plan);
    } catch (const OutsideAllRoomsError&) {
      throw ValidationError(id, "start position is not inside any room");
    }
    scenario.agents.push_back(std::move(spec));
  }

  return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
  json doc;
  doc["meta"] = {{"format_version", 1}, {"units", "meters"}};

  doc["rooms"] = json::array();
  for (const Room& r : scenario.plan.rooms()) {
    json verts = json::array();
    for (const Point2& v : r.boundary.vertices) verts.push_back({v.x, v.y});
    doc["rooms"].push_back(
        {{"id", r.id}, {"class", std::string(to_string(r.cls))}, {"vertices", verts}});
  }

  doc["doors"] = json::array();
  for (const Door& d : scenario.plan.doors()) {
    doc["doors"].push_back({{"id", d.id},
                            {"endpoints",
                             {{d.segment.a.x, d.segment.a.y}, {d.segment.b.x, d.segment.b.y}}},
                            {"room_a", d.room_a},
                            {"room_b", d.room_b}});
  }

  doc["agents"] = json::array();
  for (const AgentSpec& a : scenario.agents) {
    json goals = json::array();
    for (const GoalEllipse& e : a.goal_ellipses) goals.push_back(ellipse_to_json(e));
    doc["agents"].push_back(
        {{"id", a.id},
         {"start", {a.start.x, a.start.y}},
         {"goal_ellipses", goals},
         {"strategies",
          {{"circulation_preference", a.strategy.use_circulation_preference},
           {"ellipse_samples", a.strategy.n_ellipse_samples},
           {"tie_break", "lowest_door_id"}}},
         {"rng_seed", a.rng_seed}});
  }

  return doc.dump(2) + "\n";
}

}  // namespace wayfinder
