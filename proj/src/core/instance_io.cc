#include "pesp/instance_io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pesp/errors.h"

namespace pesp {
namespace {

using Json = nlohmann::ordered_json;

const Json& Field(const Json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::string StringField(const Json& object, const char* key, const std::string& where) {
  const Json& v = Field(object, key, where);
  if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

int IntField(const Json& object, const char* key, const std::string& where) {
  const Json& v = Field(object, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

Rational WeightField(const Json& object, const std::string& where) {
  const Json& v = Field(object, "weight", where);
  if (v.is_string()) return ParseRational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw ParseError(where + ": weight must be a decimal string");
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("instance must be a JSON object");

  Instance instance;
  instance.period = IntField(root, "period", "instance");
  const Json& events = Field(root, "events", "instance");
  const Json& activities = Field(root, "activities", "instance");
  if (!events.is_array() || !activities.is_array()) throw ParseError("events and activities must be arrays");

  std::map<std::string, std::size_t> index;
  for (const Json& e : events) {
    const std::string where = "event #" + std::to_string(instance.events.size());
    Event ev;
    ev.id = StringField(e, "id", where);
    auto kind = ParseEventKind(StringField(e, "kind", where));
    if (!kind) throw ParseError(where + ": kind must be 'arrival' or 'departure'");
    ev.kind = *kind;
    ev.line = StringField(e, "line", where);
    ev.station = StringField(e, "station", where);
    if (e.contains("brake_time")) ev.brake_time = IntField(e, "brake_time", where);
    if (e.contains("accel_time")) ev.accel_time = IntField(e, "accel_time", where);
    index.emplace(ev.id, instance.events.size());
    instance.events.push_back(std::move(ev));
  }
  for (const Json& a : activities) {
    const std::string where = "activity #" + std::to_string(instance.activities.size());
    Activity act;
    act.id = StringField(a, "id", where);
    auto kind = ParseActivityKind(StringField(a, "kind", where));
    if (!kind) throw ParseError(where + ": unknown activity kind");
    act.kind = *kind;
    for (auto [key, slot] : {std::pair{"tail", &act.tail}, std::pair{"head", &act.head}}) {
      const std::string id = StringField(a, key, where);
      auto it = index.find(id);
      if (it == index.end()) throw ParseError(where + ": unknown event id '" + id + "'");
      *slot = it->second;
    }
    act.lower = IntField(a, "lower", where);
    act.upper = IntField(a, "upper", where);
    act.weight = WeightField(a, where);
    instance.activities.push_back(std::move(act));
  }
  return instance;
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string SerializeInstance(const Instance& instance) {
  Json root;
  root["period"] = instance.period;
  Json events = Json::array();
  for (const Event& e : instance.events) {
    Json j;
    j["id"] = e.id;
    j["kind"] = std::string(ToString(e.kind));
    j["line"] = e.line;
    j["station"] = e.station;
    if (e.brake_time) j["brake_time"] = *e.brake_time;
    if (e.accel_time) j["accel_time"] = *e.accel_time;
    events.push_back(std::move(j));
  }
  Json activities = Json::array();
  for (const Activity& a : instance.activities) {
    Json j;
    j["id"] = a.id;
    j["kind"] = std::string(ToString(a.kind));
    j["tail"] = instance.events.at(a.tail).id;
    j["head"] = instance.events.at(a.head).id;
    j["lower"] = a.lower;
    j["upper"] = a.upper;
    j["weight"] = FormatRational(a.weight);
    activities.push_back(std::move(j));
  }
  root["events"] = std::move(events);
  root["activities"] = std::move(activities);
  return root.dump(2) + "\n";
}

void SaveInstance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << SerializeInstance(instance);
}

}  // namespace pesp
