#include "poollines/run_config.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "poollines/error.h"
#include "poollines/gtfs.h"
#include "poollines/synthetic_city.h"

namespace poollines {

namespace {

using json = nlohmann::ordered_json;

// Object reader that rejects keys nobody asked for.
struct reader {
  reader(json const& j, std::string path) : j_{j}, path_{std::move(path)} {
    if (!j_.is_object()) {
      throw config_error{where() + "expected an object"};
    }
  }

  ~reader() noexcept(false) {
    if (std::uncaught_exceptions() != 0) {
      return;
    }
    for (auto const& [k, v] : j_.items()) {
      if (!seen_.contains(k)) {
        throw config_error{"unknown config key \"" + path_ + k + "\""};
      }
    }
  }

  reader(reader const&) = delete;
  reader& operator=(reader const&) = delete;

  json const* get(std::string const& key) {
    seen_.insert(key);
    auto const it = j_.find(key);
    return it == j_.end() || it->is_null() ? nullptr : &*it;
  }

  template <typename T>
  void read(std::string const& key, T& out) {
    if (auto const* v = get(key); v != nullptr) {
      out = as<T>(*v, key);
    }
  }

  template <typename T>
  void read(std::string const& key, std::optional<T>& out) {
    if (auto const* v = get(key); v != nullptr) {
      out = as<T>(*v, key);
    }
  }

  template <typename T>
  T as(json const& v, std::string const& key) const {
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) {
          throw config_error{""};
        }
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) {
          throw config_error{""};
        }
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) {
          throw config_error{""};
        }
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) {
          throw config_error{""};
        }
      }
      return v.get<T>();
    } catch (std::exception const&) {
      throw config_error{"config key \"" + path_ + key +
                         "\" has the wrong type"};
    }
  }

  std::string where() const {
    return path_.empty() ? std::string{} : "\"" + path_ + "\": ";
  }

  json const& j_;
  std::string path_;
  std::set<std::string> seen_;
};

seconds_t read_time(json const& v, std::string const& key) {
  if (v.is_number_integer()) {
    return v.get<seconds_t>();
  }
  if (v.is_string()) {
    try {
      return parse_gtfs_time(v.get<std::string>());
    } catch (std::exception const&) {
    }
  }
  throw config_error{"config key \"" + key + "\" is not a time"};
}

time_window read_window(json const& v, std::string const& key) {
  if (!v.is_array() || v.size() != 2U) {
    throw config_error{"config key \"" + key + "\" must be [start, end]"};
  }
  return {read_time(v[0], key), read_time(v[1], key)};
}

std::filesystem::path resolve(std::filesystem::path const& base,
                              std::string const& p) {
  auto const path = std::filesystem::path{p};
  return path.is_absolute() || base.empty() ? path : base / path;
}

void read_scenario(json const& j, scenario_config& s) {
  auto r = reader{j, "scenario."};
  auto preset = std::optional<std::string>{};
  r.read("preset", preset);
  if (preset) {
    if (*preset == "synthetic") {
      s.rectangles = synthetic_city_rectangles();
    } else if (*preset == "portland") {
      s.rectangles = portland_rectangles();
    } else {
      throw config_error{"unknown scenario preset \"" + *preset + "\""};
    }
  }
  if (auto const* rects = r.get("rectangles"); rects != nullptr) {
    if (!rects->is_array()) {
      throw config_error{"scenario.rectangles must be a list"};
    }
    s.rectangles.clear();
    for (auto const& e : *rects) {
      auto rr = reader{e, "scenario.rectangles[]."};
      auto rect = rectangle{};
      rr.read("min_lat", rect.min_lat);
      rr.read("max_lat", rect.max_lat);
      rr.read("min_lon", rect.min_lon);
      rr.read("max_lon", rect.max_lon);
      rr.read("weight", rect.weight);
      s.rectangles.push_back(rect);
    }
  }
  r.read("driver_density", s.driver_density);
  r.read("rider_density", s.rider_density);
  r.read("area_km2", s.area_km2);
  if (auto const* w = r.get("sim_window"); w != nullptr) {
    s.sim_window = read_window(*w, "scenario.sim_window");
  }
  if (auto const* w = r.get("stats_window"); w != nullptr) {
    s.stats_window = read_window(*w, "scenario.stats_window");
  }
  r.read("driver_count", s.driver_count);
  r.read("rider_count", s.rider_count);
  r.read("seat_capacity", s.seat_capacity);
}

}  // namespace

run_config parse_run_config(std::string_view const json_text,
                            std::filesystem::path const& base_dir) {
  auto doc = json{};
  try {
    doc = json::parse(json_text);
  } catch (json::parse_error const& e) {
    throw config_error{std::string{"config is not valid JSON: "} + e.what()};
  }

  auto c = run_config{};
  c.scenario.rectangles = synthetic_city_rectangles();
  auto& sim = c.simulation;
  {
    auto r = reader{doc, ""};
    if (auto const* v = r.get("gtfs_path"); v != nullptr) {
      c.gtfs_path = resolve(base_dir, r.as<std::string>(*v, "gtfs_path"));
    }
    r.read("service_date", c.service_date);
    if (auto const* v = r.get("agents_path"); v != nullptr) {
      c.agents_path = resolve(base_dir, r.as<std::string>(*v, "agents_path"));
    }
    if (auto const* v = r.get("output_dir"); v != nullptr) {
      c.output_dir = resolve(base_dir, r.as<std::string>(*v, "output_dir"));
    }
    r.read("seed", c.scenario.seed);
    r.read("tau", sim.journey.max_detour_ratio);
    r.read("dwell_s", sim.journey.dwell);
    r.read("enforce_capacity", sim.enforce_capacity);
    r.read("threads", sim.threads);

    if (auto const* v = r.get("travel_model"); v != nullptr) {
      auto t = reader{*v, "travel_model."};
      t.read("drive_speed_kmh", sim.journey.model.drive_speed_kmh);
      t.read("walk_speed_kmh", sim.journey.model.walk_speed_kmh);
      t.read("circuity", sim.journey.model.circuity);
    }
    if (auto const* v = r.get("feasibility"); v != nullptr) {
      auto f = reader{*v, "feasibility."};
      f.read("max_wait_s", sim.rules.max_wait);
      f.read("max_walk_km", sim.rules.max_walk_km);
      f.read("walk_time_bound", sim.rules.walk_time_bound);
    }
    if (auto const* v = r.get("emissions"); v != nullptr) {
      auto e = reader{*v, "emissions."};
      e.read("grams_per_km", sim.emissions.grams_per_km);
    }
    if (auto const* v = r.get("planner"); v != nullptr) {
      auto p = reader{*v, "planner."};
      p.read("max_access_km", sim.max_access_km);
      p.read("max_footpath_km", sim.max_footpath_km);
    }
    if (auto const* v = r.get("meeting_point_route_types"); v != nullptr) {
      if (!v->is_array()) {
        throw config_error{"meeting_point_route_types must be a list"};
      }
      sim.meeting_point_types.clear();
      for (auto const& e : *v) {
        auto const type = r.as<int>(e, "meeting_point_route_types");
        if (type < 0 || type > 12) {
          throw config_error{"invalid route_type in meeting_point_route_types"};
        }
        sim.meeting_point_types.push_back(static_cast<route_type>(type));
      }
    }
    if (auto const* v = r.get("scenario"); v != nullptr) {
      read_scenario(*v, c.scenario);
    }
  }
  validate(c);
  return c;
}

run_config load_run_config(std::filesystem::path const& file) {
  auto in = std::ifstream{file, std::ios::binary};
  if (!in) {
    throw config_error{"cannot read config " + file.string()};
  }
  auto ss = std::stringstream{};
  ss << in.rdbuf();
  return parse_run_config(ss.str(), file.parent_path());
}

std::string apply_overrides(std::string_view const json_text,
                            std::vector<std::string> const& overrides) {
  auto doc = json{};
  try {
    doc = json_text.empty() ? json::object() : json::parse(json_text);
  } catch (json::parse_error const& e) {
    throw config_error{std::string{"config is not valid JSON: "} + e.what()};
  }
  for (auto const& o : overrides) {
    auto const eq = o.find('=');
    if (eq == std::string::npos || eq == 0U) {
      throw config_error{"override must look like key=value: " + o};
    }
    auto const key = o.substr(0, eq);
    auto const text = o.substr(eq + 1);
    auto value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
      value = text;
    }
    auto* node = &doc;
    auto start = std::size_t{0};
    while (true) {
      auto const dot = key.find('.', start);
      auto const part = key.substr(start, dot - start);
      if (!node->is_object()) {
        throw config_error{"override path crosses a non-object: " + key};
      }
      if (dot == std::string::npos) {
        (*node)[part] = value;
        break;
      }
      node = &(*node)[part];
      if (node->is_null()) {
        *node = json::object();
      }
      start = dot + 1;
    }
  }
  return doc.dump();
}

void validate(run_config const& c) {
  auto const& sim = c.simulation;
  if (!(sim.journey.max_detour_ratio >= 0.0)) {
    throw config_error{"tau must be >= 0"};
  }
  if (sim.journey.dwell < 0) {
    throw config_error{"dwell must be >= 0"};
  }
  if (!sim.journey.model.valid()) {
    throw config_error{"travel model speeds and circuity must be positive"};
  }
  if (sim.rules.max_wait < 0 || !(sim.rules.max_walk_km >= 0.0)) {
    throw config_error{"feasibility limits must be >= 0"};
  }
  if (!(sim.emissions.grams_per_km >= 0.0)) {
    throw config_error{"emission factor must be >= 0"};
  }
  if (!(sim.max_access_km >= 0.0) || !(sim.max_footpath_km >= 0.0)) {
    throw config_error{"planner radii must be >= 0"};
  }
  if (c.service_date && (*c.service_date < 10000101 || *c.service_date > 99991231)) {
    throw config_error{"service_date must be YYYYMMDD"};
  }
  c.scenario.validate();
}

std::string to_json(run_config const& c) {
  auto const& sim = c.simulation;
  auto j = json::object();
  j["gtfs_path"] = c.gtfs_path.string();
  j["service_date"] =
      c.service_date ? json(*c.service_date) : json(nullptr);
  j["agents_path"] = c.agents_path ? json(c.agents_path->string()) : json(nullptr);
  j["output_dir"] = c.output_dir.string();
  j["seed"] = c.scenario.seed;
  j["tau"] = sim.journey.max_detour_ratio;
  j["dwell_s"] = sim.journey.dwell;
  j["enforce_capacity"] = sim.enforce_capacity;
  j["threads"] = sim.threads;
  j["travel_model"] = {{"drive_speed_kmh", sim.journey.model.drive_speed_kmh},
                       {"walk_speed_kmh", sim.journey.model.walk_speed_kmh},
                       {"circuity", sim.journey.model.circuity}};
  j["feasibility"] = {{"max_wait_s", sim.rules.max_wait},
                      {"max_walk_km", sim.rules.max_walk_km},
                      {"walk_time_bound", sim.rules.walk_time_bound}};
  j["emissions"] = {{"grams_per_km", sim.emissions.grams_per_km}};
  j["planner"] = {{"max_access_km", sim.max_access_km},
                  {"max_footpath_km", sim.max_footpath_km}};
  auto types = json::array();
  for (auto const t : sim.meeting_point_types) {
    types.push_back(static_cast<int>(t));
  }
  j["meeting_point_route_types"] = types;

  auto const& s = c.scenario;
  auto rects = json::array();
  for (auto const& r : s.rectangles) {
    auto e = json{{"min_lat", r.min_lat},
                  {"max_lat", r.max_lat},
                  {"min_lon", r.min_lon},
                  {"max_lon", r.max_lon}};
    if (r.weight) {
      e["weight"] = *r.weight;
    }
    rects.push_back(e);
  }
  auto sc = json::object();
  sc["rectangles"] = rects;
  sc["driver_density"] = s.driver_density;
  sc["rider_density"] = s.rider_density;
  sc["area_km2"] = s.area_km2 ? json(*s.area_km2) : json(nullptr);
  sc["sim_window"] = {format_gtfs_time(s.sim_window.start),
                      format_gtfs_time(s.sim_window.end)};
  sc["stats_window"] = {format_gtfs_time(s.stats_window.start),
                        format_gtfs_time(s.stats_window.end)};
  sc["driver_count"] = s.driver_count ? json(*s.driver_count) : json(nullptr);
  sc["rider_count"] = s.rider_count ? json(*s.rider_count) : json(nullptr);
  sc["seat_capacity"] = s.seat_capacity;
  j["scenario"] = sc;
  return j.dump(2) + "\n";
}

}  // namespace poollines
