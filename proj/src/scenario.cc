#include "poollines/scenario.h"

#include <cmath>
#include <numbers>

#include "poollines/csv.h"
#include "poollines/error.h"

namespace poollines {

double rectangle::area_km2() const {
  auto const km_per_deg = kEarthRadiusKm * std::numbers::pi / 180.0;
  auto const mid_lat = (min_lat + max_lat) / 2.0 * std::numbers::pi / 180.0;
  return (max_lat - min_lat) * km_per_deg * (max_lon - min_lon) * km_per_deg *
         std::cos(mid_lat);
}

double scenario_config::area() const {
  if (area_km2) {
    return *area_km2;
  }
  auto a = 0.0;
  for (auto const& r : rectangles) {
    a += r.area_km2();
  }
  return a;
}

void scenario_config::validate() const {
  if (rectangles.empty()) {
    throw config_error{"scenario needs at least one rectangle"};
  }
  auto total_weight = 0.0;
  for (auto const& r : rectangles) {
    if (!(r.min_lat < r.max_lat) || !(r.min_lon < r.max_lon) ||
        !geo_point{r.min_lat, r.min_lon}.valid() ||
        !geo_point{r.max_lat, r.max_lon}.valid()) {
      throw config_error{"invalid rectangle bounds"};
    }
    if (r.weight && *r.weight < 0.0) {
      throw config_error{"negative rectangle weight"};
    }
    total_weight += r.effective_weight();
  }
  if (!(total_weight > 0.0)) {
    throw config_error{"rectangle weights sum to zero"};
  }
  if (driver_density < 0.0 || rider_density < 0.0) {
    throw config_error{"negative density"};
  }
  if (sim_window.end <= sim_window.start) {
    throw config_error{"empty simulation window"};
  }
  if (stats_window.start < sim_window.start ||
      stats_window.end > sim_window.end ||
      stats_window.end <= stats_window.start) {
    throw config_error{"stats window must lie inside the simulation window"};
  }
  if ((driver_count && *driver_count < 0) || (rider_count && *rider_count < 0)) {
    throw config_error{"negative agent count"};
  }
  if (seat_capacity < 1) {
    throw config_error{"seat capacity must be >= 1"};
  }
}

std::int64_t agent_count(double const density, double const area_km2,
                         seconds_t const window) {
  auto const x = density * area_km2 * static_cast<double>(window) / 3600.0;
  return static_cast<std::int64_t>(std::ceil(x - 0.5));
}

geo_point sample_point(std::span<rectangle const> rects,
                       std::mt19937_64& rng) {
  auto total = 0.0;
  for (auto const& r : rects) {
    total += r.effective_weight();
  }
  auto u = unit_uniform(rng) * total;
  auto const* chosen = &rects.front();
  for (auto const& r : rects) {
    auto const w = r.effective_weight();
    if (w <= 0.0) {
      continue;
    }
    chosen = &r;
    if (u < w) {
      break;
    }
    u -= w;
  }
  auto const lat = chosen->min_lat +
                   unit_uniform(rng) * (chosen->max_lat - chosen->min_lat);
  auto const lon = chosen->min_lon +
                   unit_uniform(rng) * (chosen->max_lon - chosen->min_lon);
  return {lat, lon};
}

scenario generate_scenario(scenario_config const& cfg,
                           std::shared_ptr<timetable const> tt) {
  cfg.validate();
  auto s = scenario{.tt = std::move(tt), .config = cfg};
  auto rng = std::mt19937_64{cfg.seed};
  auto const window = cfg.sim_window.length();
  auto const departure = [&]() {
    return cfg.sim_window.start +
           static_cast<seconds_t>(
               std::floor(unit_uniform(rng) * static_cast<double>(window)));
  };

  auto const n_drivers = cfg.driver_count.value_or(
      agent_count(cfg.driver_density, cfg.area(), window));
  auto const n_riders = cfg.rider_count.value_or(
      agent_count(cfg.rider_density, cfg.area(), window));

  s.drivers.reserve(static_cast<std::size_t>(n_drivers));
  for (auto i = std::int64_t{0}; i != n_drivers; ++i) {
    auto d = driver{.id = i};
    d.origin = sample_point(cfg.rectangles, rng);
    d.destination = sample_point(cfg.rectangles, rng);
    d.departure = departure();
    d.declaration = cfg.sim_window.start;
    d.seat_capacity = cfg.seat_capacity;
    s.drivers.push_back(d);
  }
  s.riders.reserve(static_cast<std::size_t>(n_riders));
  for (auto i = std::int64_t{0}; i != n_riders; ++i) {
    auto r = rider{.id = i};
    r.origin = sample_point(cfg.rectangles, rng);
    r.destination = sample_point(cfg.rectangles, rng);
    r.departure = departure();
    s.riders.push_back(r);
  }
  return s;
}

std::string agents_to_csv(scenario const& s) {
  auto out = std::string{
      "kind,id,origin_lat,origin_lon,destination_lat,destination_lon,"
      "departure\n"};
  auto const row = [&](std::string_view kind, std::int64_t id,
                       geo_point const& o, geo_point const& d, seconds_t t) {
    csv::append_row(out, {std::string{kind}, std::to_string(id),
                          format_coordinate(o.lat), format_coordinate(o.lon),
                          format_coordinate(d.lat), format_coordinate(d.lon),
                          std::to_string(t)});
  };
  for (auto const& d : s.drivers) {
    row("driver", d.id, d.origin, d.destination, d.departure);
  }
  for (auto const& r : s.riders) {
    row("rider", r.id, r.origin, r.destination, r.departure);
  }
  return out;
}

scenario agents_from_csv(std::string_view content, scenario_config const& cfg,
                         std::shared_ptr<timetable const> tt) {
  auto const table = csv::parse(content);
  auto s = scenario{.tt = std::move(tt), .config = cfg};
  auto cols = std::array<int, 7>{};
  constexpr auto kNames = std::array<std::string_view, 7>{
      "kind",           "id",       "origin_lat", "origin_lon",
      "destination_lat", "destination_lon", "departure"};
  for (auto i = 0U; i != 7U; ++i) {
    cols[i] = table.column(kNames[i]);
    if (cols[i] < 0) {
      throw malformed_row_error{"agents", 1,
                                "missing column " + std::string{kNames[i]}};
    }
  }
  for (auto const& row : table.rows) {
    auto const field = [&](int const i) -> std::string const& {
      auto const c = static_cast<std::size_t>(cols[static_cast<unsigned>(i)]);
      if (c >= row.fields.size()) {
        throw malformed_row_error{"agents", row.line, "short row"};
      }
      return row.fields[c];
    };
    try {
      auto const o = geo_point{std::stod(field(2)), std::stod(field(3))};
      auto const d = geo_point{std::stod(field(4)), std::stod(field(5))};
      auto const id = std::stoll(field(1));
      auto const t = std::stoll(field(6));
      if (field(0) == "driver") {
        s.drivers.push_back(driver{
            .id = id,
            .origin = o,
            .destination = d,
            .departure = t,
            .declaration = std::min<seconds_t>(t, cfg.sim_window.start),
            .seat_capacity = cfg.seat_capacity});
      } else if (field(0) == "rider") {
        s.riders.push_back(
            rider{.id = id, .origin = o, .destination = d, .departure = t});
      } else {
        throw malformed_row_error{"agents", row.line,
                                  "unknown agent kind " + field(0)};
      }
    } catch (std::logic_error const&) {
      throw malformed_row_error{"agents", row.line, "bad number"};
    }
  }
  return s;
}

std::vector<rectangle> portland_rectangles() {
  return {
      rectangle{45.490, 45.560, -122.720, -122.600, std::nullopt},  // central
      rectangle{45.480, 45.560, -122.600, -122.420, std::nullopt},  // east
      rectangle{45.440, 45.540, -122.860, -122.720, std::nullopt},  // west
      rectangle{45.380, 45.480, -122.800, -122.500, std::nullopt},  // south
      rectangle{45.560, 45.620, -122.700, -122.520, std::nullopt},  // north
  };
}

}  // namespace poollines
