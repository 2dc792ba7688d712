#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poollines/driver_journey.h"
#include "poollines/gtfs.h"
#include "poollines/matching.h"

namespace poollines {

struct rectangle {
  double min_lat{0.0};
  double max_lat{0.0};
  double min_lon{0.0};
  double max_lon{0.0};
  std::optional<double> weight;  // defaults to the rectangle's area

  double area_km2() const;
  double effective_weight() const { return weight.value_or(area_km2()); }
  bool contains(geo_point const& p) const {
    return p.lat >= min_lat && p.lat <= max_lat && p.lon >= min_lon &&
           p.lon <= max_lon;
  }
};

struct time_window {
  seconds_t start{0};
  seconds_t end{0};

  seconds_t length() const { return end - start; }
  bool contains(seconds_t const t) const { return t >= start && t < end; }
};

struct scenario_config {
  std::vector<rectangle> rectangles;
  double driver_density{4.8};  // per km² per hour
  double rider_density{8.3};
  std::optional<double> area_km2;  // defaults to the sum of rectangle areas
  time_window sim_window{10 * 3600 + 30 * 60, 11 * 3600 + 30 * 60};
  time_window stats_window{10 * 3600 + 45 * 60, 11 * 3600 + 15 * 60};
  std::uint64_t seed{1};
  std::optional<std::int64_t> driver_count;  // overrides the density formula
  std::optional<std::int64_t> rider_count;
  std::int32_t seat_capacity{4};

  double area() const;
  // Throws config_error.
  void validate() const;
};

struct scenario {
  std::vector<rider> riders;
  std::vector<driver> drivers;
  std::shared_ptr<timetable const> tt;
  scenario_config config;
};

// density · area · hours, rounded half down.
std::int64_t agent_count(double density, double area_km2, seconds_t window);

// Rectangle with probability proportional to its weight, then a uniform point
// inside it.
geo_point sample_point(std::span<rectangle const> rects, std::mt19937_64& rng);

scenario generate_scenario(scenario_config const& cfg,
                           std::shared_ptr<timetable const> tt);

// kind,id,origin_lat,origin_lon,destination_lat,destination_lon,departure
std::string agents_to_csv(scenario const& s);

// Drivers declare at the simulation start and get cfg.seat_capacity seats.
scenario agents_from_csv(std::string_view content, scenario_config const& cfg,
                         std::shared_ptr<timetable const> tt);

// Approximate coverage of the Portland, OR metropolitan area.
std::vector<rectangle> portland_rectangles();

}  // namespace poollines
