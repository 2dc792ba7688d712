#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "poollines/geo.h"
#include "poollines/gtfs.h"

namespace poollines {

using driver_id_t = std::int64_t;

struct driver {
  driver_id_t id{0};
  geo_point origin;
  geo_point destination;
  seconds_t departure{0};
  seconds_t declaration{0};
  std::int32_t seat_capacity{4};
};

struct journey_stop_time {
  geo_point location;
  std::optional<std::string> stop_id;  // set for meeting points
  seconds_t arrival{0};
  seconds_t departure{0};
  friend bool operator==(journey_stop_time const&,
                         journey_stop_time const&) = default;
};

enum class detour_order : std::uint8_t { origin_first, destination_first };

struct driver_journey {
  driver_id_t driver_id{0};
  std::vector<journey_stop_time> stop_times;
  double baseline_km{0.0};
  double length_km{0.0};
  detour_order order{detour_order::origin_first};

  double detour_km() const { return length_km - baseline_km; }
  double detour_ratio() const {
    return baseline_km > 0.0 ? detour_km() / baseline_km : 0.0;
  }
};

struct meeting_point {
  std::string stop_id;
  geo_point pos;
};

struct meeting_point_set {
  std::vector<meeting_point> points;

  bool empty() const { return points.empty(); }
  // Index of the point closest to p by great-circle distance; ties go to the
  // lower index.
  std::size_t nearest(geo_point const& p) const;
};

struct journey_params {
  travel_model model;
  double max_detour_ratio{0.15};  // tau
  seconds_t dwell{60};
};

// Stops served by at least one route whose type is listed (subway by default).
meeting_point_set select_meeting_points(
    timetable const& tt,
    std::vector<route_type> const& types = {route_type::subway});

double journey_length_km(std::vector<journey_stop_time> const& sts,
                         travel_model const& m);

// Deterministic core: tries the nearest meeting point on the first side, then
// on the other, keeping each insertion only if the detour stays within tau.
driver_journey compute_driver_journey(driver const& d,
                                      meeting_point_set const& mps,
                                      journey_params const& p,
                                      detour_order order);

// Picks the side tried first with probability 1/2 from `rng`.
driver_journey compute_driver_journey(driver const& d,
                                      meeting_point_set const& mps,
                                      journey_params const& p,
                                      std::mt19937_64& rng);

// Per-driver random stream derived from the master seed.
std::mt19937_64 driver_rng(std::uint64_t master_seed, driver_id_t id);

// Journeys for all drivers, in declaration order (ties by id).
std::vector<driver_journey> compute_driver_journeys(
    std::vector<driver> const& drivers, meeting_point_set const& mps,
    journey_params const& p, std::uint64_t master_seed);

// Drops intermediate stoptimes not listed in `used`; endpoints always stay and
// retained stoptimes keep their times.
driver_journey prune_journey(driver_journey const& j,
                             std::set<std::size_t> const& used,
                             travel_model const& m);

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

}  // namespace poollines
