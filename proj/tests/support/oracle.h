#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "poollines/gtfs.h"
#include "poollines/planner.h"

// Reference implementations used only by tests. They share no routing or
// distance code with the library.
namespace oracle {

using poollines::seconds_t;

// Great circle through the 3D chord between the two unit vectors.
double great_circle_km(poollines::geo_point const& a,
                       poollines::geo_point const& b);

// km / speed in whole seconds, rounded up unless within 1e-6 of an integer.
seconds_t travel_seconds(double km, double speed_kmh);

struct routing_rules {
  poollines::travel_model model;
  double max_access_km{2.5};
  seconds_t transfer_time{60};
};

// Dijkstra on an explicit time-expanded graph:
//   source -> walk-arrival at stops within the access radius
//   walk-arrival -> board any allowed trip departing no earlier
//   ride-arrival -> board a trip departing after the transfer buffer
//   on-board event -> next stop of the same trip
//   ride-arrival -> footpath -> walk-arrival (walks never chain)
//   ride-arrival -> egress walk -> target; source -> direct walk -> target
std::optional<seconds_t> earliest_arrival(
    poollines::timetable const& tt,
    std::span<poollines::footpath const> footpaths, routing_rules const& rules,
    poollines::plan_request const& req, std::set<std::size_t> const& banned = {});

// Random feed inside a small box around (45.5, -122.6): stops, trips with
// strictly positive ride times, some of them PoolLines, plus footpaths.
struct random_instance {
  poollines::feed f;
  std::vector<std::pair<std::size_t, std::size_t>> footpath_pairs;  // stop idx
};

struct instance_limits {
  std::size_t max_stops{50};
  std::size_t max_trips{20};
  std::size_t max_footpaths{10};
  double box_km{4.0};
};

random_instance make_random_instance(std::mt19937_64& rng,
                                     instance_limits const& lim = {});

// Footpaths between the generated pairs (both directions) for a timetable
// built from inst.f; durations follow the walk speed of the model.
std::vector<poollines::footpath> make_footpaths(
    poollines::timetable const& tt, random_instance const& inst,
    poollines::travel_model const& model);

poollines::geo_point random_point(std::mt19937_64& rng, double box_km);

}  // namespace oracle
