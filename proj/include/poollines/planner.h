#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poollines/geo.h"
#include "poollines/gtfs.h"

namespace poollines {

enum class plan_mode : std::uint8_t {
  transit,          // walk + transit + PoolLines
  walk_only,
  transit_no_pool,  // walk + transit
  pool_only,        // walk + PoolLines
};

struct plan_request {
  geo_point from;
  geo_point to;
  seconds_t departure{0};
  std::optional<std::int32_t> date;  // YYYYMMDD; must match the timetable's
  std::int32_t num_itineraries{10};
  plan_mode mode{plan_mode::transit};
};

enum class leg_kind : std::uint8_t { walk, transit, carpool };

struct leg_place {
  geo_point pos;
  std::optional<std::string> stop_id;
  friend bool operator==(leg_place const&, leg_place const&) = default;
};

struct leg {
  leg_kind kind{leg_kind::walk};
  leg_place from;
  leg_place to;
  seconds_t board{0};
  seconds_t alight{0};
  double distance_km{0.0};
  std::optional<std::string> trip_id;
  // Positions in the trip's stop_times (ride legs only).
  std::int32_t board_index{-1};
  std::int32_t alight_index{-1};

  bool is_ride() const { return kind != leg_kind::walk; }
  friend bool operator==(leg const&, leg const&) = default;
};

struct itinerary {
  std::vector<leg> legs;
  seconds_t depart{0};
  seconds_t arrive{0};
  double total_walk_km{0.0};
  seconds_t total_wait_s{0};

  std::size_t ride_count() const;
  std::size_t count(leg_kind k) const;
  leg const* first_ride() const;
  friend bool operator==(itinerary const&, itinerary const&) = default;
};

struct footpath {
  stop_idx_t from{0};
  stop_idx_t to{0};
  seconds_t duration{0};
  double km{0.0};
  friend bool operator==(footpath const&, footpath const&) = default;
};

// Symmetric stop-to-stop walking links within max_walk_km road distance.
std::vector<footpath> build_footpaths(timetable const& tt,
                                      travel_model const& model,
                                      double max_walk_km);

struct planner_params {
  travel_model model;
  double max_access_km{2.5};  // walk radius around request endpoints
  seconds_t transfer_time{60};  // minimum same-stop change between trips
};

// Uniform lat/lon bucket index over stop positions.
class stop_grid {
public:
  stop_grid() = default;
  stop_grid(std::span<stop const> stops, double cell_km);

  // Stops within max_km road distance of p, as (stop, road km) pairs in
  // increasing stop index order.
  void near(geo_point const& p, double max_km, travel_model const& model,
            std::vector<std::pair<stop_idx_t, double>>& out) const;

private:
  std::int64_t key(std::int64_t lat_cell, std::int64_t lon_cell) const;

  std::span<stop const> stops_;
  double cell_deg_{1.0};
  double max_abs_lat_{0.0};
  std::vector<std::pair<std::int64_t, stop_idx_t>> cells_;  // sorted
};

struct connection {
  seconds_t dep_time{0};
  seconds_t arr_time{0};
  stop_idx_t dep_stop{0};
  stop_idx_t arr_stop{0};
  trip_idx_t trip{0};
  std::uint32_t seq{0};  // position of the departure stoptime in the trip
};

// Routing data prepared from a timetable: time-sorted connections, footpath
// adjacency, carpool flags and a grid index over stop positions. Immutable;
// any number of queries may run on it concurrently.
class network {
public:
  network(timetable tt, std::vector<footpath> footpaths, planner_params p);
  network(timetable tt, planner_params p, double max_footpath_km);

  network(network const&) = delete;
  network& operator=(network const&) = delete;
  network(network&&) = default;
  network& operator=(network&&) = default;
  ~network() = default;

  timetable const& tt() const { return tt_; }
  planner_params const& params() const { return params_; }
  std::span<connection const> connections() const { return connections_; }
  std::span<footpath const> footpaths() const { return footpaths_; }
  std::span<footpath const> footpaths_from(stop_idx_t s) const;
  bool is_carpool(trip_idx_t t) const { return carpool_[t]; }

  void stops_near(geo_point const& p, double max_km,
                  std::vector<std::pair<stop_idx_t, double>>& out) const {
    grid_.near(p, max_km, params_.model, out);
  }

private:
  void init(std::vector<footpath> footpaths);

  timetable tt_;
  planner_params params_;
  std::vector<connection> connections_;
  std::vector<footpath> footpaths_;  // sorted by from
  std::vector<std::uint32_t> footpath_offset_;
  std::vector<bool> carpool_;
  stop_grid grid_;
};

// Earliest-arrival itinerary; trips in `banned` are not used. Ties on arrival
// prefer fewer rides, then less walking. Only absent if the request is
// invalid; direct walking is always a candidate.
std::optional<itinerary> earliest_arrival(
    network const& net, plan_request const& req,
    std::span<trip_idx_t const> banned = {});

// Up to num_itineraries alternatives, earliest arrival first. Each further
// alternative bans the first ride of every previous one; the walk-only
// itinerary closes the list when there is room.
std::vector<itinerary> plan(network const& net, plan_request const& req);

itinerary walk_itinerary(geo_point const& from, geo_point const& to,
                         seconds_t departure, travel_model const& model);

// Flat query document: fromPlace=lat,lon&toPlace=lat,lon&time=10:30am
// &date=07-20-2022&numItineraries=10&mode=TRANSIT
std::string to_query_string(plan_request const& req);
plan_request parse_query_string(std::string_view q);

std::string_view to_string(plan_mode m);
std::string_view to_string(leg_kind k);

// One CSV row per leg.
std::string itineraries_to_csv(std::span<itinerary const> its);

}  // namespace poollines
