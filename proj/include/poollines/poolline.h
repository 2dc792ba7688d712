#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "poollines/driver_journey.h"
#include "poollines/gtfs.h"

namespace poollines {

inline constexpr std::string_view kPoolLineTripPrefix = "1162238700";
inline constexpr std::string_view kPoolLineRouteDesc = "PoolLine";
inline constexpr std::string_view kPoolLineServicePrefix = "POOLLINE";

std::string poolline_trip_id(driver_id_t id);
std::string poolline_route_name(driver_id_t id);
std::string poolline_origin_stop_id(driver_id_t id);
std::string poolline_destination_stop_id(driver_id_t id);

// Route type written for PoolLines. Carpool legs are told apart by the trip
// id prefix plus the route_desc marker, not by this value.
route_type poolline_route_type();

bool is_poolline(route const& r, trip const& t);
bool is_poolline(timetable const& tt, trip_idx_t t);

// Driver id encoded in a PoolLine trip id, if it is one.
std::optional<driver_id_t> poolline_driver(std::string_view trip_id);

struct poolline {
  route r;
  trip t;
  std::vector<stop> new_stops;
  std::vector<stop_time> stop_times;
};

poolline make_poolline(driver_journey const& j,
                       std::string const& service_id);

// Adds one single-trip route per journey. The input timetable content is kept
// unchanged. Throws duplicate_driver_id_error / id_collision_error.
timetable inject_poollines(timetable const& tt,
                           std::vector<driver_journey> const& journeys);

}  // namespace poollines
