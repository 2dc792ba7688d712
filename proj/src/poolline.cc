#include "poollines/poolline.h"

#include <charconv>
#include <unordered_set>

#include "poollines/error.h"

namespace poollines {

std::string poolline_trip_id(driver_id_t const id) {
  return std::string{kPoolLineTripPrefix} + std::to_string(id);
}

std::string poolline_route_name(driver_id_t const id) {
  return "route of carpooler number " + std::to_string(id);
}

std::string poolline_origin_stop_id(driver_id_t const id) {
  return "DRIVER_origin_" + std::to_string(id);
}

std::string poolline_destination_stop_id(driver_id_t const id) {
  return "DRIVER_destination_" + std::to_string(id);
}

route_type poolline_route_type() { return route_type::bus; }

bool is_poolline(route const& r, trip const& t) {
  return r.desc == kPoolLineRouteDesc &&
         std::string_view{t.id}.starts_with(kPoolLineTripPrefix);
}

bool is_poolline(timetable const& tt, trip_idx_t const t) {
  return is_poolline(tt.routes()[tt.route_of(t)], tt.trips()[t]);
}

std::optional<driver_id_t> poolline_driver(std::string_view trip_id) {
  if (!trip_id.starts_with(kPoolLineTripPrefix)) {
    return std::nullopt;
  }
  trip_id.remove_prefix(kPoolLineTripPrefix.size());
  auto id = driver_id_t{};
  auto const [ptr, ec] =
      std::from_chars(trip_id.data(), trip_id.data() + trip_id.size(), id);
  if (ec != std::errc{} || ptr != trip_id.data() + trip_id.size() ||
      trip_id.empty()) {
    return std::nullopt;
  }
  return id;
}

poolline make_poolline(driver_journey const& j,
                       std::string const& service_id) {
  auto pl = poolline{};
  auto const trip_id = poolline_trip_id(j.driver_id);
  pl.r.id = trip_id;
  pl.r.long_name = poolline_route_name(j.driver_id);
  pl.r.desc = std::string{kPoolLineRouteDesc};
  pl.r.type = poolline_route_type();
  pl.t = trip{trip_id, trip_id, service_id};

  auto const origin_id = poolline_origin_stop_id(j.driver_id);
  auto const destination_id = poolline_destination_stop_id(j.driver_id);
  pl.new_stops.push_back(
      stop{origin_id, origin_id, j.stop_times.front().location});
  pl.new_stops.push_back(
      stop{destination_id, destination_id, j.stop_times.back().location});

  for (auto i = std::size_t{0}; i != j.stop_times.size(); ++i) {
    auto const& jst = j.stop_times[i];
    auto stop_id = jst.stop_id.value_or(
        i == 0U ? origin_id
                : (i + 1 == j.stop_times.size() ? destination_id : ""));
    if (stop_id.empty()) {
      throw data_error{"driver " + std::to_string(j.driver_id) +
                       ": intermediate stoptime without meeting point"};
    }
    pl.stop_times.push_back(stop_time{trip_id, std::move(stop_id), jst.arrival,
                                      jst.departure,
                                      static_cast<std::int32_t>(i)});
  }
  return pl;
}

timetable inject_poollines(timetable const& tt,
                           std::vector<driver_journey> const& journeys) {
  if (journeys.empty()) {
    return tt;
  }

  auto f = tt.data();
  auto const service_id =
      tt.service_date()
          ? std::string{kPoolLineServicePrefix} + "_" +
                std::to_string(*tt.service_date())
          : std::string{kPoolLineServicePrefix};
  // Feeds without calendar data run every service every day; adding a dated
  // exception there would switch all original services off.
  auto const has_calendar = !f.calendars.empty() || !f.calendar_dates.empty();
  if (tt.service_date() && has_calendar) {
    f.calendar_dates.push_back({service_id, *tt.service_date(), 1});
  }

  auto seen = std::unordered_set<driver_id_t>{};
  for (auto const& j : journeys) {
    if (!seen.insert(j.driver_id).second) {
      throw duplicate_driver_id_error{"duplicate driver id " +
                                      std::to_string(j.driver_id)};
    }
    auto pl = make_poolline(j, service_id);
    for (auto& s : pl.new_stops) {
      if (tt.find_stop(s.id)) {
        throw id_collision_error{"stop id " + s.id + " already in feed"};
      }
      f.stops.push_back(std::move(s));
    }
    if (tt.find_route(pl.r.id)) {
      throw id_collision_error{"route id " + pl.r.id + " already in feed"};
    }
    if (tt.find_trip(pl.t.id)) {
      throw id_collision_error{"trip id " + pl.t.id + " already in feed"};
    }
    f.routes.push_back(std::move(pl.r));
    f.trips.push_back(std::move(pl.t));
    for (auto& st : pl.stop_times) {
      f.stop_times.push_back(std::move(st));
    }
  }
  return timetable{std::move(f), tt.service_date()};
}

}  // namespace poollines
