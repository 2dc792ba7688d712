#include "poollines/geo.h"

#include <cmath>
#include <numbers>

namespace poollines {

namespace {

constexpr double to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

double haversine_km(geo_point const& a, geo_point const& b) {
  auto const dlat = to_rad(b.lat - a.lat);
  auto const dlon = to_rad(b.lon - a.lon);
  auto const s_lat = std::sin(dlat / 2.0);
  auto const s_lon = std::sin(dlon / 2.0);
  auto const h = s_lat * s_lat + std::cos(to_rad(a.lat)) *
                                     std::cos(to_rad(b.lat)) * s_lon * s_lon;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::min(1.0, h)));
}

double road_km(geo_point const& a, geo_point const& b, travel_model const& m) {
  return m.circuity * haversine_km(a, b);
}

seconds_t seconds_for_km(double const km, double const speed_kmh) {
  // Guard against 1170.0000000002 style ceil overshoot.
  auto const exact = km / speed_kmh * 3600.0;
  auto const rounded = std::round(exact);
  if (std::abs(exact - rounded) < 1e-6) {
    return static_cast<seconds_t>(rounded);
  }
  return static_cast<seconds_t>(std::ceil(exact));
}

seconds_t drive_seconds(geo_point const& a, geo_point const& b,
                        travel_model const& m) {
  return seconds_for_km(road_km(a, b, m), m.drive_speed_kmh);
}

seconds_t walk_seconds(geo_point const& a, geo_point const& b,
                       travel_model const& m) {
  return seconds_for_km(road_km(a, b, m), m.walk_speed_kmh);
}

}  // namespace poollines
