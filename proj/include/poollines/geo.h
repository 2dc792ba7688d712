#pragma once

#include <cstdint>

namespace poollines {

// Times are integer seconds since service-day midnight (may exceed 24h).
using seconds_t = std::int64_t;

inline constexpr double kEarthRadiusKm = 6371.0088;

struct geo_point {
  double lat{0.0};
  double lon{0.0};

  bool valid() const {
    return lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
  }
  friend bool operator==(geo_point const&, geo_point const&) = default;
};

struct travel_model {
  double drive_speed_kmh{40.0};
  double walk_speed_kmh{5.0};
  double circuity{1.3};

  bool valid() const {
    return drive_speed_kmh > 0.0 && walk_speed_kmh > 0.0 && circuity >= 1.0;
  }
};

double haversine_km(geo_point const& a, geo_point const& b);

// Great-circle distance scaled by the model's circuity factor.
double road_km(geo_point const& a, geo_point const& b, travel_model const& m);

// Travel time rounded up to whole seconds.
seconds_t drive_seconds(geo_point const& a, geo_point const& b,
                        travel_model const& m);
seconds_t walk_seconds(geo_point const& a, geo_point const& b,
                       travel_model const& m);

seconds_t seconds_for_km(double km, double speed_kmh);

}  // namespace poollines
