#pragma once

#include <vector>

#include "poollines/gtfs.h"
#include "poollines/scenario.h"

namespace poollines {

// A square city on a local plane: a grid of bus lines plus two subway lines
// crossing in the centre. Positions are placed in km and projected around
// `southwest`.
struct synthetic_city_params {
  geo_point southwest{45.40, -122.80};
  double size_km{20.0};

  double bus_line_spacing_km{5.0};
  double bus_stop_spacing_km{0.5};
  double bus_speed_kmh{20.0};
  seconds_t bus_headway{15 * 60};

  double subway_length_km{14.0};
  double subway_stop_spacing_km{1.0};
  double subway_speed_kmh{35.0};
  seconds_t subway_headway{5 * 60};
  seconds_t subway_dwell{30};

  seconds_t service_start{6 * 3600};
  seconds_t service_end{18 * 3600};
  std::int32_t service_date{20220720};
};

geo_point synthetic_position(synthetic_city_params const& p, double x_km,
                             double y_km);

feed make_synthetic_city(synthetic_city_params const& p = {});

// Four equal quadrants covering the city.
std::vector<rectangle> synthetic_city_rectangles(
    synthetic_city_params const& p = {});

}  // namespace poollines
