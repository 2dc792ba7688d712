#include "poollines/synthetic_city.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace poollines {

namespace {

constexpr double kKmPerDegree = kEarthRadiusKm * std::numbers::pi / 180.0;

std::string position_id(char const prefix, double const x, double const y) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%c_%04ld_%04ld", prefix,
                std::lround(x * 100.0), std::lround(y * 100.0));
  return buf;
}

struct line_builder {
  synthetic_city_params const& p;
  feed& f;
  std::map<std::string, bool> known_stops;

  std::string add_stop(char const prefix, double const x, double const y) {
    auto id = position_id(prefix, x, y);
    if (!known_stops.contains(id)) {
      known_stops[id] = true;
      // Micro-degree grid keeps the written feed short.
      auto const pos = synthetic_position(p, x, y);
      f.stops.push_back(stop{id, id,
                             {std::round(pos.lat * 1e6) / 1e6,
                              std::round(pos.lon * 1e6) / 1e6}});
    }
    return id;
  }

  void add_line(std::string const& route_id, route_type const type,
                std::vector<std::pair<double, double>> const& path,
                char const prefix, double const speed_kmh,
                seconds_t const headway, seconds_t const dwell) {
    f.routes.push_back(route{.id = route_id,
                             .agency_id = "SYN",
                             .short_name = route_id,
                             .long_name = route_id,
                             .type = type});
    auto stops = std::vector<std::string>{};
    for (auto const& [x, y] : path) {
      stops.push_back(add_stop(prefix, x, y));
    }
    for (auto const dir : {0, 1}) {
      auto order = stops;
      auto pts = path;
      if (dir == 1) {
        std::reverse(begin(order), end(order));
        std::reverse(begin(pts), end(pts));
      }
      auto n = 0;
      for (auto start = p.service_start; start <= p.service_end;
           start += headway, ++n) {
        char trip_id[64];
        std::snprintf(trip_id, sizeof(trip_id), "%s_%d_%03d",
                      route_id.c_str(), dir, n);
        f.trips.push_back(trip{trip_id, route_id, "DAILY"});
        auto t = start;
        for (auto i = std::size_t{0}; i != order.size(); ++i) {
          if (i != 0U) {
            auto const km = std::hypot(pts[i].first - pts[i - 1].first,
                                       pts[i].second - pts[i - 1].second);
            t += static_cast<seconds_t>(std::lround(km / speed_kmh * 3600.0));
          }
          auto const dep =
              i == 0U || i + 1 == order.size() ? t : t + dwell;
          f.stop_times.push_back(stop_time{trip_id, order[i], t, dep,
                                           static_cast<std::int32_t>(i)});
          t = dep;
        }
      }
    }
  }
};

}  // namespace

geo_point synthetic_position(synthetic_city_params const& p, double const x_km,
                             double const y_km) {
  auto const mid_lat =
      p.southwest.lat + p.size_km / 2.0 / kKmPerDegree;
  auto const lon_km = kKmPerDegree * std::cos(mid_lat * std::numbers::pi / 180.0);
  return {p.southwest.lat + y_km / kKmPerDegree,
          p.southwest.lon + x_km / lon_km};
}

feed make_synthetic_city(synthetic_city_params const& p) {
  auto f = feed{};
  auto b = line_builder{p, f, {}};

  auto const n_bus_stops =
      static_cast<int>(std::lround(p.size_km / p.bus_stop_spacing_km));
  auto line = 0;
  for (auto c = p.bus_line_spacing_km / 2.0; c < p.size_km;
       c += p.bus_line_spacing_km, ++line) {
    auto vertical = std::vector<std::pair<double, double>>{};
    auto horizontal = std::vector<std::pair<double, double>>{};
    for (auto i = 0; i <= n_bus_stops; ++i) {
      auto const v = i * p.bus_stop_spacing_km;
      vertical.emplace_back(c, v);
      horizontal.emplace_back(v, c);
    }
    b.add_line("BUS_V" + std::to_string(line), route_type::bus, vertical, 'B',
               p.bus_speed_kmh, p.bus_headway, 0);
    b.add_line("BUS_H" + std::to_string(line), route_type::bus, horizontal,
               'B', p.bus_speed_kmh, p.bus_headway, 0);
  }

  auto const center = p.size_km / 2.0;
  auto const n_sub = static_cast<int>(
      std::lround(p.subway_length_km / p.subway_stop_spacing_km));
  auto ns = std::vector<std::pair<double, double>>{};
  auto ew = std::vector<std::pair<double, double>>{};
  for (auto i = 0; i <= n_sub; ++i) {
    auto const v = center - p.subway_length_km / 2.0 +
                   i * p.subway_stop_spacing_km;
    ns.emplace_back(center, v);
    ew.emplace_back(v, center);
  }
  b.add_line("SUBWAY_NS", route_type::subway, ns, 'M', p.subway_speed_kmh,
             p.subway_headway, p.subway_dwell);
  b.add_line("SUBWAY_EW", route_type::subway, ew, 'M', p.subway_speed_kmh,
             p.subway_headway, p.subway_dwell);

  f.calendars.push_back(service_calendar{
      .service_id = "DAILY",
      .weekdays = {true, true, true, true, true, true, true},
      .start_date = p.service_date / 10000 * 10000 + 101,
      .end_date = p.service_date / 10000 * 10000 + 1231});
  f.passthrough_files["agency.txt"] =
      "agency_id,agency_name,agency_url,agency_timezone\n"
      "SYN,Synthetic City Transit,https://example.org,America/Los_Angeles\n";
  return f;
}

std::vector<rectangle> synthetic_city_rectangles(
    synthetic_city_params const& p) {
  auto const sw = synthetic_position(p, 0.0, 0.0);
  auto const mid = synthetic_position(p, p.size_km / 2.0, p.size_km / 2.0);
  auto const ne = synthetic_position(p, p.size_km, p.size_km);
  return {
      rectangle{sw.lat, mid.lat, sw.lon, mid.lon, std::nullopt},
      rectangle{sw.lat, mid.lat, mid.lon, ne.lon, std::nullopt},
      rectangle{mid.lat, ne.lat, sw.lon, mid.lon, std::nullopt},
      rectangle{mid.lat, ne.lat, mid.lon, ne.lon, std::nullopt},
  };
}

}  // namespace poollines
