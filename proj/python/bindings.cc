#include <fstream>
#include <iterator>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "poollines/error.h"
#include "poollines/gtfs.h"
#include "poollines/planner.h"
#include "poollines/poolline.h"
#include "poollines/run_config.h"
#include "poollines/scenario.h"
#include "poollines/simulation.h"
#include "poollines/synthetic_city.h"

namespace py = pybind11;
using namespace poollines;

namespace {

using timetable_ptr = std::shared_ptr<timetable>;

std::string read_text(std::filesystem::path const& p) {
  auto in = std::ifstream{p, std::ios::binary};
  if (!in) {
    throw config_error{"cannot read " + p.string()};
  }
  return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

geo_point point(std::pair<double, double> const& p) { return {p.first, p.second}; }

plan_mode mode_of(std::string const& s) {
  for (auto const m : {plan_mode::transit, plan_mode::walk_only,
                       plan_mode::transit_no_pool, plan_mode::pool_only}) {
    if (to_string(m) == s) {
      return m;
    }
  }
  throw py::value_error{"unknown plan mode: " + s};
}

py::dict to_dict(itinerary const& it) {
  auto legs = py::list{};
  for (auto const& l : it.legs) {
    auto d = py::dict{};
    d["kind"] = std::string{to_string(l.kind)};
    d["board"] = l.board;
    d["alight"] = l.alight;
    d["distance_km"] = l.distance_km;
    d["trip_id"] = l.trip_id;
    d["from_stop"] = l.from.stop_id;
    d["to_stop"] = l.to.stop_id;
    legs.append(d);
  }
  auto d = py::dict{};
  d["depart"] = it.depart;
  d["arrive"] = it.arrive;
  d["walk_km"] = it.total_walk_km;
  d["wait_s"] = it.total_wait_s;
  d["legs"] = legs;
  return d;
}

py::dict to_dict(simulation_report const& r) {
  auto split = py::dict{};
  for (auto k = std::size_t{0}; k != kTravelModeCount; ++k) {
    split[py::str{std::string{to_string(static_cast<travel_mode>(k))}}] =
        r.modal_split[k];
  }
  auto served = 0;
  auto counted = 0;
  for (auto i = std::size_t{0}; i != r.outcomes.size(); ++i) {
    if (r.in_stats[i]) {
      ++counted;
      served += r.outcomes[i].served() ? 1 : 0;
    }
  }
  auto d = py::dict{};
  d["stats_riders"] = counted;
  d["served"] = served;
  d["modal_split_percent"] = split;
  d["occupancy_hist"] = r.occupancy_hist;
  d["detour_km_bins"] = r.detours.km_bins;
  d["detour_ratio_bins"] = r.detours.ratio_bins;
  d["voided_drivers"] = r.voided_drivers;
  d["vkt_saved_km"] = r.vkt_saved_km;
  d["co2_saved_kg_per_hour"] = r.co2_saved_kg_per_hour;
  return d;
}

py::dict run_simulation(scenario const& s, simulation_config const& cfg,
                        std::optional<std::filesystem::path> const& out) {
  auto const p = [&] {
    py::gil_scoped_release release;
    return prepare(s, cfg);
  }();
  auto reports = std::array<simulation_report, 3>{};
  {
    py::gil_scoped_release release;
    reports = run_all(p, cfg);
    if (out) {
      write_reports(reports, p, cfg, *out);
    }
  }
  auto d = py::dict{};
  for (auto const& r : reports) {
    d[py::str{std::string{to_string(r.variant)}}] = to_dict(r);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_poollines, m) {
  m.doc() = "Carpooling journeys injected into a transit timetable.";

  py::register_exception<data_error>(m, "DataError", PyExc_ValueError);
  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<io_error>(m, "IoError", PyExc_OSError);

  m.def("haversine_km",
        [](std::pair<double, double> a, std::pair<double, double> b) {
          return haversine_km(point(a), point(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("parse_gtfs_time", &parse_gtfs_time);
  m.def("format_gtfs_time", &format_gtfs_time);

  py::class_<timetable, timetable_ptr>(m, "Timetable")
      .def_property_readonly("num_stops", [](timetable const& t) { return t.stops().size(); })
      .def_property_readonly("num_routes", [](timetable const& t) { return t.routes().size(); })
      .def_property_readonly("num_trips", [](timetable const& t) { return t.trips().size(); })
      .def_property_readonly("num_stop_times",
                             [](timetable const& t) { return t.stop_times().size(); })
      .def_property_readonly("service_date", &timetable::service_date)
      .def("has_stop", [](timetable const& t, std::string const& id) {
        return t.find_stop(id).has_value();
      })
      .def("has_trip", [](timetable const& t, std::string const& id) {
        return t.find_trip(id).has_value();
      })
      .def("files", [](timetable const& t) { return serialize_gtfs(t); },
           "GTFS file name -> CSV text")
      .def("write", [](timetable const& t, std::filesystem::path const& dir) {
        write_gtfs(t, dir);
      })
      .def("__eq__", [](timetable const& a, timetable const& b) { return a == b; });

  m.def("parse_gtfs",
        [](std::filesystem::path const& dir, std::optional<std::int32_t> date) {
          return std::make_shared<timetable>(parse_gtfs(dir, {.service_date = date}));
        },
        py::arg("path"), py::arg("service_date") = py::none());
  m.def("parse_gtfs_files",
        [](std::map<std::string, std::string> const& files,
           std::optional<std::int32_t> date) {
          return std::make_shared<timetable>(parse_gtfs(files, {.service_date = date}));
        },
        py::arg("files"), py::arg("service_date") = py::none());
  m.def("synthetic_city",
        [](std::optional<std::int32_t> date) {
          return std::make_shared<timetable>(make_synthetic_city(), date);
        },
        py::arg("service_date") = 20220720);

  py::class_<scenario, std::shared_ptr<scenario>>(m, "Scenario")
      .def_property_readonly("num_drivers", [](scenario const& s) { return s.drivers.size(); })
      .def_property_readonly("num_riders", [](scenario const& s) { return s.riders.size(); })
      .def("agents_csv", [](scenario const& s) { return agents_to_csv(s); });

  m.def("generate_scenario",
        [](timetable_ptr tt, std::uint64_t seed, double driver_density,
           double rider_density, std::optional<std::int64_t> driver_count,
           std::optional<std::int64_t> rider_count) {
          auto cfg = scenario_config{};
          cfg.rectangles = synthetic_city_rectangles();
          cfg.seed = seed;
          cfg.driver_density = driver_density;
          cfg.rider_density = rider_density;
          cfg.driver_count = driver_count;
          cfg.rider_count = rider_count;
          return std::make_shared<scenario>(generate_scenario(cfg, std::move(tt)));
        },
        py::arg("timetable"), py::arg("seed") = 1, py::arg("driver_density") = 4.8,
        py::arg("rider_density") = 8.3, py::arg("driver_count") = py::none(),
        py::arg("rider_count") = py::none(),
        "Agents spread over the synthetic city quadrants.");
  m.def("agent_count", &agent_count, py::arg("density"), py::arg("area_km2"),
        py::arg("window_s") = 3600);

  m.def("inject_poollines",
        [](scenario const& s, double tau) {
          auto const& tt = *s.tt;
          auto p = journey_params{};
          p.max_detour_ratio = tau;
          auto journeys = std::vector<driver_journey>{};
          if (!s.drivers.empty()) {
            journeys = compute_driver_journeys(s.drivers, select_meeting_points(tt), p,
                                               s.config.seed);
          }
          return std::make_shared<timetable>(inject_poollines(tt, journeys));
        },
        py::arg("scenario"), py::arg("tau") = 0.15,
        "Timetable of the scenario with one PoolLine per driver.");

  py::class_<network>(m, "Network")
      .def(py::init([](timetable const& tt, double max_footpath_km) {
             return network{tt, planner_params{}, max_footpath_km};
           }),
           py::arg("timetable"), py::arg("max_footpath_km") = 1.0)
      .def("earliest_arrival",
           [](network const& net, std::pair<double, double> from,
              std::pair<double, double> to, seconds_t departure,
              std::string const& mode) -> std::optional<py::dict> {
             auto const it = earliest_arrival(
                 net, {.from = point(from), .to = point(to), .departure = departure,
                       .date = net.tt().service_date(), .mode = mode_of(mode)});
             return it ? std::optional{to_dict(*it)} : std::nullopt;
           },
           py::arg("origin"), py::arg("destination"), py::arg("departure"),
           py::arg("mode") = "TRANSIT")
      .def("plan",
           [](network const& net, std::pair<double, double> from,
              std::pair<double, double> to, seconds_t departure,
              std::string const& mode, std::int32_t n) {
             auto out = py::list{};
             for (auto const& it :
                  plan(net, {.from = point(from), .to = point(to), .departure = departure,
                             .date = net.tt().service_date(), .num_itineraries = n,
                             .mode = mode_of(mode)})) {
               out.append(to_dict(it));
             }
             return out;
           },
           py::arg("origin"), py::arg("destination"), py::arg("departure"),
           py::arg("mode") = "TRANSIT", py::arg("num_itineraries") = 10);

  m.def("simulate",
        [](scenario const& s, bool enforce_capacity, double tau, unsigned threads,
           std::optional<std::filesystem::path> out) {
          auto cfg = simulation_config{};
          cfg.enforce_capacity = enforce_capacity;
          cfg.journey.max_detour_ratio = tau;
          cfg.threads = threads;
          return run_simulation(s, cfg, out);
        },
        py::arg("scenario"), py::arg("enforce_capacity") = true, py::arg("tau") = 0.15,
        py::arg("threads") = 0, py::arg("output_dir") = py::none(),
        "Runs all three systems; returns per-variant statistics.");

  m.def("simulate_config",
        [](std::filesystem::path const& config, std::vector<std::string> const& overrides) {
          auto const c = parse_run_config(apply_overrides(read_text(config), overrides),
                                          config.parent_path());
          auto const tt = std::make_shared<timetable const>(
              parse_gtfs(c.gtfs_path, {.service_date = c.service_date}));
          auto const s = c.agents_path
                             ? agents_from_csv(read_text(*c.agents_path), c.scenario, tt)
                             : generate_scenario(c.scenario, tt);
          return run_simulation(s, c.simulation, c.output_dir);
        },
        py::arg("config"), py::arg("overrides") = std::vector<std::string>{},
        "Same as the command line `simulate`: reads a JSON run config and "
        "writes the reports to its output_dir.");
}
