#include "gtest/gtest.h"

#include "poollines/error.h"
#include "poollines/run_config.h"
#include "poollines/synthetic_city.h"

using namespace poollines;

TEST(run_config, defaults) {
  auto const c = parse_run_config("{}");
  EXPECT_DOUBLE_EQ(0.15, c.simulation.journey.max_detour_ratio);
  EXPECT_EQ(60, c.simulation.journey.dwell);
  EXPECT_EQ(2700, c.simulation.rules.max_wait);
  EXPECT_DOUBLE_EQ(2.5, c.simulation.rules.max_walk_km);
  EXPECT_DOUBLE_EQ(97.0, c.simulation.emissions.grams_per_km);
  EXPECT_EQ(4U, c.scenario.rectangles.size());
  EXPECT_EQ(4, c.scenario.seat_capacity);
  EXPECT_EQ(37800, c.scenario.sim_window.start);
  EXPECT_EQ(41400, c.scenario.sim_window.end);
}

TEST(run_config, reads_nested_keys) {
  auto const c = parse_run_config(R"({
    "gtfs_path": "feed", "service_date": 20220720, "seed": 7, "tau": 0.2,
    "travel_model": {"circuity": 1.5},
    "feasibility": {"max_wait_s": 600, "walk_time_bound": false},
    "meeting_point_route_types": [1, 3],
    "scenario": {"preset": "portland", "rider_count": 12,
                 "sim_window": ["08:00:00", 32400],
                 "stats_window": ["08:15:00", "08:45:00"]}
  })", "/base");
  EXPECT_EQ("/base/feed", c.gtfs_path);
  EXPECT_EQ(20220720, c.service_date);
  EXPECT_EQ(7U, c.scenario.seed);
  EXPECT_DOUBLE_EQ(1.5, c.simulation.journey.model.circuity);
  EXPECT_FALSE(c.simulation.rules.walk_time_bound);
  EXPECT_EQ(600, c.simulation.rules.max_wait);
  EXPECT_EQ(2U, c.simulation.meeting_point_types.size());
  EXPECT_EQ(portland_rectangles().size(), c.scenario.rectangles.size());
  EXPECT_EQ(12, c.scenario.rider_count);
  EXPECT_EQ(8 * 3600, c.scenario.sim_window.start);
  EXPECT_EQ(9 * 3600, c.scenario.sim_window.end);
}

TEST(run_config, rejects_bad_input) {
  EXPECT_THROW(parse_run_config("{"), config_error);
  EXPECT_THROW(parse_run_config(R"({"taux": 1})"), config_error);
  EXPECT_THROW(parse_run_config(R"({"scenario": {"bogus": 1}})"), config_error);
  EXPECT_THROW(parse_run_config(R"({"tau": "high"})"), config_error);
  EXPECT_THROW(parse_run_config(R"({"tau": -0.1})"), config_error);
  EXPECT_THROW(parse_run_config(R"({"seed": 1.5})"), config_error);
  EXPECT_THROW(parse_run_config(R"({"scenario": {"preset": "mars"}})"), config_error);
  EXPECT_THROW(parse_run_config(R"({"scenario": {"sim_window": ["x", 1]}})"),
               config_error);
  EXPECT_THROW(parse_run_config(R"({"service_date": 2022})"), config_error);
  EXPECT_THROW(load_run_config("/nonexistent/config.json"), config_error);
}

TEST(run_config, overrides) {
  auto const text = apply_overrides(R"({"tau": 0.15})",
                                    {"tau=0.3", "scenario.rider_count=5",
                                     "gtfs_path=some/dir", "feasibility.walk_time_bound=false"});
  auto const c = parse_run_config(text);
  EXPECT_DOUBLE_EQ(0.3, c.simulation.journey.max_detour_ratio);
  EXPECT_EQ(5, c.scenario.rider_count);
  EXPECT_EQ("some/dir", c.gtfs_path);
  EXPECT_FALSE(c.simulation.rules.walk_time_bound);
  EXPECT_THROW(apply_overrides("{}", {"novalue"}), config_error);
  EXPECT_THROW(apply_overrides(R"({"tau": 1})", {"tau.x=1"}), config_error);
}

TEST(run_config, json_round_trip) {
  auto const c = parse_run_config(R"({"seed": 3, "scenario": {"rider_count": 9,
      "rectangles": [{"min_lat": 45, "max_lat": 45.1, "min_lon": -122.7,
                      "max_lon": -122.6, "weight": 2}]}})");
  auto const text = to_json(c);
  EXPECT_EQ(text, to_json(parse_run_config(text)));
}
