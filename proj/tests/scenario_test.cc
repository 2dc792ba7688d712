#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"

#include "poollines/error.h"
#include "poollines/scenario.h"
#include "poollines/synthetic_city.h"

using namespace poollines;

namespace {

scenario_config small_config() {
  auto cfg = scenario_config{};
  cfg.rectangles = synthetic_city_rectangles();
  cfg.driver_density = 0.3;
  cfg.rider_density = 0.5;
  cfg.seed = 9;
  return cfg;
}

}  // namespace

TEST(scenario, agent_count_rounding) {
  EXPECT_EQ(5499, agent_count(8.3, 662.47, 3600));
  EXPECT_EQ(3180, agent_count(4.8, 662.47, 3600));
  EXPECT_EQ(2, agent_count(1.0, 2.5, 3600));  // half rounds down
  EXPECT_EQ(3, agent_count(1.0, 2.51, 3600));
  EXPECT_EQ(0, agent_count(0.0, 662.47, 3600));
  EXPECT_EQ(1, agent_count(1.0, 2.0, 1800));
}

TEST(scenario, sample_point_is_uniform) {
  auto const rects = std::vector{rectangle{45.0, 45.2, -122.8, -122.4, {}}};
  auto rng = std::mt19937_64{4};
  auto lat = 0.0;
  auto lon = 0.0;
  auto const n = 100000;
  for (auto i = 0; i != n; ++i) {
    auto const p = sample_point(rects, rng);
    ASSERT_TRUE(rects[0].contains(p));
    lat += p.lat;
    lon += p.lon;
  }
  // Within 1% of the half-width around the centre.
  EXPECT_NEAR(45.1, lat / n, 0.001);
  EXPECT_NEAR(-122.6, lon / n, 0.002);
}

TEST(scenario, sample_point_weights) {
  auto rects = std::vector{rectangle{45.0, 45.1, -122.8, -122.7, 1.0},
                           rectangle{46.0, 46.1, -122.8, -122.7, 0.0}};
  auto rng = std::mt19937_64{5};
  for (auto i = 0; i != 1000; ++i) {
    EXPECT_TRUE(rects[0].contains(sample_point(rects, rng)));
  }

  rects[1].weight = 1.0;
  auto first = 0;
  auto const n = 10000;
  for (auto i = 0; i != n; ++i) {
    first += rects[0].contains(sample_point(rects, rng)) ? 1 : 0;
  }
  EXPECT_NEAR(0.5, static_cast<double>(first) / n, 0.02);

  // Default weight is the area.
  rects = {rectangle{45.0, 45.1, -122.8, -122.7, {}},
           rectangle{46.0, 46.3, -122.8, -122.7, {}}};
  first = 0;
  for (auto i = 0; i != n; ++i) {
    first += rects[0].contains(sample_point(rects, rng)) ? 1 : 0;
  }
  auto const expected = rects[0].area_km2() / (rects[0].area_km2() + rects[1].area_km2());
  EXPECT_NEAR(expected, static_cast<double>(first) / n, 0.02);
}

TEST(scenario, generated_counts_and_bounds) {
  auto const cfg = small_config();
  auto const s = generate_scenario(cfg, nullptr);
  auto const area = cfg.area();
  EXPECT_NEAR(400.0, area, 1.0);
  EXPECT_EQ(agent_count(0.3, area, 3600), std::ssize(s.drivers));
  EXPECT_EQ(agent_count(0.5, area, 3600), std::ssize(s.riders));

  auto const inside = [&](geo_point const& p) {
    return std::any_of(begin(cfg.rectangles), end(cfg.rectangles),
                       [&](rectangle const& r) { return r.contains(p); });
  };
  for (auto const& d : s.drivers) {
    EXPECT_TRUE(inside(d.origin));
    EXPECT_TRUE(inside(d.destination));
    EXPECT_TRUE(cfg.sim_window.contains(d.departure));
    EXPECT_EQ(cfg.sim_window.start, d.declaration);
    EXPECT_EQ(4, d.seat_capacity);
  }
  for (auto const& r : s.riders) {
    EXPECT_TRUE(inside(r.origin));
    EXPECT_TRUE(cfg.sim_window.contains(r.departure));
  }
}

TEST(scenario, zero_density_and_overrides) {
  auto cfg = small_config();
  cfg.driver_density = 0.0;
  cfg.rider_density = 0.0;
  auto s = generate_scenario(cfg, nullptr);
  EXPECT_TRUE(s.drivers.empty());
  EXPECT_TRUE(s.riders.empty());

  cfg.driver_count = 7;
  cfg.rider_count = 11;
  s = generate_scenario(cfg, nullptr);
  EXPECT_EQ(7U, s.drivers.size());
  EXPECT_EQ(11U, s.riders.size());
}

TEST(scenario, deterministic_per_seed) {
  auto cfg = small_config();
  auto const a = agents_to_csv(generate_scenario(cfg, nullptr));
  auto const b = agents_to_csv(generate_scenario(cfg, nullptr));
  EXPECT_EQ(a, b);
  cfg.seed = 10;
  EXPECT_NE(a, agents_to_csv(generate_scenario(cfg, nullptr)));
}

TEST(scenario, departures_pass_ks_test) {
  auto cfg = small_config();
  cfg.rider_count = 4000;
  auto const s = generate_scenario(cfg, nullptr);
  auto t = std::vector<double>{};
  for (auto const& r : s.riders) {
    t.push_back(static_cast<double>(r.departure - cfg.sim_window.start) /
                static_cast<double>(cfg.sim_window.length()));
  }
  std::sort(begin(t), end(t));
  auto d = 0.0;
  auto const n = static_cast<double>(t.size());
  for (auto i = std::size_t{0}; i != t.size(); ++i) {
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - t[i],
                  t[i] - static_cast<double>(i) / n});
  }
  // Critical value at alpha = 0.01.
  EXPECT_LT(d, 1.63 / std::sqrt(n));
}

TEST(scenario, agents_csv_round_trip) {
  auto const cfg = small_config();
  auto const s = generate_scenario(cfg, nullptr);
  auto const text = agents_to_csv(s);
  auto const back = agents_from_csv(text, cfg, nullptr);
  ASSERT_EQ(s.drivers.size(), back.drivers.size());
  ASSERT_EQ(s.riders.size(), back.riders.size());
  for (auto i = std::size_t{0}; i != s.drivers.size(); ++i) {
    EXPECT_EQ(s.drivers[i].origin, back.drivers[i].origin);
    EXPECT_EQ(s.drivers[i].destination, back.drivers[i].destination);
    EXPECT_EQ(s.drivers[i].departure, back.drivers[i].departure);
    EXPECT_EQ(s.drivers[i].declaration, back.drivers[i].declaration);
  }
  for (auto i = std::size_t{0}; i != s.riders.size(); ++i) {
    EXPECT_EQ(s.riders[i].origin, back.riders[i].origin);
    EXPECT_EQ(s.riders[i].departure, back.riders[i].departure);
  }
  EXPECT_EQ(text, agents_to_csv(back));
}

TEST(scenario, agents_csv_errors) {
  auto const cfg = small_config();
  EXPECT_THROW(agents_from_csv("kind,id\nrider,1\n", cfg, nullptr), data_error);
  EXPECT_THROW(
      agents_from_csv("kind,id,origin_lat,origin_lon,destination_lat,"
                      "destination_lon,departure\nbus,1,45,-122,45,-122,0\n",
                      cfg, nullptr),
      data_error);
  EXPECT_THROW(
      agents_from_csv("kind,id,origin_lat,origin_lon,destination_lat,"
                      "destination_lon,departure\nrider,1,x,-122,45,-122,0\n",
                      cfg, nullptr),
      data_error);
}

TEST(scenario, config_validation) {
  auto cfg = small_config();
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.rectangles.clear();
  EXPECT_THROW(bad.validate(), config_error);
  bad = cfg;
  bad.stats_window = {0, 10};
  EXPECT_THROW(bad.validate(), config_error);
  bad = cfg;
  bad.rider_density = -1.0;
  EXPECT_THROW(bad.validate(), config_error);
  bad = cfg;
  bad.rectangles = {rectangle{45.0, 45.1, -122.8, -122.7, 0.0}};
  EXPECT_THROW(bad.validate(), config_error);
}

TEST(scenario, portland_area) {
  auto cfg = scenario_config{.rectangles = portland_rectangles()};
  EXPECT_GT(cfg.area(), 300.0);
  EXPECT_LT(cfg.area(), 1200.0);
}
