#include <random>

#include "gtest/gtest.h"

#include "poollines/planner.h"
#include "poollines/poolline.h"

#include "support/oracle.h"

using namespace poollines;

namespace {

constexpr auto kA = geo_point{45.50, -122.60};
constexpr auto kB = geo_point{45.51, -122.60};
constexpr auto kC = geo_point{45.52, -122.60};

void add_trip(feed& f, std::string const& id, std::string const& route,
              std::vector<std::pair<std::string, seconds_t>> const& stops,
              seconds_t const dwell = 0) {
  for (auto i = std::size_t{0}; i != stops.size(); ++i) {
    f.stop_times.push_back(stop_time{id, stops[i].first, stops[i].second,
                                     stops[i].second + dwell,
                                     static_cast<std::int32_t>(i)});
  }
  f.trips.push_back(trip{id, route, "S"});
}

feed abc_feed() {
  auto f = feed{};
  f.stops = {{"A", "A", kA}, {"B", "B", kB}, {"C", "C", kC}};
  f.routes = {{.id = "L1", .type = route_type::bus},
              {.id = "L2", .type = route_type::bus}};
  add_trip(f, "T1", "L1", {{"A", 36000}, {"B", 36300}, {"C", 36600}});
  return f;
}

void check_accounting(itinerary const& it, plan_request const& req) {
  EXPECT_EQ(req.departure, it.depart);
  auto t = it.depart;
  auto rides = seconds_t{0};
  auto walk = 0.0;
  for (auto const& l : it.legs) {
    EXPECT_LE(t, l.board);
    EXPECT_LE(l.board, l.alight);
    rides += l.alight - l.board;
    t = l.alight;
    if (l.kind == leg_kind::walk) {
      walk += l.distance_km;
      EXPECT_FALSE(l.trip_id.has_value());
    } else {
      EXPECT_TRUE(l.trip_id.has_value());
    }
  }
  EXPECT_EQ(it.arrive, t);
  EXPECT_EQ(it.arrive - it.depart, rides + it.total_wait_s);
  EXPECT_NEAR(walk, it.total_walk_km, 1e-9);
}

}  // namespace

TEST(planner, same_place_is_walk_only) {
  auto const net = network{timetable{abc_feed()}, planner_params{}, 1.0};
  auto const req = plan_request{.from = kB, .to = kB, .departure = 35000};
  auto const it = earliest_arrival(net, req);
  ASSERT_TRUE(it.has_value());
  EXPECT_EQ(0U, it->ride_count());
  EXPECT_EQ(it->depart, it->arrive);
  check_accounting(*it, req);
}

TEST(planner, single_line) {
  auto const net = network{timetable{abc_feed()}, planner_params{}, 1.0};
  auto const req = plan_request{.from = kA, .to = kC, .departure = 35700};
  auto const it = earliest_arrival(net, req);
  ASSERT_TRUE(it.has_value());
  ASSERT_EQ(1U, it->legs.size());
  auto const& l = it->legs[0];
  EXPECT_EQ(leg_kind::transit, l.kind);
  EXPECT_EQ("T1", l.trip_id);
  EXPECT_EQ(36000, l.board);
  EXPECT_EQ(36600, l.alight);
  EXPECT_EQ(0, l.board_index);
  EXPECT_EQ(2, l.alight_index);
  EXPECT_EQ(36600, it->arrive);
  EXPECT_EQ(300, it->total_wait_s);
  check_accounting(*it, req);

  // Missed the bus: walking is all that is left.
  auto const late = earliest_arrival(net, plan_request{.from = kA, .to = kC, .departure = 36001});
  EXPECT_EQ(0U, late->ride_count());
  EXPECT_EQ(36001 + walk_seconds(kA, kC, travel_model{}), late->arrive);
}

TEST(planner, footpaths) {
  auto f = feed{};
  auto const east = geo_point{45.50, -122.60 + 1.0 / 1.3 / (111.19508 * std::cos(45.5 * 3.14159265358979 / 180.0))};
  f.stops = {{"A", "A", kA}, {"A2", "A2", kA}, {"E", "E", east}, {"F", "F", kC}};
  auto const tt = timetable{f};
  auto const fps = build_footpaths(tt, travel_model{}, 1.05);
  auto const find = [&](std::string const& a, std::string const& b) {
    for (auto const& fp : fps) {
      if (fp.from == *tt.find_stop(a) && fp.to == *tt.find_stop(b)) {
        return std::optional{fp};
      }
    }
    return std::optional<footpath>{};
  };
  ASSERT_TRUE(find("A", "A2"));
  EXPECT_EQ(0, find("A", "A2")->duration);
  ASSERT_TRUE(find("A", "E"));
  EXPECT_NEAR(1.0, find("A", "E")->km, 2e-3);
  EXPECT_NEAR(720, find("A", "E")->duration, 2);
  EXPECT_TRUE(find("E", "A"));
  EXPECT_FALSE(find("A", "F"));
  EXPECT_EQ(720, seconds_for_km(1.0, 5.0));
}

TEST(planner, transfer_needs_buffer_but_footpath_does_not) {
  auto f = abc_feed();
  f.stops.push_back({"C2", "C2", kC});
  f.stops.push_back({"D", "D", {45.60, -122.60}});
  // Leaves C 30 s after T1 arrives: too tight for a same-stop change.
  add_trip(f, "T2", "L2", {{"C", 36630}, {"D", 37200}});
  // Leaves the co-located stop C2 at the same time: reachable by a 0 s walk.
  add_trip(f, "T3", "L2", {{"C2", 36630}, {"D", 37300}});
  auto const net = network{timetable{f}, planner_params{}, 0.5};
  auto const req = plan_request{.from = kA, .to = {45.60, -122.60}, .departure = 35900};
  auto const it = earliest_arrival(net, req);
  ASSERT_TRUE(it.has_value());
  EXPECT_EQ(37300, it->arrive);
  EXPECT_EQ(2U, it->ride_count());
  EXPECT_EQ("T3", it->legs.back().trip_id);
  check_accounting(*it, req);

  auto const expected = oracle::earliest_arrival(
      net.tt(), net.footpaths(), oracle::routing_rules{}, req);
  EXPECT_EQ(expected, it->arrive);
}

TEST(planner, walks_do_not_chain) {
  auto f = abc_feed();
  // X is only reachable from C by two consecutive footpaths.
  auto const mid = geo_point{45.526, -122.60};
  auto const far = geo_point{45.532, -122.60};
  f.stops.push_back({"M", "M", mid});
  f.stops.push_back({"X", "X", far});
  f.stops.push_back({"Z", "Z", {45.70, -122.60}});
  add_trip(f, "TX", "L2", {{"X", 37500}, {"Z", 38500}});
  auto const tt = timetable{f};
  auto const s = [&](char const* id) { return *tt.find_stop(id); };
  auto const net = network{tt,
                           {footpath{s("C"), s("M"), 300, 0.6},
                            footpath{s("M"), s("X"), 300, 0.6}},
                           planner_params{.max_access_km = 0.5}};
  auto const req = plan_request{.from = kA, .to = {45.70, -122.60}, .departure = 35900};
  auto const it = earliest_arrival(net, req);
  EXPECT_EQ(0U, it->ride_count());
  EXPECT_EQ(oracle::earliest_arrival(tt, net.footpaths(),
                                     {.max_access_km = 0.5}, req),
            it->arrive);
}

TEST(planner, plan_alternatives) {
  auto f = abc_feed();
  add_trip(f, "T2", "L2", {{"A", 36300}, {"C", 36900}});
  auto const net = network{timetable{f}, planner_params{}, 1.0};
  auto const req = plan_request{.from = kA, .to = kC, .departure = 35700};

  auto const its = plan(net, req);
  ASSERT_EQ(3U, its.size());
  EXPECT_EQ("T1", its[0].first_ride()->trip_id);
  EXPECT_EQ("T2", its[1].first_ride()->trip_id);
  EXPECT_EQ(0U, its[2].ride_count());
  EXPECT_LE(its[0].arrive, its[1].arrive);

  auto one = req;
  one.num_itineraries = 1;
  ASSERT_EQ(1U, plan(net, one).size());
  EXPECT_EQ(its[0], plan(net, one)[0]);

  auto const single = network{timetable{abc_feed()}, planner_params{}, 1.0};
  auto const two = plan(single, req);
  ASSERT_EQ(2U, two.size());
  EXPECT_EQ(1U, two[0].ride_count());
  EXPECT_EQ(0U, two[1].ride_count());
}

TEST(planner, carpool_then_subway) {
  // Subway M1 -> M2 every 5 minutes; one driver passing M1.
  auto f = feed{};
  auto const m1 = geo_point{45.50, -122.60};
  auto const m2 = geo_point{45.60, -122.60};
  f.stops = {{"M1", "M1", m1}, {"M2", "M2", m2}};
  f.routes = {{.id = "SUB", .type = route_type::subway}};
  for (auto k = 0; k != 24; ++k) {
    auto const dep = 36000 + k * 300;
    add_trip(f, "S" + std::to_string(k), "SUB", {{"M1", dep}, {"M2", dep + 1200}});
  }
  auto const tt = timetable{f};
  auto const d = driver{.id = 5,
                        .origin = {45.47, -122.60},
                        .destination = {45.515, -122.60},
                        .departure = 36500};
  auto const j = compute_driver_journey(d, select_meeting_points(tt), journey_params{},
                                        detour_order::origin_first);
  ASSERT_EQ(3U, j.stop_times.size());
  auto const net = network{inject_poollines(tt, {j}), planner_params{}, 1.0};

  auto const req = plan_request{.from = {45.4705, -122.601},
                                .to = {45.601, -122.601},
                                .departure = 36000};
  auto const it = earliest_arrival(net, req);
  ASSERT_TRUE(it.has_value());
  ASSERT_EQ(4U, it->legs.size());
  EXPECT_EQ(leg_kind::walk, it->legs[0].kind);
  EXPECT_EQ(leg_kind::carpool, it->legs[1].kind);
  EXPECT_EQ("11622387005", it->legs[1].trip_id);
  EXPECT_EQ("DRIVER_origin_5", it->legs[1].from.stop_id);
  EXPECT_EQ("M1", it->legs[1].to.stop_id);
  EXPECT_EQ(0, it->legs[1].board_index);
  EXPECT_EQ(1, it->legs[1].alight_index);
  EXPECT_EQ(leg_kind::transit, it->legs[2].kind);
  EXPECT_GE(it->legs[2].board, it->legs[1].alight + 60);
  EXPECT_EQ(leg_kind::walk, it->legs[3].kind);
  check_accounting(*it, req);
  EXPECT_EQ(oracle::earliest_arrival(net.tt(), net.footpaths(), {}, req), it->arrive);

  // Mode filters.
  auto no_pool = req;
  no_pool.mode = plan_mode::transit_no_pool;
  EXPECT_EQ(0U, earliest_arrival(net, no_pool)->count(leg_kind::carpool));
  auto pool = req;
  pool.mode = plan_mode::pool_only;
  EXPECT_EQ(0U, earliest_arrival(net, pool)->count(leg_kind::transit));
  auto walk = req;
  walk.mode = plan_mode::walk_only;
  EXPECT_EQ(0U, earliest_arrival(net, walk)->ride_count());
  auto const walk_plan = plan(net, walk);
  ASSERT_EQ(1U, walk_plan.size());
  EXPECT_EQ(0U, walk_plan[0].ride_count());
}

TEST(planner, oracle_equivalence) {
  auto rng = std::mt19937_64{314};
  auto const rules = oracle::routing_rules{};
  auto const modes = std::array{plan_mode::transit, plan_mode::transit_no_pool,
                                plan_mode::pool_only};
  for (auto n = 0; n != 60; ++n) {
    auto const inst = oracle::make_random_instance(rng);
    auto const tt = timetable{inst.f};
    auto const fps = oracle::make_footpaths(tt, inst, rules.model);
    auto const net = network{tt, fps, planner_params{}};
    for (auto q = 0; q != 20; ++q) {
      auto const req = plan_request{
          .from = oracle::random_point(rng, 4.0),
          .to = oracle::random_point(rng, 4.0),
          .departure = static_cast<seconds_t>(
              std::uniform_int_distribution<int>{28000, 33000}(rng)),
          .mode = modes[static_cast<std::size_t>(q) % modes.size()]};
      auto const it = earliest_arrival(net, req);
      ASSERT_TRUE(it.has_value());
      EXPECT_EQ(oracle::earliest_arrival(tt, fps, rules, req), it->arrive)
          << "instance " << n << " query " << q;
      check_accounting(*it, req);

      // Banning the first ride re-solves on the smaller network.
      if (auto const* first = it->first_ride(); first != nullptr) {
        auto const t = *tt.find_trip(*first->trip_id);
        auto const banned = std::array{t};
        EXPECT_EQ(oracle::earliest_arrival(tt, fps, rules, req, {t}),
                  earliest_arrival(net, req, banned)->arrive);
      }
    }
  }
}

TEST(planner, monotone_in_departure) {
  auto rng = std::mt19937_64{8};
  for (auto n = 0; n != 30; ++n) {
    auto const inst = oracle::make_random_instance(rng);
    auto const tt = timetable{inst.f};
    auto const net = network{tt, oracle::make_footpaths(tt, inst, {}), planner_params{}};
    auto const from = oracle::random_point(rng, 4.0);
    auto const to = oracle::random_point(rng, 4.0);
    auto prev = seconds_t{0};
    for (auto dep = seconds_t{28800}; dep < 34000; dep += 97) {
      auto const a = earliest_arrival(net, {.from = from, .to = to, .departure = dep})->arrive;
      EXPECT_GE(a, prev);
      prev = a;
    }
  }
}

TEST(planner, superset_dominance) {
  auto rng = std::mt19937_64{21};
  for (auto n = 0; n != 30; ++n) {
    auto const inst = oracle::make_random_instance(rng);
    auto const full = timetable{inst.f};
    auto reduced_feed = inst.f;
    auto const drop = reduced_feed.trips.back().id;
    reduced_feed.trips.pop_back();
    std::erase_if(reduced_feed.stop_times,
                  [&](stop_time const& st) { return st.trip_id == drop; });
    auto const reduced = timetable{reduced_feed};
    auto const big = network{full, oracle::make_footpaths(full, inst, {}), planner_params{}};
    auto const small = network{reduced, oracle::make_footpaths(reduced, inst, {}), planner_params{}};
    for (auto q = 0; q != 20; ++q) {
      auto const req = plan_request{.from = oracle::random_point(rng, 4.0),
                                    .to = oracle::random_point(rng, 4.0),
                                    .departure = 29000};
      EXPECT_LE(earliest_arrival(big, req)->arrive, earliest_arrival(small, req)->arrive);
    }
  }
}

TEST(planner, date_mismatch_walks) {
  auto const net = network{timetable{abc_feed(), 20220720}, planner_params{}, 1.0};
  auto req = plan_request{.from = kA, .to = kC, .departure = 35700, .date = 20220720};
  EXPECT_EQ(1U, earliest_arrival(net, req)->ride_count());
  req.date = 20220721;
  EXPECT_EQ(0U, earliest_arrival(net, req)->ride_count());
}

TEST(planner, query_string) {
  auto const req = plan_request{.from = {45.5, -122.6},
                                .to = {45.52, -122.61},
                                .departure = 37800,
                                .date = 20220720,
                                .num_itineraries = 10,
                                .mode = plan_mode::transit};
  auto const q = to_query_string(req);
  EXPECT_EQ(
      "fromPlace=45.500000,-122.600000&toPlace=45.520000,-122.610000"
      "&time=10:30am&date=07-20-2022&numItineraries=10&mode=TRANSIT",
      q);
  auto const back = parse_query_string(q);
  EXPECT_EQ(req.from, back.from);
  EXPECT_EQ(req.to, back.to);
  EXPECT_EQ(req.departure, back.departure);
  EXPECT_EQ(req.date, back.date);
  EXPECT_EQ(req.num_itineraries, back.num_itineraries);
  EXPECT_EQ(req.mode, back.mode);

  auto odd = req;
  odd.departure = 13 * 3600 + 5 * 60 + 7;
  odd.mode = plan_mode::pool_only;
  auto const q2 = to_query_string(odd);
  EXPECT_NE(std::string::npos, q2.find("time=1:05pm"));
  EXPECT_EQ(odd.departure, parse_query_string(q2).departure);
  EXPECT_EQ(plan_mode::pool_only, parse_query_string("/plan?mode=POOL_ONLY").mode);
  EXPECT_EQ(12 * 3600 + 30 * 60, parse_query_string("time=12:30pm").departure);
  EXPECT_EQ(30 * 60, parse_query_string("time=12:30am").departure);
  EXPECT_THROW(parse_query_string("mode=BIKE"), std::invalid_argument);
}

TEST(planner, itinerary_csv) {
  auto const net = network{timetable{abc_feed()}, planner_params{}, 1.0};
  auto const its = plan(net, {.from = kA, .to = kC, .departure = 35700});
  auto const csv = itineraries_to_csv(its);
  EXPECT_EQ(0U, csv.find("itinerary,leg,kind,"));
  EXPECT_NE(std::string::npos, csv.find("0,0,transit,A,"));
  EXPECT_NE(std::string::npos, csv.find("1,0,walk,,"));
}
