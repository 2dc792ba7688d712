#include "gtest/gtest.h"

#include "poollines/error.h"
#include "poollines/poolline.h"
#include "poollines/synthetic_city.h"

using namespace poollines;

namespace {

timetable small_city() {
  auto f = feed{};
  f.stops = {{"SUB_A", "A", {45.50, -122.60}}, {"SUB_B", "B", {45.52, -122.60}}};
  f.routes = {{.id = "SUB", .long_name = "Subway", .type = route_type::subway}};
  f.trips = {{"t1", "SUB", "DAILY"}};
  f.stop_times = {{"t1", "SUB_A", 36000, 36000, 1},
                  {"t1", "SUB_B", 36300, 36300, 2}};
  f.calendars = {{"DAILY", {true, true, true, true, true, true, true}, 20220101,
                  20221231}};
  return timetable{f, 20220720};
}

driver_journey journey_for(driver_id_t id, timetable const& tt) {
  auto const m = select_meeting_points(tt);
  return compute_driver_journey(
      driver{.id = id, .origin = {45.49, -122.601}, .destination = {45.53, -122.599},
             .departure = 37800},
      m, journey_params{}, detour_order::origin_first);
}

}  // namespace

TEST(poolline, naming) {
  EXPECT_EQ("11622387007", poolline_trip_id(7));
  EXPECT_EQ("route of carpooler number 7", poolline_route_name(7));
  EXPECT_EQ("DRIVER_origin_7", poolline_origin_stop_id(7));
  EXPECT_EQ("DRIVER_destination_7", poolline_destination_stop_id(7));
  EXPECT_EQ(route_type::bus, poolline_route_type());
  EXPECT_EQ(7, poolline_driver("11622387007"));
  EXPECT_EQ(std::nullopt, poolline_driver("1162238700"));
  EXPECT_EQ(std::nullopt, poolline_driver("BUS_1"));
}

TEST(poolline, empty_injection_is_identity) {
  auto const tt = small_city();
  EXPECT_EQ(tt, inject_poollines(tt, {}));
}

TEST(poolline, driver_seven) {
  auto const tt = small_city();
  auto const j = journey_for(7, tt);
  ASSERT_EQ(4U, j.stop_times.size());
  auto const out = inject_poollines(tt, {j});

  auto const r = out.find_route("11622387007");
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ("route of carpooler number 7", out.routes()[*r].name());
  EXPECT_EQ("PoolLine", out.routes()[*r].desc);
  EXPECT_EQ(route_type::bus, out.routes()[*r].type);

  auto const t = out.find_trip("11622387007");
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(is_poolline(out, *t));
  EXPECT_FALSE(is_poolline(out, *out.find_trip("t1")));

  auto const sts = out.stop_times(*t);
  ASSERT_EQ(4U, sts.size());
  EXPECT_EQ("DRIVER_origin_7", sts[0].stop_id);
  EXPECT_EQ("SUB_A", sts[1].stop_id);
  EXPECT_EQ("SUB_B", sts[2].stop_id);
  EXPECT_EQ("DRIVER_destination_7", sts[3].stop_id);
  for (auto i = std::size_t{0}; i != sts.size(); ++i) {
    EXPECT_EQ(j.stop_times[i].arrival, sts[i].arrival);
    EXPECT_EQ(j.stop_times[i].departure, sts[i].departure);
  }
  EXPECT_EQ(j.stop_times.front().location,
            out.stops()[*out.find_stop("DRIVER_origin_7")].pos);

  // Additive: the original content is still there, unchanged.
  EXPECT_EQ(tt.stops().size() + 2, out.stops().size());
  EXPECT_EQ(tt.trips().size() + 1, out.trips().size());
  for (auto const& s : tt.stops()) {
    EXPECT_EQ(s, out.stops()[*out.find_stop(s.id)]);
  }
  EXPECT_EQ(tt.stop_times(0)[0], out.stop_times(*out.find_trip("t1"))[0]);

  // Ephemeral: the PoolLine service runs on the simulation date only.
  auto const& trip = out.trips()[*t];
  EXPECT_TRUE(service_active(out.data(), trip.service_id, 20220720));
  EXPECT_FALSE(service_active(out.data(), trip.service_id, 20220721));
  EXPECT_TRUE(service_active(out.data(), "DAILY", 20220721));

  // Round trip through the writer.
  EXPECT_EQ(out, parse_gtfs(serialize_gtfs(out), {.service_date = 20220720}));
}

TEST(poolline, duplicate_driver_and_collisions) {
  auto const tt = small_city();
  auto const j = journey_for(7, tt);
  EXPECT_THROW(inject_poollines(tt, {j, j}), duplicate_driver_id_error);

  auto const once = inject_poollines(tt, {j});
  EXPECT_THROW(inject_poollines(once, {j}), id_collision_error);
}

TEST(poolline, many_drivers_bijection) {
  auto const tt = timetable{make_synthetic_city(), 20220720};
  auto journeys = std::vector<driver_journey>{};
  for (auto id = 0; id != 30; ++id) {
    journeys.push_back(compute_driver_journey(
        driver{.id = id,
               .origin = synthetic_position({}, 1.0 + id * 0.5, 2.0),
               .destination = synthetic_position({}, 18.0, 3.0 + id * 0.4),
               .departure = 37800 + id},
        select_meeting_points(tt), journey_params{},
        id % 2 == 0 ? detour_order::origin_first : detour_order::destination_first));
  }
  auto const out = inject_poollines(tt, journeys);
  EXPECT_EQ(tt.trips().size() + journeys.size(), out.trips().size());
  EXPECT_EQ(tt.routes().size() + journeys.size(), out.routes().size());
  for (auto const& j : journeys) {
    auto const t = out.find_trip(poolline_trip_id(j.driver_id));
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(j.stop_times.size(), out.stop_times(*t).size());
  }
}
