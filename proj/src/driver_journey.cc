#include "poollines/driver_journey.h"

#include <algorithm>
#include <set>

#include "poollines/error.h"

namespace poollines {

std::size_t meeting_point_set::nearest(geo_point const& p) const {
  auto best = std::size_t{0};
  auto best_km = haversine_km(p, points.at(0).pos);
  for (auto i = std::size_t{1}; i < points.size(); ++i) {
    auto const km = haversine_km(p, points[i].pos);
    if (km < best_km) {
      best = i;
      best_km = km;
    }
  }
  return best;
}

meeting_point_set select_meeting_points(timetable const& tt,
                                        std::vector<route_type> const& types) {
  auto served = std::vector<bool>(tt.stops().size(), false);
  for (auto t = trip_idx_t{0}; t != tt.trips().size(); ++t) {
    auto const type = tt.routes()[tt.route_of(t)].type;
    if (std::find(begin(types), end(types), type) == end(types)) {
      continue;
    }
    for (auto const& st : tt.stop_times(t)) {
      served[tt.stop_of(st)] = true;
    }
  }
  auto mps = meeting_point_set{};
  for (auto s = stop_idx_t{0}; s != served.size(); ++s) {
    if (served[s]) {
      mps.points.push_back({tt.stops()[s].id, tt.stops()[s].pos});
    }
  }
  if (mps.empty()) {
    throw empty_meeting_point_set_error{
        "no stop is served by a meeting-point route type"};
  }
  return mps;
}

double journey_length_km(std::vector<journey_stop_time> const& sts,
                         travel_model const& m) {
  auto km = 0.0;
  for (auto i = std::size_t{1}; i < sts.size(); ++i) {
    km += road_km(sts[i - 1].location, sts[i].location, m);
  }
  return km;
}

namespace {

// Recomputes arrival/departure of every stoptime after the origin.
void retime(std::vector<journey_stop_time>& sts, journey_params const& p) {
  for (auto i = std::size_t{1}; i < sts.size(); ++i) {
    auto& st = sts[i];
    st.arrival = sts[i - 1].departure +
                 drive_seconds(sts[i - 1].location, st.location, p.model);
    st.departure = st.stop_id.has_value() ? st.arrival + p.dwell : st.arrival;
  }
}

}  // namespace

driver_journey compute_driver_journey(driver const& d,
                                      meeting_point_set const& mps,
                                      journey_params const& p,
                                      detour_order const order) {
  auto j = driver_journey{};
  j.driver_id = d.id;
  j.order = order;
  j.stop_times = {
      journey_stop_time{d.origin, std::nullopt, d.departure, d.departure},
      journey_stop_time{d.destination, std::nullopt, 0, 0}};
  retime(j.stop_times, p);
  j.baseline_km = road_km(d.origin, d.destination, p.model);
  j.length_km = j.baseline_km;

  if (j.baseline_km <= 0.0 || mps.empty()) {
    return j;
  }

  auto const try_insert = [&](bool const origin_side) {
    auto const& mp =
        mps.points[mps.nearest(origin_side ? d.origin : d.destination)];
    auto const already = std::any_of(
        begin(j.stop_times), end(j.stop_times),
        [&](journey_stop_time const& st) { return st.stop_id == mp.stop_id; });
    if (already) {
      return;
    }
    auto candidate = j.stop_times;
    auto const pos = origin_side ? begin(candidate) + 1 : end(candidate) - 1;
    candidate.insert(pos, journey_stop_time{mp.pos, mp.stop_id, 0, 0});
    auto const len = journey_length_km(candidate, p.model);
    if ((len - j.baseline_km) / j.baseline_km <= p.max_detour_ratio) {
      retime(candidate, p);
      j.stop_times = std::move(candidate);
      j.length_km = len;
    }
  };

  auto const origin_first = order == detour_order::origin_first;
  try_insert(origin_first);
  try_insert(!origin_first);
  return j;
}

driver_journey compute_driver_journey(driver const& d,
                                      meeting_point_set const& mps,
                                      journey_params const& p,
                                      std::mt19937_64& rng) {
  auto const order = unit_uniform(rng) < 0.5 ? detour_order::origin_first
                                             : detour_order::destination_first;
  return compute_driver_journey(d, mps, p, order);
}

std::mt19937_64 driver_rng(std::uint64_t const master_seed,
                           driver_id_t const id) {
  auto const u = static_cast<std::uint64_t>(id);
  auto seq = std::seed_seq{
      static_cast<std::uint32_t>(master_seed),
      static_cast<std::uint32_t>(master_seed >> 32U),
      static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u >> 32U)};
  return std::mt19937_64{seq};
}

std::vector<driver_journey> compute_driver_journeys(
    std::vector<driver> const& drivers, meeting_point_set const& mps,
    journey_params const& p, std::uint64_t const master_seed) {
  auto order = std::vector<driver const*>{};
  order.reserve(drivers.size());
  for (auto const& d : drivers) {
    order.push_back(&d);
  }
  std::stable_sort(begin(order), end(order), [](auto const* a, auto const* b) {
    return std::tie(a->declaration, a->id) < std::tie(b->declaration, b->id);
  });

  auto journeys = std::vector<driver_journey>{};
  journeys.reserve(drivers.size());
  for (auto const* d : order) {
    auto rng = driver_rng(master_seed, d->id);
    journeys.push_back(compute_driver_journey(*d, mps, p, rng));
  }
  return journeys;
}

driver_journey prune_journey(driver_journey const& j,
                             std::set<std::size_t> const& used,
                             travel_model const& m) {
  auto pruned = j;
  pruned.stop_times.clear();
  for (auto i = std::size_t{0}; i != j.stop_times.size(); ++i) {
    auto const endpoint = i == 0U || i + 1 == j.stop_times.size();
    if (endpoint || used.contains(i)) {
      pruned.stop_times.push_back(j.stop_times[i]);
    }
  }
  pruned.length_km = pruned.stop_times.size() == j.stop_times.size()
                         ? j.length_km
                         : journey_length_km(pruned.stop_times, m);
  return pruned;
}

}  // namespace poollines
