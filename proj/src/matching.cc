#include "poollines/matching.h"

#include <algorithm>
#include <unordered_map>

#include "poollines/poolline.h"

namespace poollines {

std::string_view to_string(travel_mode const m) {
  switch (m) {
    case travel_mode::unserved: return "Unserved";
    case travel_mode::foot: return "Foot";
    case travel_mode::carpooling: return "Carpooling";
    case travel_mode::multi_carpooling: return "MultiCarpooling";
    case travel_mode::transit: return "Transit";
    case travel_mode::multimodal: return "Multimodal";
  }
  return "?";
}

bool is_feasible(itinerary const& it, rider const& r,
                 feasibility_rules const& rules, travel_model const& model) {
  if (it.total_wait_s > rules.max_wait) {
    return false;
  }
  if (it.total_walk_km > rules.max_walk_km + 1e-9) {
    return false;
  }
  if (rules.walk_time_bound &&
      it.arrive - r.departure > walk_seconds(r.origin, r.destination, model)) {
    return false;
  }
  return true;
}

travel_mode classify(itinerary const& it) {
  auto const carpool = it.count(leg_kind::carpool);
  auto const transit = it.count(leg_kind::transit);
  if (carpool == 0U && transit == 0U) {
    return travel_mode::foot;
  }
  if (transit == 0U) {
    return carpool == 1U ? travel_mode::carpooling
                         : travel_mode::multi_carpooling;
  }
  return carpool == 0U ? travel_mode::transit : travel_mode::multimodal;
}

rider_outcome make_outcome(rider_id_t const id, std::optional<itinerary> it) {
  auto o = rider_outcome{.rider_id = id};
  if (!it) {
    return o;
  }
  o.mode = classify(*it);
  for (auto const& l : it->legs) {
    if (l.kind == leg_kind::carpool) {
      o.drivers_used.push_back(poolline_driver(*l.trip_id).value());
    }
  }
  o.chosen = std::move(it);
  return o;
}

rider_outcome choose_shortest_feasible(rider const& r,
                                       std::span<itinerary const> candidates,
                                       feasibility_rules const& rules,
                                       travel_model const& model) {
  auto const* best = static_cast<itinerary const*>(nullptr);
  for (auto const& c : candidates) {
    if (!is_feasible(c, r, rules, model)) {
      continue;
    }
    if (best == nullptr) {
      best = &c;
      continue;
    }
    auto const key = [](itinerary const& i) {
      return std::tuple{i.arrive, i.ride_count(), i.total_walk_km};
    };
    if (key(c) < key(*best)) {
      best = &c;
    }
  }
  return make_outcome(r.id, best == nullptr ? std::nullopt
                                            : std::optional{*best});
}

rider_outcome resolve_rider(network const& net, rider const& r,
                            feasibility_rules const& rules,
                            plan_mode const mode,
                            std::optional<std::int32_t> const date) {
  auto const its = plan(net, plan_request{.from = r.origin,
                                          .to = r.destination,
                                          .departure = r.departure,
                                          .date = date,
                                          .num_itineraries = 10,
                                          .mode = mode});
  for (auto const& it : its) {
    if (is_feasible(it, r, rules, net.params().model)) {
      return make_outcome(r.id, it);
    }
  }
  return make_outcome(r.id, std::nullopt);
}

std::map<driver_id_t, std::vector<std::int32_t>> segment_loads(
    std::span<rider_outcome const> outcomes,
    std::span<driver_journey const> journeys) {
  auto loads = std::map<driver_id_t, std::vector<std::int32_t>>{};
  for (auto const& j : journeys) {
    loads[j.driver_id].assign(
        j.stop_times.empty() ? 0U : j.stop_times.size() - 1U, 0);
  }
  for (auto const& o : outcomes) {
    if (!o.served() || !o.chosen) {
      continue;
    }
    for (auto const& l : o.chosen->legs) {
      if (l.kind != leg_kind::carpool) {
        continue;
      }
      auto const it = loads.find(poolline_driver(*l.trip_id).value());
      if (it == end(loads)) {
        continue;
      }
      auto& segs = it->second;
      for (auto s = l.board_index;
           s < l.alight_index && static_cast<std::size_t>(s) < segs.size();
           ++s) {
        ++segs[static_cast<std::size_t>(s)];
      }
    }
  }
  return loads;
}

capacity_result enforce_capacity(std::vector<rider_outcome> outcomes,
                                 std::span<driver_journey const> journeys,
                                 std::span<driver const> drivers) {
  auto capacity = std::unordered_map<driver_id_t, std::int32_t>{};
  for (auto const& d : drivers) {
    capacity[d.id] = d.seat_capacity;
  }

  auto result = capacity_result{};
  auto voided = std::set<driver_id_t>{};
  while (true) {
    auto newly = std::set<driver_id_t>{};
    for (auto const& [id, segs] : segment_loads(outcomes, journeys)) {
      auto const cap = capacity.find(id);
      if (cap == end(capacity)) {
        continue;
      }
      if (std::any_of(begin(segs), end(segs),
                      [&](auto const n) { return n > cap->second; })) {
        newly.insert(id);
      }
    }
    if (newly.empty()) {
      break;
    }
    for (auto& o : outcomes) {
      auto const uses = std::any_of(
          begin(o.drivers_used), end(o.drivers_used),
          [&](driver_id_t const d) { return newly.contains(d); });
      if (uses) {
        o = make_outcome(o.rider_id, std::nullopt);
      }
    }
    voided.insert(begin(newly), end(newly));
  }
  result.outcomes = std::move(outcomes);
  result.voided_drivers.assign(begin(voided), end(voided));
  return result;
}

std::map<driver_id_t, std::set<std::size_t>> collect_used_stoptimes(
    std::span<rider_outcome const> outcomes,
    std::span<driver_journey const> journeys) {
  auto used = std::map<driver_id_t, std::set<std::size_t>>{};
  auto size = std::unordered_map<driver_id_t, std::size_t>{};
  for (auto const& j : journeys) {
    used[j.driver_id];
    size[j.driver_id] = j.stop_times.size();
  }
  for (auto const& o : outcomes) {
    if (!o.served() || !o.chosen) {
      continue;
    }
    for (auto const& l : o.chosen->legs) {
      if (l.kind != leg_kind::carpool) {
        continue;
      }
      auto const id = poolline_driver(*l.trip_id).value();
      auto const n = size.find(id);
      if (n == end(size)) {
        continue;
      }
      for (auto const idx : {l.board_index, l.alight_index}) {
        auto const i = static_cast<std::size_t>(idx);
        if (i > 0U && i + 1 < n->second) {
          used[id].insert(i);
        }
      }
    }
  }
  return used;
}

}  // namespace poollines
