#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "poollines/driver_journey.h"
#include "poollines/planner.h"

namespace poollines {

using rider_id_t = std::int64_t;

struct rider {
  rider_id_t id{0};
  geo_point origin;
  geo_point destination;
  seconds_t departure{0};
};

enum class travel_mode : std::uint8_t {
  unserved,
  foot,
  carpooling,
  multi_carpooling,
  transit,
  multimodal,
};

inline constexpr std::size_t kTravelModeCount = 6;

std::string_view to_string(travel_mode m);

struct rider_outcome {
  rider_id_t rider_id{0};
  travel_mode mode{travel_mode::unserved};
  std::optional<itinerary> chosen;
  std::vector<driver_id_t> drivers_used;

  bool served() const { return mode != travel_mode::unserved; }
};

struct feasibility_rules {
  seconds_t max_wait{2700};
  double max_walk_km{2.5};
  bool walk_time_bound{true};
};

bool is_feasible(itinerary const& it, rider const& r,
                 feasibility_rules const& rules, travel_model const& model);

travel_mode classify(itinerary const& it);

// Outcome for an already chosen itinerary (or none -> unserved).
rider_outcome make_outcome(rider_id_t id, std::optional<itinerary> it);

// Earliest-arriving feasible candidate; candidates are compared by arrival,
// then ride count, then walking distance, then input order.
rider_outcome choose_shortest_feasible(rider const& r,
                                       std::span<itinerary const> candidates,
                                       feasibility_rules const& rules,
                                       travel_model const& model);

// Plans with `mode` and keeps the first feasible itinerary.
rider_outcome resolve_rider(network const& net, rider const& r,
                            feasibility_rules const& rules,
                            plan_mode mode = plan_mode::transit,
                            std::optional<std::int32_t> date = {});

struct capacity_result {
  std::vector<rider_outcome> outcomes;
  std::vector<driver_id_t> voided_drivers;  // ascending
};

// Voids every driver whose onboard count exceeds its seat capacity on some
// segment, and marks all riders using a voided driver unserved. Repeats until
// no driver is over capacity.
capacity_result enforce_capacity(std::vector<rider_outcome> outcomes,
                                 std::span<driver_journey const> journeys,
                                 std::span<driver const> drivers);

// Onboard rider count per segment (stoptime i -> i+1), keyed by driver.
std::map<driver_id_t, std::vector<std::int32_t>> segment_loads(
    std::span<rider_outcome const> outcomes,
    std::span<driver_journey const> journeys);

// Intermediate stoptime indices where a served rider boards or alights.
std::map<driver_id_t, std::set<std::size_t>> collect_used_stoptimes(
    std::span<rider_outcome const> outcomes,
    std::span<driver_journey const> journeys);

}  // namespace poollines
