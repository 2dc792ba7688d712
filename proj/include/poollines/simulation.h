#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poollines/driver_journey.h"
#include "poollines/matching.h"
#include "poollines/planner.h"
#include "poollines/scenario.h"

namespace poollines {

enum class system_variant : std::uint8_t { no_carpooling, current, integrated };

inline constexpr auto kAllVariants =
    std::array{system_variant::no_carpooling, system_variant::current,
               system_variant::integrated};

std::string_view to_string(system_variant v);
std::optional<system_variant> parse_variant(std::string_view s);

struct emission_model {
  double grams_per_km{97.0};
};

struct simulation_config {
  journey_params journey;  // travel model, tau, dwell
  feasibility_rules rules;
  emission_model emissions;
  std::vector<route_type> meeting_point_types{route_type::subway};
  double max_access_km{2.5};
  double max_footpath_km{1.0};
  bool enforce_capacity{true};
  unsigned threads{0};  // 0: hardware concurrency
};

// Driver journeys, the augmented timetable and its routing network, shared by
// all variants of one scenario.
struct prepared_scenario {
  scenario const* source{nullptr};
  std::vector<driver_journey> journeys;
  std::optional<network> net;
};

prepared_scenario prepare(scenario const& s, simulation_config const& cfg);

struct detour_stats {
  // Percent bins of width 1: index i covers [i%, i+1%).
  std::vector<std::int64_t> ratio_bins;
  // Kilometre bins: [0], (0,5], (5,10], (10,15], >15.
  std::array<std::int64_t, 5> km_bins{};
};

inline constexpr auto kDetourKmBinLabels =
    std::array<std::string_view, 5>{"0", "1-5", "6-10", "11-15", "16+"};

struct simulation_report {
  system_variant variant{system_variant::integrated};
  std::vector<rider_outcome> outcomes;  // every rider, scenario order
  std::vector<bool> in_stats;           // rider departs in the stats window
  std::array<double, kTravelModeCount> modal_split{};  // percent
  std::vector<std::int64_t> occupancy_hist;
  std::vector<driver_journey> journeys;  // after pruning
  detour_stats detours;
  std::vector<driver_id_t> voided_drivers;
  std::optional<double> vkt_saved_km;
  std::optional<double> co2_saved_kg_per_hour;
};

simulation_report run_variant(prepared_scenario const& p,
                              system_variant variant,
                              simulation_config const& cfg);

// All three variants; plans are shared between them and the integrated
// report carries the VKT / CO2 savings against the current system.
std::array<simulation_report, 3> run_all(prepared_scenario const& p,
                                         simulation_config const& cfg);

// Histogram over the maximum simultaneous onboard count of each driver.
std::vector<std::int64_t> occupancy_histogram(
    std::span<rider_outcome const> outcomes,
    std::span<driver_journey const> journeys);

detour_stats detour_histogram(std::span<driver_journey const> journeys);

std::array<double, kTravelModeCount> modal_split(
    std::span<rider_outcome const> outcomes, std::vector<bool> const& mask);

double co2_kg_per_hour(double vkt_saved_km, emission_model const& em,
                       seconds_t window);

struct savings {
  double vkt_saved_km{0.0};
  double co2_kg_per_hour{0.0};
};

// Riders served by the integrated system but not the current one avoid their
// private-car trip; the effective detours of the drivers that carry them are
// subtracted. Only riders with mask[i] set count.
savings vkt_and_co2(std::span<rider_outcome const> current,
                    std::span<rider_outcome const> integrated,
                    std::span<rider const> riders, std::vector<bool> const& mask,
                    std::span<driver_journey const> pruned_journeys,
                    travel_model const& model, emission_model const& em,
                    seconds_t stats_window);

// Report files: outcomes_<v>.csv, journeys_<v>.csv, occupancy_<v>.csv,
// detour_<v>.csv, modal_split.csv and summary.json.
void write_reports(std::span<simulation_report const> reports,
                   prepared_scenario const& p, simulation_config const& cfg,
                   std::filesystem::path const& dir);

std::string outcomes_to_csv(simulation_report const& r,
                            std::span<rider const> riders);
std::string journeys_to_csv(simulation_report const& r,
                            std::span<driver_journey const> original);

}  // namespace poollines
