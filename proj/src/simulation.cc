#include "poollines/simulation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "poollines/error.h"
#include "poollines/poolline.h"

namespace poollines {

std::string_view to_string(system_variant const v) {
  switch (v) {
    case system_variant::no_carpooling: return "no_carpooling";
    case system_variant::current: return "current";
    case system_variant::integrated: return "integrated";
  }
  return "?";
}

std::optional<system_variant> parse_variant(std::string_view const s) {
  for (auto const v : kAllVariants) {
    if (to_string(v) == s) {
      return v;
    }
  }
  return std::nullopt;
}

prepared_scenario prepare(scenario const& s, simulation_config const& cfg) {
  if (!s.tt) {
    throw config_error{"scenario has no timetable"};
  }
  auto p = prepared_scenario{.source = &s};
  auto tt = *s.tt;
  if (!s.drivers.empty()) {
    auto const mps = select_meeting_points(tt, cfg.meeting_point_types);
    p.journeys = compute_driver_journeys(s.drivers, mps, cfg.journey,
                                         s.config.seed);
    tt = inject_poollines(tt, p.journeys);
  }
  p.net.emplace(std::move(tt),
                planner_params{.model = cfg.journey.model,
                               .max_access_km = cfg.max_access_km,
                               .transfer_time = cfg.journey.dwell},
                cfg.max_footpath_km);
  return p;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t const n, unsigned threads, Fn&& fn) {
  if (threads == 0U) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(n, 1U)));
  if (threads <= 1U) {
    for (auto i = std::size_t{0}; i != n; ++i) {
      fn(i);
    }
    return;
  }
  auto next = std::atomic<std::size_t>{0};
  auto workers = std::vector<std::jthread>{};
  for (auto t = 0U; t != threads; ++t) {
    workers.emplace_back([&]() {
      for (auto i = next++; i < n; i = next++) {
        fn(i);
      }
    });
  }
}

struct rider_plans {
  std::vector<itinerary> transit;
  std::vector<itinerary> no_pool;
  std::vector<itinerary> pool_only;
};

std::vector<plan_mode> modes_for(system_variant const v) {
  switch (v) {
    case system_variant::no_carpooling: return {plan_mode::transit_no_pool};
    case system_variant::current:
      return {plan_mode::transit_no_pool, plan_mode::pool_only};
    case system_variant::integrated:
      return {plan_mode::transit, plan_mode::transit_no_pool,
              plan_mode::pool_only};
  }
  return {};
}

std::vector<rider_plans> plan_riders(prepared_scenario const& p,
                                     std::vector<plan_mode> const& modes,
                                     unsigned const threads) {
  auto const& riders = p.source->riders;
  auto const& net = *p.net;
  auto const has_pool = !p.journeys.empty();
  auto plans = std::vector<rider_plans>(riders.size());
  parallel_for(riders.size(), threads, [&](std::size_t const i) {
    auto const& r = riders[i];
    auto req = plan_request{.from = r.origin,
                            .to = r.destination,
                            .departure = r.departure,
                            .date = net.tt().service_date(),
                            .num_itineraries = 10};
    for (auto const m : modes) {
      // Without PoolLines these modes collapse onto the transit-only plan.
      if (!has_pool && m != plan_mode::transit_no_pool) {
        continue;
      }
      req.mode = m;
      auto its = plan(net, req);
      switch (m) {
        case plan_mode::transit: plans[i].transit = std::move(its); break;
        case plan_mode::transit_no_pool:
          plans[i].no_pool = std::move(its);
          break;
        case plan_mode::pool_only: plans[i].pool_only = std::move(its); break;
        case plan_mode::walk_only: break;
      }
    }
  });
  return plans;
}

rider_outcome resolve(rider const& r, rider_plans const& plans,
                      system_variant const v, simulation_config const& cfg) {
  auto candidates = plans.no_pool;
  if (v != system_variant::no_carpooling) {
    candidates.insert(end(candidates), begin(plans.pool_only),
                      end(plans.pool_only));
  }
  if (v == system_variant::integrated) {
    candidates.insert(end(candidates), begin(plans.transit),
                      end(plans.transit));
  }
  return choose_shortest_feasible(r, candidates, cfg.rules,
                                  cfg.journey.model);
}

simulation_report finish_report(prepared_scenario const& p,
                                system_variant const v,
                                std::vector<rider_outcome> outcomes,
                                simulation_config const& cfg) {
  auto const& s = *p.source;
  auto report = simulation_report{.variant = v};

  if (cfg.enforce_capacity && v != system_variant::no_carpooling) {
    auto res = enforce_capacity(std::move(outcomes), p.journeys, s.drivers);
    outcomes = std::move(res.outcomes);
    report.voided_drivers = std::move(res.voided_drivers);
  }

  auto const used = collect_used_stoptimes(outcomes, p.journeys);
  report.journeys.reserve(p.journeys.size());
  for (auto const& j : p.journeys) {
    report.journeys.push_back(
        prune_journey(j, used.at(j.driver_id), cfg.journey.model));
  }

  report.in_stats.reserve(s.riders.size());
  for (auto const& r : s.riders) {
    report.in_stats.push_back(s.config.stats_window.contains(r.departure));
  }
  report.modal_split = modal_split(outcomes, report.in_stats);
  report.occupancy_hist = occupancy_histogram(outcomes, p.journeys);
  if (report.occupancy_hist.empty()) {
    report.occupancy_hist.assign(1, 0);
  }
  // Drivers exist physically in every variant; without carpooling they
  // simply carry nobody.
  if (p.journeys.empty()) {
    report.occupancy_hist[0] = static_cast<std::int64_t>(s.drivers.size());
  }
  report.detours = detour_histogram(report.journeys);
  report.outcomes = std::move(outcomes);
  return report;
}

}  // namespace

simulation_report run_variant(prepared_scenario const& p,
                              system_variant const v,
                              simulation_config const& cfg) {
  auto const plans = plan_riders(p, modes_for(v), cfg.threads);
  auto outcomes = std::vector<rider_outcome>{};
  outcomes.reserve(plans.size());
  for (auto i = std::size_t{0}; i != plans.size(); ++i) {
    outcomes.push_back(resolve(p.source->riders[i], plans[i], v, cfg));
  }
  return finish_report(p, v, std::move(outcomes), cfg);
}

std::array<simulation_report, 3> run_all(prepared_scenario const& p,
                                         simulation_config const& cfg) {
  auto const plans =
      plan_riders(p, modes_for(system_variant::integrated), cfg.threads);
  auto reports = std::array<simulation_report, 3>{};
  for (auto k = std::size_t{0}; k != kAllVariants.size(); ++k) {
    auto outcomes = std::vector<rider_outcome>{};
    outcomes.reserve(plans.size());
    for (auto i = std::size_t{0}; i != plans.size(); ++i) {
      outcomes.push_back(
          resolve(p.source->riders[i], plans[i], kAllVariants[k], cfg));
    }
    reports[k] = finish_report(p, kAllVariants[k], std::move(outcomes), cfg);
  }

  auto& current = reports[1];
  auto& integrated = reports[2];
  auto const sv = vkt_and_co2(current.outcomes, integrated.outcomes,
                              p.source->riders, integrated.in_stats,
                              integrated.journeys, cfg.journey.model,
                              cfg.emissions,
                              p.source->config.stats_window.length());
  integrated.vkt_saved_km = sv.vkt_saved_km;
  integrated.co2_saved_kg_per_hour = sv.co2_kg_per_hour;
  return reports;
}

std::vector<std::int64_t> occupancy_histogram(
    std::span<rider_outcome const> outcomes,
    std::span<driver_journey const> journeys) {
  auto hist = std::vector<std::int64_t>{};
  for (auto const& [id, segs] : segment_loads(outcomes, journeys)) {
    auto const peak = segs.empty() ? 0 : *std::max_element(begin(segs), end(segs));
    if (hist.size() <= static_cast<std::size_t>(peak)) {
      hist.resize(static_cast<std::size_t>(peak) + 1U, 0);
    }
    ++hist[static_cast<std::size_t>(peak)];
  }
  return hist;
}

detour_stats detour_histogram(std::span<driver_journey const> journeys) {
  auto d = detour_stats{};
  d.ratio_bins.assign(16, 0);
  for (auto const& j : journeys) {
    auto const ratio = std::max(0.0, j.detour_ratio());
    auto const bin =
        static_cast<std::size_t>(std::floor(ratio * 100.0 + 1e-9));
    if (d.ratio_bins.size() <= bin) {
      d.ratio_bins.resize(bin + 1U, 0);
    }
    ++d.ratio_bins[bin];

    auto const km = std::max(0.0, j.detour_km());
    auto const whole = std::ceil(km - 1e-9);
    auto const km_bin = km < 1e-9      ? 0U
                        : whole <= 5.0  ? 1U
                        : whole <= 10.0 ? 2U
                        : whole <= 15.0 ? 3U
                                        : 4U;
    ++d.km_bins[km_bin];
  }
  return d;
}

std::array<double, kTravelModeCount> modal_split(
    std::span<rider_outcome const> outcomes, std::vector<bool> const& mask) {
  auto counts = std::array<std::int64_t, kTravelModeCount>{};
  auto total = std::int64_t{0};
  for (auto i = std::size_t{0}; i != outcomes.size(); ++i) {
    if (i < mask.size() && !mask[i]) {
      continue;
    }
    ++counts[static_cast<std::size_t>(outcomes[i].mode)];
    ++total;
  }
  auto split = std::array<double, kTravelModeCount>{};
  if (total != 0) {
    for (auto k = std::size_t{0}; k != kTravelModeCount; ++k) {
      split[k] = 100.0 * static_cast<double>(counts[k]) /
                 static_cast<double>(total);
    }
  }
  return split;
}

double co2_kg_per_hour(double const vkt_saved_km, emission_model const& em,
                       seconds_t const window) {
  return vkt_saved_km * em.grams_per_km / 1000.0 * 3600.0 /
         static_cast<double>(window);
}

savings vkt_and_co2(std::span<rider_outcome const> current,
                    std::span<rider_outcome const> integrated,
                    std::span<rider const> riders, std::vector<bool> const& mask,
                    std::span<driver_journey const> pruned_journeys,
                    travel_model const& model, emission_model const& em,
                    seconds_t const stats_window) {
  auto by_id = std::unordered_map<rider_id_t, rider_outcome const*>{};
  for (auto const& o : current) {
    by_id[o.rider_id] = &o;
  }
  auto rider_by_id = std::unordered_map<rider_id_t, rider const*>{};
  for (auto const& r : riders) {
    rider_by_id[r.id] = &r;
  }

  auto avoided_km = 0.0;
  auto carriers = std::set<driver_id_t>{};
  for (auto i = std::size_t{0}; i != integrated.size(); ++i) {
    auto const& o = integrated[i];
    if ((i < mask.size() && !mask[i]) || !o.served()) {
      continue;
    }
    auto const c = by_id.find(o.rider_id);
    if (c == end(by_id) || c->second->served()) {
      continue;
    }
    auto const r = rider_by_id.find(o.rider_id);
    if (r == end(rider_by_id)) {
      continue;
    }
    avoided_km += road_km(r->second->origin, r->second->destination, model);
    carriers.insert(begin(o.drivers_used), end(o.drivers_used));
  }

  auto detour_km = 0.0;
  for (auto const& j : pruned_journeys) {
    if (carriers.contains(j.driver_id)) {
      detour_km += j.detour_km();
    }
  }
  auto const vkt = avoided_km - detour_km;
  return {vkt, co2_kg_per_hour(vkt, em, stats_window)};
}

// ---------------------------------------------------------------------------
// report files

namespace {

std::string fixed(double const v, int const digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void write_file(std::filesystem::path const& p, std::string const& content) {
  auto out = std::ofstream{p, std::ios::binary | std::ios::trunc};
  out << content;
  if (!out) {
    throw io_error{"cannot write " + p.string()};
  }
}

double share_at_least(std::vector<std::int64_t> const& hist,
                      std::size_t const k) {
  auto total = std::int64_t{0};
  auto above = std::int64_t{0};
  for (auto i = std::size_t{0}; i != hist.size(); ++i) {
    total += hist[i];
    if (i >= k) {
      above += hist[i];
    }
  }
  return total == 0 ? 0.0
                    : 100.0 * static_cast<double>(above) /
                          static_cast<double>(total);
}

}  // namespace

std::string outcomes_to_csv(simulation_report const& r,
                            std::span<rider const> riders) {
  auto out = std::string{
      "rider_id,in_stats,mode,depart,arrive,walk_km,wait_s,drivers\n"};
  for (auto i = std::size_t{0}; i != r.outcomes.size(); ++i) {
    auto const& o = r.outcomes[i];
    auto drivers = std::string{};
    for (auto const d : o.drivers_used) {
      if (!drivers.empty()) {
        drivers += ';';
      }
      drivers += std::to_string(d);
    }
    auto const depart = o.chosen ? o.chosen->depart : riders[i].departure;
    out += std::to_string(o.rider_id) + "," + (r.in_stats[i] ? "1" : "0") +
           "," + std::string{to_string(o.mode)} + "," +
           std::to_string(depart) + "," +
           (o.chosen ? std::to_string(o.chosen->arrive) : "") + "," +
           (o.chosen ? fixed(o.chosen->total_walk_km) : "") + "," +
           (o.chosen ? std::to_string(o.chosen->total_wait_s) : "") + "," +
           drivers + "\n";
  }
  return out;
}

std::string journeys_to_csv(simulation_report const& r,
                            std::span<driver_journey const> original) {
  auto out = std::string{
      "driver_id,baseline_km,length_km,pruned_length_km,stoptimes,"
      "pruned_stoptimes,detour_order\n"};
  for (auto i = std::size_t{0}; i != r.journeys.size(); ++i) {
    auto const& pruned = r.journeys[i];
    auto const& full = original[i];
    out += std::to_string(pruned.driver_id) + "," + fixed(full.baseline_km) +
           "," + fixed(full.length_km) + "," + fixed(pruned.length_km) + "," +
           std::to_string(full.stop_times.size()) + "," +
           std::to_string(pruned.stop_times.size()) + "," +
           (full.order == detour_order::origin_first ? "origin" : "destination") +
           "\n";
  }
  return out;
}

void write_reports(std::span<simulation_report const> reports,
                   prepared_scenario const& p, simulation_config const& cfg,
                   std::filesystem::path const& dir) {
  auto const& s = *p.source;
  auto ec = std::error_code{};
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw io_error{"cannot create " + dir.string() + ": " + ec.message()};
  }

  auto split = std::string{"variant"};
  for (auto k = std::size_t{0}; k != kTravelModeCount; ++k) {
    split += "," + std::string{to_string(static_cast<travel_mode>(k))};
  }
  split += "\n";

  auto summary = nlohmann::ordered_json::object();
  summary["riders"] = s.riders.size();
  summary["drivers"] = s.drivers.size();
  summary["seed"] = s.config.seed;
  summary["stats_window"] = {s.config.stats_window.start,
                             s.config.stats_window.end};
  summary["tau"] = cfg.journey.max_detour_ratio;
  summary["dwell_s"] = cfg.journey.dwell;
  auto variants = nlohmann::ordered_json::object();

  for (auto const& r : reports) {
    auto const name = std::string{to_string(r.variant)};
    split += name;
    for (auto const v : r.modal_split) {
      split += "," + fixed(v, 4);
    }
    split += "\n";

    write_file(dir / ("outcomes_" + name + ".csv"),
               outcomes_to_csv(r, s.riders));
    write_file(dir / ("journeys_" + name + ".csv"),
               journeys_to_csv(r, p.journeys));

    auto occ = std::string{"max_onboard,drivers\n"};
    for (auto i = std::size_t{0}; i != r.occupancy_hist.size(); ++i) {
      occ += std::to_string(i) + "," + std::to_string(r.occupancy_hist[i]) +
             "\n";
    }
    write_file(dir / ("occupancy_" + name + ".csv"), occ);

    auto det = std::string{"bin,kind,drivers\n"};
    for (auto i = std::size_t{0}; i != r.detours.ratio_bins.size(); ++i) {
      det += std::to_string(i) + "%,ratio," +
             std::to_string(r.detours.ratio_bins[i]) + "\n";
    }
    for (auto i = std::size_t{0}; i != r.detours.km_bins.size(); ++i) {
      det += std::string{kDetourKmBinLabels[i]} + "km,km," +
             std::to_string(r.detours.km_bins[i]) + "\n";
    }
    write_file(dir / ("detour_" + name + ".csv"), det);

    auto served = std::int64_t{0};
    auto counted = std::int64_t{0};
    for (auto i = std::size_t{0}; i != r.outcomes.size(); ++i) {
      if (r.in_stats[i]) {
        ++counted;
        served += r.outcomes[i].served() ? 1 : 0;
      }
    }
    auto v = nlohmann::ordered_json::object();
    v["stats_riders"] = counted;
    v["served"] = served;
    auto ms = nlohmann::ordered_json::object();
    for (auto k = std::size_t{0}; k != kTravelModeCount; ++k) {
      ms[std::string{to_string(static_cast<travel_mode>(k))}] =
          std::stod(fixed(r.modal_split[k], 6));
    }
    v["modal_split_percent"] = ms;
    v["occupancy_hist"] = r.occupancy_hist;
    v["shared_trip_percent"] = std::stod(fixed(share_at_least(r.occupancy_hist, 2), 6));
    v["detour_ratio_bins"] = r.detours.ratio_bins;
    v["detour_km_bins"] = r.detours.km_bins;
    v["voided_drivers"] = r.voided_drivers;
    if (r.vkt_saved_km) {
      v["vkt_saved_km"] = std::stod(fixed(*r.vkt_saved_km, 6));
      v["co2_saved_kg_per_hour"] = std::stod(fixed(*r.co2_saved_kg_per_hour, 6));
    }
    variants[name] = v;
  }
  summary["variants"] = variants;
  write_file(dir / "modal_split.csv", split);
  write_file(dir / "summary.json", summary.dump(2) + "\n");
}

}  // namespace poollines
