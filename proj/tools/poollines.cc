#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "poollines/error.h"
#include "poollines/gtfs.h"
#include "poollines/poolline.h"
#include "poollines/run_config.h"
#include "poollines/scenario.h"
#include "poollines/simulation.h"

namespace fs = std::filesystem;
using namespace poollines;

namespace {

struct options {
  std::string config_file;
  std::vector<std::string> overrides;
  std::string gtfs;
  std::string agents;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<double> tau;
  std::string variant;
  bool quiet{false};
};

std::string read_file(fs::path const& p) {
  auto in = std::ifstream{p, std::ios::binary};
  if (!in) {
    throw io_error{"cannot read " + p.string()};
  }
  auto ss = std::stringstream{};
  ss << in.rdbuf();
  return ss.str();
}

void write_file(fs::path const& p, std::string const& content) {
  auto out = std::ofstream{p, std::ios::binary | std::ios::trunc};
  out << content;
  if (!out) {
    throw io_error{"cannot write " + p.string()};
  }
}

run_config load(options const& o) {
  auto text = std::string{"{}"};
  auto base = fs::path{};
  if (!o.config_file.empty()) {
    try {
      text = read_file(o.config_file);
    } catch (io_error const& e) {
      throw config_error{e.what()};
    }
    base = fs::path{o.config_file}.parent_path();
  }
  auto ov = o.overrides;
  if (!o.gtfs.empty()) {
    ov.push_back("gtfs_path=" + nlohmann::json(fs::absolute(o.gtfs).string()).dump());
  }
  if (!o.agents.empty()) {
    ov.push_back("agents_path=" + nlohmann::json(fs::absolute(o.agents).string()).dump());
  }
  if (!o.out.empty()) {
    ov.push_back("output_dir=" + nlohmann::json(fs::absolute(o.out).string()).dump());
  }
  if (o.seed) {
    ov.push_back("seed=" + std::to_string(*o.seed));
  }
  if (o.threads) {
    ov.push_back("threads=" + std::to_string(*o.threads));
  }
  if (o.tau) {
    ov.push_back("tau=" + nlohmann::json(*o.tau).dump());
  }
  return parse_run_config(apply_overrides(text, ov), base);
}

std::shared_ptr<timetable const> load_timetable(run_config const& c) {
  if (c.gtfs_path.empty()) {
    throw config_error{"gtfs_path is not set"};
  }
  return std::make_shared<timetable const>(
      parse_gtfs(c.gtfs_path, parse_options{.service_date = c.service_date}));
}

scenario make_scenario(run_config const& c,
                       std::shared_ptr<timetable const> tt) {
  if (c.agents_path) {
    return agents_from_csv(read_file(*c.agents_path), c.scenario, std::move(tt));
  }
  return generate_scenario(c.scenario, std::move(tt));
}

void log(options const& o, std::string const& msg) {
  if (!o.quiet) {
    std::cerr << msg << '\n';
  }
}

int cmd_generate(options const& o) {
  auto const c = load(o);
  auto const s = generate_scenario(c.scenario, nullptr);
  auto const content = agents_to_csv(s);
  fs::create_directories(c.output_dir);
  write_file(c.output_dir / "agents.csv", content);
  log(o, "wrote " + std::to_string(s.drivers.size()) + " drivers and " +
             std::to_string(s.riders.size()) + " riders to " +
             (c.output_dir / "agents.csv").string());
  return 0;
}

int cmd_inject(options const& o) {
  auto const c = load(o);
  auto const tt = load_timetable(c);
  auto const s = make_scenario(c, tt);
  auto journeys = std::vector<driver_journey>{};
  if (!s.drivers.empty()) {
    auto const mps =
        select_meeting_points(*tt, c.simulation.meeting_point_types);
    journeys = compute_driver_journeys(s.drivers, mps, c.simulation.journey,
                                       c.scenario.seed);
  }
  auto const augmented = inject_poollines(*tt, journeys);
  auto const files = serialize_gtfs(augmented);
  auto const dir = c.output_dir / "gtfs";
  fs::create_directories(dir);
  for (auto const& [name, content] : files) {
    write_file(dir / name, content);
  }
  log(o, "injected " + std::to_string(journeys.size()) + " PoolLines into " +
             dir.string());
  return 0;
}

int cmd_simulate(options const& o) {
  auto const c = load(o);
  auto variant = std::optional<system_variant>{};
  if (!o.variant.empty()) {
    variant = parse_variant(o.variant);
    if (!variant) {
      throw config_error{"unknown variant " + o.variant};
    }
  }
  auto const start = std::chrono::steady_clock::now();
  auto const tt = load_timetable(c);
  auto const s = make_scenario(c, tt);
  auto const p = prepare(s, c.simulation);
  log(o, "prepared " + std::to_string(s.drivers.size()) + " drivers, " +
             std::to_string(s.riders.size()) + " riders");

  auto reports = std::vector<simulation_report>{};
  if (variant) {
    reports.push_back(run_variant(p, *variant, c.simulation));
  } else {
    auto all = run_all(p, c.simulation);
    reports.assign(std::make_move_iterator(all.begin()),
                   std::make_move_iterator(all.end()));
  }
  write_reports(reports, p, c.simulation, c.output_dir);
  write_file(c.output_dir / "config.json", to_json(c));
  write_file(c.output_dir / "agents.csv", agents_to_csv(s));
  auto const secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  log(o, "reports in " + c.output_dir.string() + " (" +
             std::to_string(static_cast<int>(secs)) + " s)");
  return 0;
}

int cmd_metrics(options const& o) {
  auto const c = load(o);
  auto const path = c.output_dir / "summary.json";
  auto summary = nlohmann::ordered_json{};
  try {
    summary = nlohmann::ordered_json::parse(read_file(path));
  } catch (nlohmann::json::exception const& e) {
    throw data_error{path.string() + ": " + e.what()};
  }
  auto const& variants = summary.at("variants");
  std::printf("%-14s %8s %8s", "variant", "riders", "served");
  for (auto k = std::size_t{0}; k != kTravelModeCount; ++k) {
    std::printf(" %9.9s", std::string{to_string(static_cast<travel_mode>(k))}.c_str());
  }
  std::printf(" %8s\n", "shared%");
  for (auto const& [name, v] : variants.items()) {
    std::printf("%-14s %8lld %8lld", name.c_str(),
                v.at("stats_riders").get<long long>(),
                v.at("served").get<long long>());
    for (auto const& [mode, share] : v.at("modal_split_percent").items()) {
      std::printf(" %8.2f%%", share.get<double>());
    }
    std::printf(" %7.2f%%\n", v.at("shared_trip_percent").get<double>());
    if (v.contains("co2_saved_kg_per_hour")) {
      std::printf("  vkt saved %.1f km, CO2 saved %.1f kg/h\n",
                  v.at("vkt_saved_km").get<double>(),
                  v.at("co2_saved_kg_per_hour").get<double>());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto app = CLI::App{"PoolLines: carpooling as ephemeral transit lines"};
  app.require_subcommand(1);
  auto o = options{};

  auto const common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", o.config_file, "JSON run configuration");
    sub->add_option("--set", o.overrides, "override a config key (a.b=value)");
    sub->add_option("--gtfs", o.gtfs, "GTFS directory");
    sub->add_option("--agents", o.agents, "agents CSV instead of generating");
    sub->add_option("-o,--out", o.out, "output directory");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--threads", o.threads, "worker threads (0: all cores)");
    sub->add_option("--tau", o.tau, "maximum detour ratio");
    sub->add_flag("-q,--quiet", o.quiet, "no progress output");
  };

  auto* gen = app.add_subcommand("generate", "write a seeded agents file");
  auto* inj = app.add_subcommand("inject", "write the feed with PoolLines");
  auto* sim = app.add_subcommand("simulate", "run the system comparison");
  auto* met = app.add_subcommand("metrics", "print a report summary");
  for (auto* s : {gen, inj, sim, met}) {
    common(s);
  }
  sim->add_option("--variant", o.variant,
                  "no_carpooling | current | integrated (default: all)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(o);
    }
    if (inj->parsed()) {
      return cmd_inject(o);
    }
    if (sim->parsed()) {
      return cmd_simulate(o);
    }
    return cmd_metrics(o);
  } catch (config_error const& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (data_error const& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (io_error const& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (fs::filesystem_error const& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  }
}
