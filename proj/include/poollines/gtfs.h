#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "poollines/geo.h"

namespace poollines {

enum class route_type : std::int32_t {
  tram = 0,
  subway = 1,
  rail = 2,
  bus = 3,
};

struct stop {
  std::string id;
  std::string name;
  geo_point pos;
  friend bool operator==(stop const&, stop const&) = default;
};

struct route {
  std::string id;
  std::string agency_id;
  std::string short_name;
  std::string long_name;
  std::string desc;
  route_type type{route_type::bus};

  std::string_view name() const {
    return long_name.empty() ? short_name : long_name;
  }
  friend bool operator==(route const&, route const&) = default;
};

struct trip {
  std::string id;
  std::string route_id;
  std::string service_id;
  friend bool operator==(trip const&, trip const&) = default;
};

struct stop_time {
  std::string trip_id;
  std::string stop_id;
  seconds_t arrival{0};
  seconds_t departure{0};
  std::int32_t stop_sequence{0};
  friend bool operator==(stop_time const&, stop_time const&) = default;
};

// Dates are stored as YYYYMMDD integers, as written in GTFS.
struct service_calendar {
  std::string service_id;
  std::array<bool, 7> weekdays{};  // monday .. sunday
  std::int32_t start_date{0};
  std::int32_t end_date{0};
  friend bool operator==(service_calendar const&,
                         service_calendar const&) = default;
};

struct calendar_date {
  std::string service_id;
  std::int32_t date{0};
  std::int32_t exception_type{1};  // 1 added, 2 removed
  friend bool operator==(calendar_date const&, calendar_date const&) = default;
};

// Raw feed content. Order of rows is irrelevant; timetable canonicalizes it.
struct feed {
  std::vector<stop> stops;
  std::vector<route> routes;
  std::vector<trip> trips;
  std::vector<stop_time> stop_times;
  std::vector<service_calendar> calendars;
  std::vector<calendar_date> calendar_dates;
  // Files that are not interpreted, written back verbatim (agency.txt, ...).
  std::map<std::string, std::string> passthrough_files;
};

using stop_idx_t = std::uint32_t;
using route_idx_t = std::uint32_t;
using trip_idx_t = std::uint32_t;

// Immutable, validated and indexed view of a feed. Rows are sorted by id
// (stop_times by trip, then stop_sequence) so that equal content yields equal
// timetables regardless of input row order.
class timetable {
public:
  timetable() = default;
  explicit timetable(feed f, std::optional<std::int32_t> service_date = {});

  std::span<stop const> stops() const { return feed_.stops; }
  std::span<route const> routes() const { return feed_.routes; }
  std::span<trip const> trips() const { return feed_.trips; }
  std::span<stop_time const> stop_times() const { return feed_.stop_times; }
  std::span<stop_time const> stop_times(trip_idx_t t) const;

  std::optional<stop_idx_t> find_stop(std::string_view id) const;
  std::optional<route_idx_t> find_route(std::string_view id) const;
  std::optional<trip_idx_t> find_trip(std::string_view id) const;

  route_idx_t route_of(trip_idx_t t) const { return trip_route_[t]; }
  stop_idx_t stop_of(stop_time const& st) const;

  feed const& data() const { return feed_; }
  std::optional<std::int32_t> service_date() const { return service_date_; }

  // Equality over every consumed field; pass-through files are ignored.
  friend bool operator==(timetable const& a, timetable const& b);

private:
  feed feed_;
  std::optional<std::int32_t> service_date_;
  std::unordered_map<std::string, stop_idx_t> stop_index_;
  std::unordered_map<std::string, route_idx_t> route_index_;
  std::unordered_map<std::string, trip_idx_t> trip_index_;
  std::vector<route_idx_t> trip_route_;
  std::vector<std::uint32_t> trip_first_stop_time_;  // size trips + 1
};

struct parse_options {
  // Keep only trips whose service runs on this date (YYYYMMDD).
  std::optional<std::int32_t> service_date;
};

// "25:10:00" -> 90600. Throws std::invalid_argument on bad input.
seconds_t parse_gtfs_time(std::string_view s);
std::string format_gtfs_time(seconds_t t);

// Shortest exact decimal representation, padded to >= 6 fractional digits.
std::string format_coordinate(double v);

bool service_active(feed const& f, std::string_view service_id,
                    std::int32_t date);

timetable parse_gtfs(std::filesystem::path const& dir,
                     parse_options const& opt = {});

// In-memory variant: file name -> content. Used by tests and the bindings.
timetable parse_gtfs(std::map<std::string, std::string> const& files,
                     parse_options const& opt = {});

std::map<std::string, std::string> serialize_gtfs(timetable const& tt);

void write_gtfs(timetable const& tt, std::filesystem::path const& dir);

}  // namespace poollines
