#include "poollines/gtfs.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "poollines/csv.h"
#include "poollines/error.h"

namespace fs = std::filesystem;

namespace poollines {

namespace {

std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  if (s.starts_with('+')) {
    s.remove_prefix(1);
  }
  auto v = T{};
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

std::int32_t weekday_index(std::int32_t const yyyymmdd) {
  namespace chr = std::chrono;
  auto const ymd = chr::year_month_day{
      chr::year{yyyymmdd / 10000},
      chr::month{static_cast<unsigned>(yyyymmdd / 100 % 100)},
      chr::day{static_cast<unsigned>(yyyymmdd % 100)}};
  if (!ymd.ok()) {
    throw std::invalid_argument{"invalid date " + std::to_string(yyyymmdd)};
  }
  return static_cast<std::int32_t>(
             chr::weekday{chr::sys_days{ymd}}.iso_encoding()) -
         1;
}

// Accessor for one file's rows with column lookup and line-aware errors.
struct file_reader {
  std::string name;
  csv::table table;

  int required(std::string_view col) const {
    auto const idx = table.column(col);
    if (idx < 0) {
      throw malformed_row_error{name, 1,
                                "missing column \"" + std::string{col} + "\""};
    }
    return idx;
  }

  static std::string_view get(csv::row const& r, int const idx) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= r.fields.size()) {
      return {};
    }
    return trim(r.fields[static_cast<std::size_t>(idx)]);
  }

  std::string_view need(csv::row const& r, int const idx,
                        std::string_view col) const {
    auto const v = get(r, idx);
    if (v.empty()) {
      throw malformed_row_error{name, r.line,
                                "empty " + std::string{col}};
    }
    return v;
  }

  template <typename T>
  T number(csv::row const& r, int const idx, std::string_view col) const {
    auto const v = parse_number<T>(need(r, idx, col));
    if (!v) {
      throw malformed_row_error{name, r.line,
                                "invalid " + std::string{col} + " \"" +
                                    std::string{get(r, idx)} + "\""};
    }
    return *v;
  }
};

file_reader read_file(std::map<std::string, std::string> const& files,
                      std::string const& name, bool const required) {
  auto const it = files.find(name);
  if (it == end(files)) {
    if (required) {
      throw missing_file_error{name};
    }
    return file_reader{name, {}};
  }
  return file_reader{name, csv::parse(it->second)};
}

std::map<std::string, std::string> read_directory(fs::path const& dir) {
  if (!fs::is_directory(dir)) {
    throw missing_file_error{dir.string()};
  }
  auto files = std::map<std::string, std::string>{};
  for (auto const& entry : fs::directory_iterator{dir}) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") {
      continue;
    }
    auto in = std::ifstream{entry.path(), std::ios::binary};
    if (!in) {
      throw io_error{"cannot read " + entry.path().string()};
    }
    auto ss = std::ostringstream{};
    ss << in.rdbuf();
    files.emplace(entry.path().filename().string(), std::move(ss).str());
  }
  return files;
}

constexpr auto kConsumedFiles =
    std::array<std::string_view, 6>{"stops.txt",    "routes.txt",
                                    "trips.txt",    "stop_times.txt",
                                    "calendar.txt", "calendar_dates.txt"};

// Fills missing times (non-timepoints) by linear interpolation between the
// surrounding timed stops of the same trip.
void interpolate_times(std::vector<stop_time>& sts,
                       std::vector<std::pair<bool, bool>> const& has,
                       std::vector<std::size_t> const& lines,
                       std::size_t const first, std::size_t const last) {
  auto prev_timed = std::optional<std::size_t>{};
  for (auto i = first; i != last; ++i) {
    auto const [has_arr, has_dep] = has[i];
    if (has_arr || has_dep) {
      if (!has_arr) {
        sts[i].arrival = sts[i].departure;
      }
      if (!has_dep) {
        sts[i].departure = sts[i].arrival;
      }
      prev_timed = i;
      continue;
    }
    auto next_timed = i + 1;
    while (next_timed != last && !has[next_timed].first &&
           !has[next_timed].second) {
      ++next_timed;
    }
    if (!prev_timed || next_timed == last) {
      throw malformed_row_error{"stop_times.txt", lines[i],
                                "cannot interpolate time at trip boundary"};
    }
    auto const t0 = sts[*prev_timed].departure;
    auto const t1 = has[next_timed].first ? sts[next_timed].arrival
                                          : sts[next_timed].departure;
    auto const span = static_cast<double>(next_timed - *prev_timed);
    for (auto j = i; j != next_timed; ++j) {
      auto const frac = static_cast<double>(j - *prev_timed) / span;
      auto const t = t0 + static_cast<seconds_t>(
                              std::llround(frac * static_cast<double>(t1 - t0)));
      sts[j].arrival = sts[j].departure = t;
    }
    i = next_timed - 1;
  }
}

}  // namespace

seconds_t parse_gtfs_time(std::string_view s) {
  s = trim(s);
  auto const c1 = s.find(':');
  auto const c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw std::invalid_argument{"bad time \"" + std::string{s} + "\""};
  }
  auto const h = parse_number<std::int64_t>(s.substr(0, c1));
  auto const m = parse_number<std::int64_t>(s.substr(c1 + 1, c2 - c1 - 1));
  auto const sec = parse_number<std::int64_t>(s.substr(c2 + 1));
  if (!h || !m || !sec || *h < 0 || *m < 0 || *m > 59 || *sec < 0 ||
      *sec > 59) {
    throw std::invalid_argument{"bad time \"" + std::string{s} + "\""};
  }
  return *h * 3600 + *m * 60 + *sec;
}

std::string format_gtfs_time(seconds_t const t) {
  if (t < 0) {
    throw std::invalid_argument{"negative time"};
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld",
                static_cast<long long>(t / 3600),
                static_cast<long long>(t / 60 % 60),
                static_cast<long long>(t % 60));
  return buf;
}

std::string format_coordinate(double const v) {
  char buf[64];
  auto const res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::fixed);
  auto out = std::string{buf, res.ptr};
  auto const dot = out.find('.');
  auto const decimals =
      dot == std::string::npos ? std::size_t{0} : out.size() - dot - 1;
  if (dot == std::string::npos) {
    out.push_back('.');
  }
  if (decimals < 6) {
    out.append(6 - decimals, '0');
  }
  return out;
}

bool service_active(feed const& f, std::string_view const service_id,
                    std::int32_t const date) {
  if (f.calendars.empty() && f.calendar_dates.empty()) {
    return true;
  }
  for (auto const& cd : f.calendar_dates) {
    if (cd.service_id == service_id && cd.date == date) {
      return cd.exception_type == 1;
    }
  }
  auto const wd = weekday_index(date);
  return std::any_of(begin(f.calendars), end(f.calendars), [&](auto&& c) {
    return c.service_id == service_id && c.start_date <= date &&
           date <= c.end_date && c.weekdays[static_cast<std::size_t>(wd)];
  });
}

// ---------------------------------------------------------------------------
// timetable

timetable::timetable(feed f, std::optional<std::int32_t> const service_date)
    : feed_{std::move(f)}, service_date_{service_date} {
  auto const by_id = [](auto const& a, auto const& b) { return a.id < b.id; };
  std::sort(begin(feed_.stops), end(feed_.stops), by_id);
  std::sort(begin(feed_.routes), end(feed_.routes), by_id);
  std::sort(begin(feed_.trips), end(feed_.trips), by_id);
  std::sort(begin(feed_.stop_times), end(feed_.stop_times),
            [](stop_time const& a, stop_time const& b) {
              return std::tie(a.trip_id, a.stop_sequence) <
                     std::tie(b.trip_id, b.stop_sequence);
            });
  std::sort(begin(feed_.calendars), end(feed_.calendars),
            [](auto const& a, auto const& b) {
              return a.service_id < b.service_id;
            });
  std::sort(begin(feed_.calendar_dates), end(feed_.calendar_dates),
            [](auto const& a, auto const& b) {
              return std::tie(a.service_id, a.date) <
                     std::tie(b.service_id, b.date);
            });

  for (auto i = stop_idx_t{0}; i != feed_.stops.size(); ++i) {
    auto const& s = feed_.stops[i];
    if (!s.pos.valid()) {
      throw data_error{"stop " + s.id + " has invalid coordinates"};
    }
    if (!stop_index_.emplace(s.id, i).second) {
      throw data_error{"duplicate stop_id " + s.id};
    }
  }
  for (auto i = route_idx_t{0}; i != feed_.routes.size(); ++i) {
    if (!route_index_.emplace(feed_.routes[i].id, i).second) {
      throw data_error{"duplicate route_id " + feed_.routes[i].id};
    }
  }
  trip_route_.reserve(feed_.trips.size());
  for (auto i = trip_idx_t{0}; i != feed_.trips.size(); ++i) {
    auto const& t = feed_.trips[i];
    if (!trip_index_.emplace(t.id, i).second) {
      throw data_error{"duplicate trip_id " + t.id};
    }
    auto const r = route_index_.find(t.route_id);
    if (r == end(route_index_)) {
      throw data_error{"trip " + t.id + " references unknown route " +
                       t.route_id};
    }
    trip_route_.push_back(r->second);
  }

  trip_first_stop_time_.assign(feed_.trips.size() + 1, 0U);
  auto prev = static_cast<stop_time const*>(nullptr);
  for (auto const& st : feed_.stop_times) {
    auto const t = trip_index_.find(st.trip_id);
    if (t == end(trip_index_)) {
      throw data_error{"stop_time references unknown trip " + st.trip_id};
    }
    if (!stop_index_.contains(st.stop_id)) {
      throw data_error{"stop_time references unknown stop " + st.stop_id};
    }
    if (st.departure < st.arrival) {
      throw data_error{"trip " + st.trip_id + ": departure before arrival"};
    }
    if (prev != nullptr && prev->trip_id == st.trip_id) {
      if (prev->stop_sequence == st.stop_sequence) {
        throw data_error{"trip " + st.trip_id + ": duplicate stop_sequence"};
      }
      if (st.arrival < prev->departure) {
        throw data_error{"trip " + st.trip_id + ": times decrease"};
      }
    }
    ++trip_first_stop_time_[t->second + 1];
    prev = &st;
  }
  for (auto i = std::size_t{1}; i < trip_first_stop_time_.size(); ++i) {
    trip_first_stop_time_[i] += trip_first_stop_time_[i - 1];
  }
}

std::span<stop_time const> timetable::stop_times(trip_idx_t const t) const {
  return std::span{feed_.stop_times}.subspan(
      trip_first_stop_time_[t],
      trip_first_stop_time_[t + 1] - trip_first_stop_time_[t]);
}

std::optional<stop_idx_t> timetable::find_stop(std::string_view id) const {
  auto const it = stop_index_.find(std::string{id});
  return it == end(stop_index_) ? std::nullopt
                                : std::optional{it->second};
}

std::optional<route_idx_t> timetable::find_route(std::string_view id) const {
  auto const it = route_index_.find(std::string{id});
  return it == end(route_index_) ? std::nullopt
                                 : std::optional{it->second};
}

std::optional<trip_idx_t> timetable::find_trip(std::string_view id) const {
  auto const it = trip_index_.find(std::string{id});
  return it == end(trip_index_) ? std::nullopt
                                : std::optional{it->second};
}

stop_idx_t timetable::stop_of(stop_time const& st) const {
  return stop_index_.at(st.stop_id);
}

bool operator==(timetable const& a, timetable const& b) {
  auto const& x = a.feed_;
  auto const& y = b.feed_;
  return x.stops == y.stops && x.routes == y.routes && x.trips == y.trips &&
         x.stop_times == y.stop_times && x.calendars == y.calendars &&
         x.calendar_dates == y.calendar_dates;
}

// ---------------------------------------------------------------------------
// parsing

timetable parse_gtfs(std::map<std::string, std::string> const& files,
                     parse_options const& opt) {
  auto f = feed{};

  // calendar
  {
    auto const r = read_file(files, "calendar.txt", false);
    if (!r.table.header.empty()) {
      auto const c_sid = r.required("service_id");
      constexpr auto kDays = std::array<std::string_view, 7>{
          "monday", "tuesday",  "wednesday", "thursday",
          "friday", "saturday", "sunday"};
      auto day_cols = std::array<int, 7>{};
      for (auto i = 0U; i != 7U; ++i) {
        day_cols[i] = r.required(kDays[i]);
      }
      auto const c_start = r.required("start_date");
      auto const c_end = r.required("end_date");
      for (auto const& row : r.table.rows) {
        auto c = service_calendar{};
        c.service_id = std::string{r.need(row, c_sid, "service_id")};
        for (auto i = 0U; i != 7U; ++i) {
          auto const v = r.number<int>(row, day_cols[i], kDays[i]);
          if (v != 0 && v != 1) {
            throw malformed_row_error{r.name, row.line, "bad weekday flag"};
          }
          c.weekdays[i] = v == 1;
        }
        c.start_date = r.number<std::int32_t>(row, c_start, "start_date");
        c.end_date = r.number<std::int32_t>(row, c_end, "end_date");
        f.calendars.push_back(std::move(c));
      }
    }
  }
  {
    auto const r = read_file(files, "calendar_dates.txt", false);
    if (!r.table.header.empty()) {
      auto const c_sid = r.required("service_id");
      auto const c_date = r.required("date");
      auto const c_type = r.required("exception_type");
      for (auto const& row : r.table.rows) {
        auto cd = calendar_date{};
        cd.service_id = std::string{r.need(row, c_sid, "service_id")};
        cd.date = r.number<std::int32_t>(row, c_date, "date");
        cd.exception_type =
            r.number<std::int32_t>(row, c_type, "exception_type");
        if (cd.exception_type != 1 && cd.exception_type != 2) {
          throw malformed_row_error{r.name, row.line, "bad exception_type"};
        }
        f.calendar_dates.push_back(std::move(cd));
      }
    }
  }

  // stops
  auto stop_ids = std::unordered_set<std::string>{};
  {
    auto const r = read_file(files, "stops.txt", true);
    auto const c_id = r.required("stop_id");
    auto const c_name = r.table.column("stop_name");
    auto const c_lat = r.required("stop_lat");
    auto const c_lon = r.required("stop_lon");
    for (auto const& row : r.table.rows) {
      auto s = stop{};
      s.id = std::string{r.need(row, c_id, "stop_id")};
      s.name = std::string{file_reader::get(row, c_name)};
      s.pos = {r.number<double>(row, c_lat, "stop_lat"),
               r.number<double>(row, c_lon, "stop_lon")};
      if (!s.pos.valid()) {
        throw malformed_row_error{r.name, row.line, "coordinates out of range"};
      }
      if (!stop_ids.insert(s.id).second) {
        throw malformed_row_error{r.name, row.line, "duplicate stop_id"};
      }
      f.stops.push_back(std::move(s));
    }
  }

  // routes
  auto route_ids = std::unordered_set<std::string>{};
  {
    auto const r = read_file(files, "routes.txt", true);
    auto const c_id = r.required("route_id");
    auto const c_agency = r.table.column("agency_id");
    auto const c_short = r.table.column("route_short_name");
    auto const c_long = r.table.column("route_long_name");
    auto const c_desc = r.table.column("route_desc");
    auto const c_type = r.required("route_type");
    for (auto const& row : r.table.rows) {
      auto rt = route{};
      rt.id = std::string{r.need(row, c_id, "route_id")};
      rt.agency_id = std::string{file_reader::get(row, c_agency)};
      rt.short_name = std::string{file_reader::get(row, c_short)};
      rt.long_name = std::string{file_reader::get(row, c_long)};
      rt.desc = std::string{file_reader::get(row, c_desc)};
      rt.type = static_cast<route_type>(
          r.number<std::int32_t>(row, c_type, "route_type"));
      if (!route_ids.insert(rt.id).second) {
        throw malformed_row_error{r.name, row.line, "duplicate route_id"};
      }
      f.routes.push_back(std::move(rt));
    }
  }

  // trips
  auto all_trip_ids = std::unordered_set<std::string>{};
  auto kept_trip_ids = std::unordered_set<std::string>{};
  {
    auto const r = read_file(files, "trips.txt", true);
    auto const c_route = r.required("route_id");
    auto const c_service = r.required("service_id");
    auto const c_id = r.required("trip_id");
    for (auto const& row : r.table.rows) {
      auto t = trip{};
      t.id = std::string{r.need(row, c_id, "trip_id")};
      t.route_id = std::string{r.need(row, c_route, "route_id")};
      t.service_id = std::string{r.need(row, c_service, "service_id")};
      if (!route_ids.contains(t.route_id)) {
        throw dangling_reference_error{r.name, row.line, t.route_id};
      }
      if (!all_trip_ids.insert(t.id).second) {
        throw malformed_row_error{r.name, row.line, "duplicate trip_id"};
      }
      if (opt.service_date &&
          !service_active(f, t.service_id, *opt.service_date)) {
        continue;
      }
      kept_trip_ids.insert(t.id);
      f.trips.push_back(std::move(t));
    }
  }

  // stop_times
  {
    auto const r = read_file(files, "stop_times.txt", true);
    auto const c_trip = r.required("trip_id");
    auto const c_arr = r.required("arrival_time");
    auto const c_dep = r.required("departure_time");
    auto const c_stop = r.required("stop_id");
    auto const c_seq = r.required("stop_sequence");

    auto has_time = std::vector<std::pair<bool, bool>>{};
    auto lines = std::vector<std::size_t>{};
    for (auto const& row : r.table.rows) {
      auto st = stop_time{};
      st.trip_id = std::string{r.need(row, c_trip, "trip_id")};
      st.stop_id = std::string{r.need(row, c_stop, "stop_id")};
      if (!all_trip_ids.contains(st.trip_id)) {
        throw dangling_reference_error{r.name, row.line, st.trip_id};
      }
      if (!stop_ids.contains(st.stop_id)) {
        throw dangling_reference_error{r.name, row.line, st.stop_id};
      }
      if (!kept_trip_ids.contains(st.trip_id)) {
        continue;
      }
      st.stop_sequence = r.number<std::int32_t>(row, c_seq, "stop_sequence");
      auto const arr = file_reader::get(row, c_arr);
      auto const dep = file_reader::get(row, c_dep);
      try {
        if (!arr.empty()) {
          st.arrival = parse_gtfs_time(arr);
        }
        if (!dep.empty()) {
          st.departure = parse_gtfs_time(dep);
        }
      } catch (std::invalid_argument const& e) {
        throw malformed_row_error{r.name, row.line, e.what()};
      }
      if (!arr.empty() && !dep.empty() && st.departure < st.arrival) {
        throw malformed_row_error{r.name, row.line,
                                  "departure_time before arrival_time"};
      }
      has_time.emplace_back(!arr.empty(), !dep.empty());
      lines.push_back(row.line);
      f.stop_times.push_back(std::move(st));
    }

    auto order = std::vector<std::size_t>(f.stop_times.size());
    for (auto i = std::size_t{0}; i != order.size(); ++i) {
      order[i] = i;
    }
    std::sort(begin(order), end(order), [&](auto const a, auto const b) {
      auto const& x = f.stop_times[a];
      auto const& y = f.stop_times[b];
      return std::tie(x.trip_id, x.stop_sequence) <
             std::tie(y.trip_id, y.stop_sequence);
    });
    auto sorted = std::vector<stop_time>{};
    auto sorted_has = std::vector<std::pair<bool, bool>>{};
    auto sorted_lines = std::vector<std::size_t>{};
    sorted.reserve(order.size());
    for (auto const i : order) {
      sorted.push_back(std::move(f.stop_times[i]));
      sorted_has.push_back(has_time[i]);
      sorted_lines.push_back(lines[i]);
    }

    for (auto first = std::size_t{0}; first != sorted.size();) {
      auto last = first;
      while (last != sorted.size() &&
             sorted[last].trip_id == sorted[first].trip_id) {
        ++last;
      }
      interpolate_times(sorted, sorted_has, sorted_lines, first, last);
      for (auto i = first + 1; i < last; ++i) {
        if (sorted[i].stop_sequence == sorted[i - 1].stop_sequence) {
          throw malformed_row_error{r.name, sorted_lines[i],
                                    "duplicate stop_sequence"};
        }
        if (sorted[i].arrival < sorted[i - 1].departure) {
          throw malformed_row_error{r.name, sorted_lines[i],
                                    "arrival before previous departure"};
        }
      }
      first = last;
    }
    f.stop_times = std::move(sorted);
  }

  for (auto const& [name, content] : files) {
    if (std::find(begin(kConsumedFiles), end(kConsumedFiles), name) ==
        end(kConsumedFiles)) {
      f.passthrough_files.emplace(name, content);
    }
  }

  return timetable{std::move(f), opt.service_date};
}

timetable parse_gtfs(fs::path const& dir, parse_options const& opt) {
  return parse_gtfs(read_directory(dir), opt);
}

// ---------------------------------------------------------------------------
// writing

std::map<std::string, std::string> serialize_gtfs(timetable const& tt) {
  auto const& f = tt.data();
  auto files = f.passthrough_files;

  auto stops = std::string{"stop_id,stop_name,stop_lat,stop_lon\n"};
  for (auto const& s : f.stops) {
    csv::append_row(stops, {s.id, s.name, format_coordinate(s.pos.lat),
                            format_coordinate(s.pos.lon)});
  }
  files["stops.txt"] = std::move(stops);

  auto routes = std::string{
      "route_id,agency_id,route_short_name,route_long_name,route_desc,"
      "route_type\n"};
  for (auto const& r : f.routes) {
    csv::append_row(routes,
                    {r.id, r.agency_id, r.short_name, r.long_name, r.desc,
                     std::to_string(static_cast<std::int32_t>(r.type))});
  }
  files["routes.txt"] = std::move(routes);

  auto trips = std::string{"route_id,service_id,trip_id\n"};
  for (auto const& t : f.trips) {
    csv::append_row(trips, {t.route_id, t.service_id, t.id});
  }
  files["trips.txt"] = std::move(trips);

  auto sts = std::string{
      "trip_id,arrival_time,departure_time,stop_id,stop_sequence\n"};
  for (auto const& st : f.stop_times) {
    csv::append_row(sts, {st.trip_id, format_gtfs_time(st.arrival),
                          format_gtfs_time(st.departure), st.stop_id,
                          std::to_string(st.stop_sequence)});
  }
  files["stop_times.txt"] = std::move(sts);

  if (!f.calendars.empty()) {
    auto cal = std::string{
        "service_id,monday,tuesday,wednesday,thursday,friday,saturday,sunday,"
        "start_date,end_date\n"};
    for (auto const& c : f.calendars) {
      auto row = std::vector<std::string>{c.service_id};
      for (auto const d : c.weekdays) {
        row.emplace_back(d ? "1" : "0");
      }
      row.push_back(std::to_string(c.start_date));
      row.push_back(std::to_string(c.end_date));
      csv::append_row(cal, row);
    }
    files["calendar.txt"] = std::move(cal);
  }
  if (!f.calendar_dates.empty()) {
    auto cd = std::string{"service_id,date,exception_type\n"};
    for (auto const& c : f.calendar_dates) {
      csv::append_row(cd, {c.service_id, std::to_string(c.date),
                           std::to_string(c.exception_type)});
    }
    files["calendar_dates.txt"] = std::move(cd);
  }
  return files;
}

void write_gtfs(timetable const& tt, fs::path const& dir) {
  auto ec = std::error_code{};
  fs::create_directories(dir, ec);
  if (ec) {
    throw io_error{"cannot create " + dir.string() + ": " + ec.message()};
  }
  for (auto const& [name, content] : serialize_gtfs(tt)) {
    auto out = std::ofstream{dir / name, std::ios::binary | std::ios::trunc};
    out << content;
    if (!out) {
      throw io_error{"cannot write " + (dir / name).string()};
    }
  }
}

}  // namespace poollines
