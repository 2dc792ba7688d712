#include "poollines/planner.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "poollines/error.h"
#include "poollines/poolline.h"

namespace poollines {

namespace {

constexpr double kKmPerDegree = kEarthRadiusKm * std::numbers::pi / 180.0;

}  // namespace

// ---------------------------------------------------------------------------
// itinerary helpers

std::size_t itinerary::ride_count() const {
  return static_cast<std::size_t>(
      std::count_if(begin(legs), end(legs), [](leg const& l) {
        return l.is_ride();
      }));
}

std::size_t itinerary::count(leg_kind const k) const {
  return static_cast<std::size_t>(std::count_if(
      begin(legs), end(legs), [&](leg const& l) { return l.kind == k; }));
}

leg const* itinerary::first_ride() const {
  auto const it = std::find_if(begin(legs), end(legs),
                               [](leg const& l) { return l.is_ride(); });
  return it == end(legs) ? nullptr : &*it;
}

itinerary walk_itinerary(geo_point const& from, geo_point const& to,
                         seconds_t const departure,
                         travel_model const& model) {
  auto it = itinerary{};
  auto const km = road_km(from, to, model);
  auto const dur = seconds_for_km(km, model.walk_speed_kmh);
  it.legs.push_back(leg{.kind = leg_kind::walk,
                        .from = {from, std::nullopt},
                        .to = {to, std::nullopt},
                        .board = departure,
                        .alight = departure + dur,
                        .distance_km = km});
  it.depart = departure;
  it.arrive = departure + dur;
  it.total_walk_km = km;
  return it;
}

// ---------------------------------------------------------------------------
// stop_grid

stop_grid::stop_grid(std::span<stop const> stops, double const cell_km)
    : stops_{stops}, cell_deg_{std::max(cell_km, 0.05) / kKmPerDegree} {
  cells_.reserve(stops.size());
  for (auto i = stop_idx_t{0}; i != stops.size(); ++i) {
    auto const& p = stops[i].pos;
    max_abs_lat_ = std::max(max_abs_lat_, std::abs(p.lat));
    cells_.emplace_back(
        key(static_cast<std::int64_t>(std::floor(p.lat / cell_deg_)),
            static_cast<std::int64_t>(std::floor(p.lon / cell_deg_))),
        i);
  }
  std::sort(begin(cells_), end(cells_));
}

std::int64_t stop_grid::key(std::int64_t const lat_cell,
                            std::int64_t const lon_cell) const {
  return lat_cell * (std::int64_t{1} << 32) + lon_cell;
}

void stop_grid::near(geo_point const& p, double const max_km,
                     travel_model const& model,
                     std::vector<std::pair<stop_idx_t, double>>& out) const {
  out.clear();
  if (cells_.empty() || max_km < 0.0) {
    return;
  }
  // Great-circle radius in degrees; longitude extent widened for the
  // worst-case latitude inside the search box.
  auto const dlat = max_km / model.circuity / kKmPerDegree;
  auto const worst_lat =
      std::min(89.0, std::max(std::abs(p.lat) + dlat, 0.0));
  auto const dlon = dlat / std::cos(worst_lat * std::numbers::pi / 180.0);

  auto const lat0 = static_cast<std::int64_t>(std::floor((p.lat - dlat) / cell_deg_));
  auto const lat1 = static_cast<std::int64_t>(std::floor((p.lat + dlat) / cell_deg_));
  auto const lon0 = static_cast<std::int64_t>(std::floor((p.lon - dlon) / cell_deg_));
  auto const lon1 = static_cast<std::int64_t>(std::floor((p.lon + dlon) / cell_deg_));
  for (auto lat = lat0; lat <= lat1; ++lat) {
    auto it = std::lower_bound(
        begin(cells_), end(cells_),
        std::pair{key(lat, lon0), stop_idx_t{0}});
    auto const last = key(lat, lon1);
    for (; it != end(cells_) && it->first <= last; ++it) {
      auto const km = road_km(p, stops_[it->second].pos, model);
      if (km <= max_km) {
        out.emplace_back(it->second, km);
      }
    }
  }
  std::sort(begin(out), end(out));
}

// ---------------------------------------------------------------------------
// network

std::vector<footpath> build_footpaths(timetable const& tt,
                                      travel_model const& model,
                                      double const max_walk_km) {
  auto const grid = stop_grid{tt.stops(), max_walk_km};
  auto fps = std::vector<footpath>{};
  auto near = std::vector<std::pair<stop_idx_t, double>>{};
  for (auto s = stop_idx_t{0}; s != tt.stops().size(); ++s) {
    grid.near(tt.stops()[s].pos, max_walk_km, model, near);
    for (auto const& [t, km] : near) {
      if (t != s) {
        fps.push_back(
            footpath{s, t, seconds_for_km(km, model.walk_speed_kmh), km});
      }
    }
  }
  return fps;
}

network::network(timetable tt, std::vector<footpath> footpaths,
                 planner_params p)
    : tt_{std::move(tt)}, params_{p} {
  init(std::move(footpaths));
}

network::network(timetable tt, planner_params p, double const max_footpath_km)
    : tt_{std::move(tt)}, params_{p} {
  init(build_footpaths(tt_, params_.model, max_footpath_km));
}

void network::init(std::vector<footpath> footpaths) {
  auto const n_trips = tt_.trips().size();
  carpool_.resize(n_trips);
  for (auto t = trip_idx_t{0}; t != n_trips; ++t) {
    carpool_[t] = is_poolline(tt_, t);
    auto const sts = tt_.stop_times(t);
    for (auto i = std::size_t{1}; i < sts.size(); ++i) {
      connections_.push_back(connection{
          .dep_time = sts[i - 1].departure,
          .arr_time = sts[i].arrival,
          .dep_stop = tt_.stop_of(sts[i - 1]),
          .arr_stop = tt_.stop_of(sts[i]),
          .trip = t,
          .seq = static_cast<std::uint32_t>(i - 1)});
    }
  }
  std::sort(begin(connections_), end(connections_),
            [](connection const& a, connection const& b) {
              return std::tie(a.dep_time, a.arr_time, a.trip, a.seq) <
                     std::tie(b.dep_time, b.arr_time, b.trip, b.seq);
            });

  footpaths_ = std::move(footpaths);
  std::sort(begin(footpaths_), end(footpaths_),
            [](footpath const& a, footpath const& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  footpath_offset_.assign(tt_.stops().size() + 1, 0U);
  for (auto const& fp : footpaths_) {
    if (fp.from >= tt_.stops().size() || fp.to >= tt_.stops().size()) {
      throw data_error{"footpath references unknown stop"};
    }
    ++footpath_offset_[fp.from + 1];
  }
  for (auto i = std::size_t{1}; i < footpath_offset_.size(); ++i) {
    footpath_offset_[i] += footpath_offset_[i - 1];
  }

  grid_ = stop_grid{tt_.stops(), params_.max_access_km};
}

std::span<footpath const> network::footpaths_from(stop_idx_t const s) const {
  return std::span{footpaths_}.subspan(
      footpath_offset_[s], footpath_offset_[s + 1] - footpath_offset_[s]);
}

// ---------------------------------------------------------------------------
// connection scan

namespace {

enum class rec_kind : std::uint8_t { access, direct, ride, footpath, egress };

// Append-only label store; parents are never overwritten, so a label stays
// reconstructible even after a better one replaces it at its stop.
struct record {
  seconds_t time{0};
  double walk_km{0.0};
  std::int32_t rides{0};
  std::int32_t parent{-1};
  rec_kind kind{rec_kind::access};
  std::uint32_t a{0};
  std::uint32_t b{0};
};

bool better(seconds_t const t1, std::int32_t const r1, double const w1,
            record const& o) {
  if (t1 != o.time) {
    return t1 < o.time;
  }
  if (r1 != o.rides) {
    return r1 < o.rides;
  }
  return w1 < o.walk_km - 1e-9;
}

struct trip_board {
  std::int32_t source{-1};
  std::uint32_t conn{0};
  std::int32_t rides{0};
  double walk_km{0.0};
};

struct workspace {
  std::uint32_t epoch{0};

  std::vector<std::uint32_t> stop_stamp;
  std::vector<std::int32_t> best_ride;
  std::vector<std::int32_t> best_walk;

  std::vector<std::uint32_t> egress_stamp;
  std::vector<seconds_t> egress_s;
  std::vector<double> egress_km;

  std::vector<std::uint32_t> trip_stamp;
  std::vector<trip_board> boards;
  std::vector<std::uint32_t> banned_stamp;

  std::vector<record> records;
  std::vector<std::pair<stop_idx_t, double>> near;

  void prepare(std::size_t const n_stops, std::size_t const n_trips) {
    if (stop_stamp.size() < n_stops) {
      stop_stamp.resize(n_stops, 0U);
      best_ride.resize(n_stops);
      best_walk.resize(n_stops);
      egress_stamp.resize(n_stops, 0U);
      egress_s.resize(n_stops);
      egress_km.resize(n_stops);
    }
    if (trip_stamp.size() < n_trips) {
      trip_stamp.resize(n_trips, 0U);
      boards.resize(n_trips);
      banned_stamp.resize(n_trips, 0U);
    }
    if (++epoch == 0U) {
      std::fill(begin(stop_stamp), end(stop_stamp), 0U);
      std::fill(begin(egress_stamp), end(egress_stamp), 0U);
      std::fill(begin(trip_stamp), end(trip_stamp), 0U);
      std::fill(begin(banned_stamp), end(banned_stamp), 0U);
      epoch = 1U;
    }
    records.clear();
  }

  void touch(stop_idx_t const s) {
    if (stop_stamp[s] != epoch) {
      stop_stamp[s] = epoch;
      best_ride[s] = -1;
      best_walk[s] = -1;
    }
  }

  std::int32_t push(record const& r) {
    records.push_back(r);
    return static_cast<std::int32_t>(records.size() - 1U);
  }
};

bool mode_allows(plan_mode const m, bool const carpool) {
  switch (m) {
    case plan_mode::transit: return true;
    case plan_mode::walk_only: return false;
    case plan_mode::transit_no_pool: return !carpool;
    case plan_mode::pool_only: return carpool;
  }
  return false;
}

leg_place stop_place(timetable const& tt, stop_idx_t const s) {
  auto const& st = tt.stops()[s];
  return leg_place{st.pos, st.id};
}

itinerary reconstruct(network const& net, plan_request const& req,
                      workspace const& ws, std::int32_t const target) {
  auto const& tt = net.tt();
  auto const& model = net.params().model;
  auto const& conns = net.connections();
  auto legs = std::vector<leg>{};

  auto const walk_leg = [&](leg_place from, leg_place to, seconds_t board,
                            seconds_t alight, double km) {
    legs.push_back(leg{.kind = leg_kind::walk,
                       .from = std::move(from),
                       .to = std::move(to),
                       .board = board,
                       .alight = alight,
                       .distance_km = km});
  };

  for (auto idx = target; idx != -1;) {
    auto const& r = ws.records[static_cast<std::size_t>(idx)];
    switch (r.kind) {
      case rec_kind::direct:
        walk_leg({req.from, std::nullopt}, {req.to, std::nullopt},
                 req.departure, r.time, r.walk_km);
        break;
      case rec_kind::access:
        if (r.walk_km > 0.0) {
          walk_leg({req.from, std::nullopt}, stop_place(tt, r.a),
                   req.departure, r.time, r.walk_km);
        }
        break;
      case rec_kind::egress: {
        auto const& from = ws.records[static_cast<std::size_t>(r.parent)];
        auto const km = r.walk_km - from.walk_km;
        if (km > 0.0) {
          walk_leg(stop_place(tt, r.a), {req.to, std::nullopt}, from.time,
                   r.time, km);
        }
        break;
      }
      case rec_kind::footpath: {
        auto const& from = ws.records[static_cast<std::size_t>(r.parent)];
        walk_leg(stop_place(tt, r.a), stop_place(tt, r.b), from.time, r.time,
                 r.walk_km - from.walk_km);
        break;
      }
      case rec_kind::ride: {
        auto const& board = conns[r.a];
        auto const& alight = conns[r.b];
        auto const sts = tt.stop_times(board.trip);
        auto km = 0.0;
        for (auto i = board.seq; i <= alight.seq; ++i) {
          km += road_km(tt.stops()[tt.stop_of(sts[i])].pos,
                        tt.stops()[tt.stop_of(sts[i + 1])].pos, model);
        }
        legs.push_back(leg{
            .kind = net.is_carpool(board.trip) ? leg_kind::carpool
                                               : leg_kind::transit,
            .from = stop_place(tt, board.dep_stop),
            .to = stop_place(tt, alight.arr_stop),
            .board = board.dep_time,
            .alight = alight.arr_time,
            .distance_km = km,
            .trip_id = tt.trips()[board.trip].id,
            .board_index = static_cast<std::int32_t>(board.seq),
            .alight_index = static_cast<std::int32_t>(alight.seq + 1)});
        break;
      }
    }
    idx = r.parent;
  }
  std::reverse(begin(legs), end(legs));

  auto it = itinerary{};
  it.depart = req.departure;
  it.arrive = ws.records[static_cast<std::size_t>(target)].time;
  auto t = it.depart;
  for (auto const& l : legs) {
    it.total_wait_s += l.board - t;
    t = l.alight;
    if (l.kind == leg_kind::walk) {
      it.total_walk_km += l.distance_km;
    }
  }
  it.legs = std::move(legs);
  return it;
}

}  // namespace

std::optional<itinerary> earliest_arrival(network const& net,
                                          plan_request const& req,
                                          std::span<trip_idx_t const> banned) {
  if (!req.from.valid() || !req.to.valid()) {
    return std::nullopt;
  }

  thread_local auto ws = workspace{};
  auto const& tt = net.tt();
  auto const& params = net.params();
  auto const& model = params.model;
  ws.prepare(tt.stops().size(), tt.trips().size());
  auto const epoch = ws.epoch;

  for (auto const t : banned) {
    ws.banned_stamp[t] = epoch;
  }
  auto const date_ok = !req.date || !tt.service_date() ||
                       *req.date == *tt.service_date();
  auto const allowed = [&](trip_idx_t const t) {
    return date_ok && ws.banned_stamp[t] != epoch &&
           mode_allows(req.mode, net.is_carpool(t));
  };

  // Direct walk.
  auto const direct_km = road_km(req.from, req.to, model);
  auto target = ws.push(record{
      .time = req.departure + seconds_for_km(direct_km, model.walk_speed_kmh),
      .walk_km = direct_km,
      .kind = rec_kind::direct});

  if (req.mode != plan_mode::walk_only && date_ok) {
    // Egress candidates.
    net.stops_near(req.to, params.max_access_km, ws.near);
    for (auto const& [s, km] : ws.near) {
      ws.egress_stamp[s] = epoch;
      ws.egress_s[s] = seconds_for_km(km, model.walk_speed_kmh);
      ws.egress_km[s] = km;
    }

    // Access walks.
    net.stops_near(req.from, params.max_access_km, ws.near);
    for (auto const& [s, km] : ws.near) {
      ws.touch(s);
      ws.best_walk[s] = ws.push(record{
          .time = req.departure + seconds_for_km(km, model.walk_speed_kmh),
          .walk_km = km,
          .kind = rec_kind::access,
          .a = s});
    }

    auto const conns = net.connections();
    auto i = static_cast<std::size_t>(
        std::lower_bound(begin(conns), end(conns), req.departure,
                         [](connection const& c, seconds_t const t) {
                           return c.dep_time < t;
                         }) -
        begin(conns));
    for (; i < conns.size(); ++i) {
      auto const& c = conns[i];
      if (c.dep_time >= ws.records[static_cast<std::size_t>(target)].time) {
        break;
      }
      if (!allowed(c.trip)) {
        continue;
      }

      if (ws.trip_stamp[c.trip] != epoch) {
        ws.trip_stamp[c.trip] = epoch;
        ws.boards[c.trip] = trip_board{};
      }
      auto& board = ws.boards[c.trip];

      // Boarding at c.dep_stop from a ride (same-stop transfer) or a walk.
      if (ws.stop_stamp[c.dep_stop] == epoch) {
        auto src = std::int32_t{-1};
        auto const consider = [&](std::int32_t const rec, seconds_t const buf) {
          if (rec < 0) {
            return;
          }
          auto const& r = ws.records[static_cast<std::size_t>(rec)];
          if (r.time + buf > c.dep_time) {
            return;
          }
          if (src < 0) {
            src = rec;
            return;
          }
          auto const& s = ws.records[static_cast<std::size_t>(src)];
          if (std::tie(r.rides, r.walk_km) < std::tie(s.rides, s.walk_km)) {
            src = rec;
          }
        };
        consider(ws.best_ride[c.dep_stop], params.transfer_time);
        consider(ws.best_walk[c.dep_stop], 0);
        if (src >= 0) {
          auto const& s = ws.records[static_cast<std::size_t>(src)];
          if (board.source < 0 ||
              std::tie(s.rides, s.walk_km) <
                  std::tie(board.rides, board.walk_km)) {
            board = trip_board{src, static_cast<std::uint32_t>(i), s.rides,
                               s.walk_km};
          }
        }
      }
      if (board.source < 0) {
        continue;
      }

      // Alighting at c.arr_stop.
      auto const rides = board.rides + 1;
      auto const walk = board.walk_km;
      ws.touch(c.arr_stop);
      auto const cur = ws.best_ride[c.arr_stop];
      if (cur >= 0 && !better(c.arr_time, rides, walk,
                              ws.records[static_cast<std::size_t>(cur)])) {
        continue;
      }
      auto const ride = ws.push(record{.time = c.arr_time,
                                       .walk_km = walk,
                                       .rides = rides,
                                       .parent = board.source,
                                       .kind = rec_kind::ride,
                                       .a = board.conn,
                                       .b = static_cast<std::uint32_t>(i)});
      ws.best_ride[c.arr_stop] = ride;

      if (ws.egress_stamp[c.arr_stop] == epoch) {
        auto const t = c.arr_time + ws.egress_s[c.arr_stop];
        auto const w = walk + ws.egress_km[c.arr_stop];
        if (better(t, rides, w, ws.records[static_cast<std::size_t>(target)])) {
          target = ws.push(record{.time = t,
                                  .walk_km = w,
                                  .rides = rides,
                                  .parent = ride,
                                  .kind = rec_kind::egress,
                                  .a = c.arr_stop});
        }
      }

      for (auto const& fp : net.footpaths_from(c.arr_stop)) {
        auto const t = c.arr_time + fp.duration;
        auto const w = walk + fp.km;
        ws.touch(fp.to);
        auto const prev = ws.best_walk[fp.to];
        if (prev < 0 ||
            better(t, rides, w, ws.records[static_cast<std::size_t>(prev)])) {
          ws.best_walk[fp.to] = ws.push(record{.time = t,
                                               .walk_km = w,
                                               .rides = rides,
                                               .parent = ride,
                                               .kind = rec_kind::footpath,
                                               .a = fp.from,
                                               .b = fp.to});
        }
      }
    }
  }

  return reconstruct(net, req, ws, target);
}

std::vector<itinerary> plan(network const& net, plan_request const& req) {
  auto out = std::vector<itinerary>{};
  if (req.num_itineraries < 1 || !req.from.valid() || !req.to.valid()) {
    return out;
  }
  auto const limit = static_cast<std::size_t>(req.num_itineraries);
  auto banned = std::vector<trip_idx_t>{};
  while (out.size() < limit && req.mode != plan_mode::walk_only) {
    auto it = earliest_arrival(net, req, banned);
    if (!it || it->ride_count() == 0U) {
      break;
    }
    auto const trip = net.tt().find_trip(*it->first_ride()->trip_id);
    if (std::find(begin(out), end(out), *it) == end(out)) {
      out.push_back(std::move(*it));
    }
    banned.push_back(*trip);
  }
  if (out.size() < limit) {
    out.push_back(
        walk_itinerary(req.from, req.to, req.departure, net.params().model));
  }
  return out;
}

// ---------------------------------------------------------------------------
// query documents

std::string_view to_string(plan_mode const m) {
  switch (m) {
    case plan_mode::transit: return "TRANSIT";
    case plan_mode::walk_only: return "WALK";
    case plan_mode::transit_no_pool: return "TRANSIT_NO_POOL";
    case plan_mode::pool_only: return "POOL_ONLY";
  }
  return "?";
}

std::string_view to_string(leg_kind const k) {
  switch (k) {
    case leg_kind::walk: return "walk";
    case leg_kind::transit: return "transit";
    case leg_kind::carpool: return "carpool";
  }
  return "?";
}

std::string to_query_string(plan_request const& req) {
  auto const place = [](geo_point const& p) {
    return format_coordinate(p.lat) + "," + format_coordinate(p.lon);
  };
  auto const t = req.departure % 86400;
  auto const h = t / 3600;
  auto const m = t / 60 % 60;
  char time[32];
  std::snprintf(time, sizeof(time), "%lld:%02lld%s",
                static_cast<long long>(h % 12 == 0 ? 12 : h % 12),
                static_cast<long long>(m), h < 12 ? "am" : "pm");
  auto q = "fromPlace=" + place(req.from) + "&toPlace=" + place(req.to) +
           "&time=" + time;
  if (t % 60 != 0 || req.departure >= 86400) {
    q += "&seconds=" + std::to_string(req.departure);
  }
  if (req.date) {
    char date[16];
    std::snprintf(date, sizeof(date), "%02d-%02d-%04d", *req.date / 100 % 100,
                  *req.date % 100, *req.date / 10000);
    q += std::string{"&date="} + date;
  }
  q += "&numItineraries=" + std::to_string(req.num_itineraries);
  q += std::string{"&mode="} + std::string{to_string(req.mode)};
  return q;
}

namespace {

double to_double(std::string_view s) {
  auto v = 0.0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument{"bad number \"" + std::string{s} + "\""};
  }
  return v;
}

std::int64_t to_int(std::string_view s) {
  auto v = std::int64_t{};
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument{"bad integer \"" + std::string{s} + "\""};
  }
  return v;
}

geo_point parse_place(std::string_view s) {
  auto const comma = s.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument{"bad place \"" + std::string{s} + "\""};
  }
  return {to_double(s.substr(0, comma)), to_double(s.substr(comma + 1))};
}

// "10:30am", "10:30 pm", "22:30", "22:30:15"
seconds_t parse_clock(std::string_view s) {
  auto offset = seconds_t{0};
  auto twelve_hour = false;
  if (s.ends_with("am") || s.ends_with("pm")) {
    twelve_hour = true;
    offset = s.ends_with("pm") ? 12 * 3600 : 0;
    s.remove_suffix(2);
    while (s.ends_with(' ')) {
      s.remove_suffix(1);
    }
  }
  auto parts = std::vector<std::int64_t>{};
  while (!s.empty()) {
    auto const colon = s.find(':');
    parts.push_back(to_int(s.substr(0, colon)));
    s = colon == std::string_view::npos ? std::string_view{}
                                        : s.substr(colon + 1);
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument{"bad time"};
  }
  auto h = parts[0];
  if (twelve_hour) {
    if (h < 1 || h > 12) {
      throw std::invalid_argument{"bad time"};
    }
    h %= 12;
  }
  return offset + h * 3600 + parts[1] * 60 + (parts.size() == 3 ? parts[2] : 0);
}

}  // namespace

plan_request parse_query_string(std::string_view q) {
  if (auto const qm = q.find('?'); qm != std::string_view::npos) {
    q.remove_prefix(qm + 1);
  }
  auto req = plan_request{};
  auto seconds = std::optional<seconds_t>{};
  while (!q.empty()) {
    auto const amp = q.find('&');
    auto const kv = q.substr(0, amp);
    q = amp == std::string_view::npos ? std::string_view{} : q.substr(amp + 1);
    if (kv.empty()) {
      continue;
    }
    auto const eq = kv.find('=');
    auto const key = kv.substr(0, eq);
    auto const value =
        eq == std::string_view::npos ? std::string_view{} : kv.substr(eq + 1);
    if (key == "fromPlace") {
      req.from = parse_place(value);
    } else if (key == "toPlace") {
      req.to = parse_place(value);
    } else if (key == "time") {
      req.departure = parse_clock(value);
    } else if (key == "seconds") {
      seconds = to_int(value);
    } else if (key == "date") {
      // MM-DD-YYYY
      if (value.size() != 10) {
        throw std::invalid_argument{"bad date"};
      }
      req.date = static_cast<std::int32_t>(to_int(value.substr(6, 4)) * 10000 +
                                           to_int(value.substr(0, 2)) * 100 +
                                           to_int(value.substr(3, 2)));
    } else if (key == "numItineraries") {
      req.num_itineraries = static_cast<std::int32_t>(to_int(value));
    } else if (key == "mode") {
      if (value == "TRANSIT") {
        req.mode = plan_mode::transit;
      } else if (value == "WALK") {
        req.mode = plan_mode::walk_only;
      } else if (value == "TRANSIT_NO_POOL") {
        req.mode = plan_mode::transit_no_pool;
      } else if (value == "POOL_ONLY") {
        req.mode = plan_mode::pool_only;
      } else {
        throw std::invalid_argument{"unknown mode " + std::string{value}};
      }
    }
  }
  if (seconds) {
    req.departure = *seconds;
  }
  return req;
}

std::string itineraries_to_csv(std::span<itinerary const> its) {
  auto out = std::string{
      "itinerary,leg,kind,from_stop,from_lat,from_lon,to_stop,to_lat,to_lon,"
      "board,alight,distance_km,trip_id\n"};
  char km[32];
  for (auto i = std::size_t{0}; i != its.size(); ++i) {
    for (auto j = std::size_t{0}; j != its[i].legs.size(); ++j) {
      auto const& l = its[i].legs[j];
      std::snprintf(km, sizeof(km), "%.6f", l.distance_km);
      out += std::to_string(i) + "," + std::to_string(j) + "," +
             std::string{to_string(l.kind)} + "," +
             l.from.stop_id.value_or("") + "," +
             format_coordinate(l.from.pos.lat) + "," +
             format_coordinate(l.from.pos.lon) + "," +
             l.to.stop_id.value_or("") + "," +
             format_coordinate(l.to.pos.lat) + "," +
             format_coordinate(l.to.pos.lon) + "," + std::to_string(l.board) +
             "," + std::to_string(l.alight) + "," + km + "," +
             l.trip_id.value_or("") + "\n";
    }
  }
  return out;
}

}  // namespace poollines
