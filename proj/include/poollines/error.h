#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poollines {

// Input data could not be used (malformed feed, bad ids, ...).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct missing_file_error : data_error {
  explicit missing_file_error(std::string file)
      : data_error{"missing GTFS file: " + file}, file_{std::move(file)} {}
  std::string file_;
};

struct malformed_row_error : data_error {
  malformed_row_error(std::string file, std::size_t line, std::string reason)
      : data_error{file + ":" + std::to_string(line) + ": " + reason},
        file_{std::move(file)},
        line_{line} {}
  std::string file_;
  std::size_t line_;
};

struct dangling_reference_error : data_error {
  dangling_reference_error(std::string file, std::size_t line, std::string id)
      : data_error{file + ":" + std::to_string(line) +
                   ": unknown reference \"" + id + "\""},
        file_{std::move(file)},
        line_{line},
        id_{std::move(id)} {}
  std::string file_;
  std::size_t line_;
  std::string id_;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct empty_meeting_point_set_error : data_error {
  using data_error::data_error;
};

struct duplicate_driver_id_error : data_error {
  using data_error::data_error;
};

struct id_collision_error : data_error {
  using data_error::data_error;
};

// Invalid user configuration.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace poollines
