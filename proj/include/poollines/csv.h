#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace poollines::csv {

struct row {
  std::size_t line{0};
  std::vector<std::string> fields;
};

struct table {
  std::vector<std::string> header;
  std::vector<row> rows;

  // Column index by name, -1 if absent.
  int column(std::string_view name) const;
};

// RFC 4180 reader: optional UTF-8 BOM, quoted fields, CRLF or LF endings.
// Blank lines are skipped.
table parse(std::string_view content);

std::string escape(std::string_view field);

void append_row(std::string& out, std::vector<std::string> const& fields);

}  // namespace poollines::csv
