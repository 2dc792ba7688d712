#include "poollines/csv.h"

#include <algorithm>

namespace poollines::csv {

int table::column(std::string_view const name) const {
  auto const it = std::find(begin(header), end(header), name);
  return it == end(header) ? -1 : static_cast<int>(it - begin(header));
}

table parse(std::string_view content) {
  if (content.starts_with("\xEF\xBB\xBF")) {
    content.remove_prefix(3);
  }

  auto records = std::vector<row>{};
  auto fields = std::vector<std::string>{};
  auto field = std::string{};
  auto line = std::size_t{1};
  auto record_line = std::size_t{1};
  auto in_quotes = false;
  auto any_content = false;

  auto const end_record = [&]() {
    fields.emplace_back(std::move(field));
    field.clear();
    if (any_content || fields.size() > 1U) {
      records.push_back(row{record_line, std::move(fields)});
    }
    fields.clear();
    any_content = false;
  };

  for (auto i = std::size_t{0}; i < content.size(); ++i) {
    auto const c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') {
          ++line;
        }
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        any_content = true;
        break;
      case ',':
        fields.emplace_back(std::move(field));
        field.clear();
        any_content = true;
        break;
      case '\r': break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        any_content = true;
    }
  }
  if (any_content || !field.empty() || !fields.empty()) {
    end_record();
  }

  auto t = table{};
  if (!records.empty()) {
    t.header = std::move(records.front().fields);
    for (auto& h : t.header) {
      auto const first = h.find_first_not_of(" \t");
      auto const last = h.find_last_not_of(" \t");
      h = first == std::string::npos ? std::string{}
                                     : h.substr(first, last - first + 1);
    }
    t.rows.assign(std::make_move_iterator(begin(records) + 1),
                  std::make_move_iterator(end(records)));
  }
  return t;
}

std::string escape(std::string_view const field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string{field};
  }
  auto out = std::string{"\""};
  for (auto const c : field) {
    if (c == '"') {
      out.push_back('"');
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void append_row(std::string& out, std::vector<std::string> const& fields) {
  for (auto i = std::size_t{0}; i < fields.size(); ++i) {
    if (i != 0U) {
      out.push_back(',');
    }
    out += escape(fields[i]);
  }
  out.push_back('\n');
}

}  // namespace poollines::csv
