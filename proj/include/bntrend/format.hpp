#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "bntrend/error.hpp"

namespace bntrend {

// Shortest decimal that round-trips to the same double.
inline std::string format_double(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

// RFC-4180 quoting: fields containing commas, quotes or line breaks are
// wrapped and inner quotes doubled.
inline std::string csv_field(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string{field};
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string join_row(const std::vector<std::string>& fields, char delimiter) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row.push_back(delimiter);
    row += delimiter == ',' ? csv_field(fields[i]) : fields[i];
  }
  row.push_back('\n');
  return row;
}

// Minimal RFC-4180 reader for delimiter-separated tables (used to re-read
// series files for plotting). Handles quoted fields and embedded quotes.
inline std::vector<std::vector<std::string>> parse_delimited(std::string_view text,
                                                             char delimiter) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    if (row_started || !row.empty() || !field.empty()) {
      end_field();
      rows.push_back(std::move(row));
      row.clear();
    }
    row_started = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      row_started = true;
    } else if (c == delimiter) {
      end_field();
      row_started = true;
    } else if (c == '\n') {
      end_row();
    } else if (c == '\r') {
      // swallowed; \r\n and bare \r both end the row at the \n or next char
      if (i + 1 >= text.size() || text[i + 1] != '\n') end_row();
    } else {
      field.push_back(c);
      row_started = true;
    }
  }
  end_row();
  return rows;
}

inline std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace bntrend
