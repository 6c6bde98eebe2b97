// Copyright 2026 The entcon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace entcon::cli {

using json = nlohmann::json;
using Cell = std::variant<std::string, double>;

/// A titled grid that renders as aligned text, RFC 4180 CSV, or JSON records.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline std::string cell_text(const Cell& c, int precision = 6) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const double v = std::get<double>(c);
  if (std::isnan(v)) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string render_pretty(const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], cell_text(r[c]).size());
  std::ostringstream os;
  if (!t.title.empty()) os << t.title << "\n";
  auto line = [&](auto&& get) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string s = get(c);
      os << (c ? "  " : "") << s << std::string(width[c] - s.size(), ' ');
    }
    os << "\n";
  };
  line([&](std::size_t c) { return t.columns[c]; });
  line([&](std::size_t c) { return std::string(width[c], '-'); });
  for (const auto& r : t.rows) line([&](std::size_t c) { return c < r.size() ? cell_text(r[c]) : std::string(); });
  for (const auto& n : t.notes) os << n << "\n";
  return os.str();
}

inline std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_escape(t.columns[c]);
  os << "\r\n";
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << (c ? "," : "");
      if (const auto* s = std::get_if<std::string>(&r[c]))
        os << csv_escape(*s);
      else if (!std::isnan(std::get<double>(r[c])))
        os << std::setprecision(17) << std::get<double>(r[c]);
    }
    os << "\r\n";
  }
  return os.str();
}

inline json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json o = json::object();
    for (std::size_t c = 0; c < r.size() && c < t.columns.size(); ++c) {
      if (const auto* s = std::get_if<std::string>(&r[c]))
        o[t.columns[c]] = *s;
      else if (std::isnan(std::get<double>(r[c])))
        o[t.columns[c]] = nullptr;
      else
        o[t.columns[c]] = std::get<double>(r[c]);
    }
    rows.push_back(std::move(o));
  }
  json out = {{"title", t.title}, {"rows", std::move(rows)}};
  if (!t.notes.empty()) out["notes"] = t.notes;
  return out;
}

inline std::string render(const Table& t, const std::string& format) {
  if (format == "csv") return render_csv(t);
  if (format == "json") return table_json(t).dump(2) + "\n";
  return render_pretty(t);
}

}  // namespace entcon::cli
