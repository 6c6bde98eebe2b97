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

#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entcon/qstate.hpp"

namespace entcon {

/// Level tables of the fourteen maximally F_N-entangled 4-qubit TGX states
/// that include |1111>, keyed by the number of nonzero levels. Levels are
/// one-based, |1> = |1111>, ..., |16> = |2222>.
inline const std::map<int, std::vector<std::vector<int>>>& tgx_level_tables() {
  static const std::map<int, std::vector<std::vector<int>>> tables{
      {2, {{1, 16}}},
      {4,
       {{1, 4, 13, 16},
        {1, 4, 14, 15},
        {1, 6, 11, 16},
        {1, 6, 12, 15},
        {1, 7, 10, 16},
        {1, 7, 12, 14},
        {1, 8, 10, 15},
        {1, 8, 11, 14},
        {1, 8, 12, 13}}},
      {6, {{1, 4, 6, 11, 13, 16}, {1, 4, 7, 10, 13, 16}, {1, 6, 7, 10, 11, 16}}},
      {8, {{1, 4, 6, 7, 10, 11, 13, 16}}},
  };
  return tables;
}

/// Catalog name of the j-th table state with `levels` nonzero levels.
inline std::string tgx_state_name(int j, int levels) {
  return "PHI[" + std::to_string(j) + "][" + std::to_string(levels) + "]";
}

/// All fourteen table states in table order ([2], [4] rows 1-9, [6], [8]).
inline std::vector<std::string> tgx_state_names() {
  std::vector<std::string> names;
  for (const auto& [levels, rows] : tgx_level_tables())
    for (std::size_t j = 1; j <= rows.size(); ++j) names.push_back(tgx_state_name(static_cast<int>(j), levels));
  return names;
}

namespace detail {

inline PureState from_digit_strings(const ModeDims& dims, std::initializer_list<std::string_view> kets) {
  std::vector<int> levels;
  for (auto ket : kets) {
    std::vector<int> digits;
    for (char c : ket) digits.push_back(c - '1');
    levels.push_back(static_cast<int>(dims.level(digits)) + 1);
  }
  return PureState::uniform_over(dims, levels);
}

inline DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.dims(), 0.5 * (a.matrix() + b.matrix()));
}

inline std::optional<std::pair<int, int>> parse_tgx_name(std::string_view name) {
  int j = 0, levels = 0;
  char tail = 0;
  if (std::sscanf(std::string(name).c_str(), "PHI[%d][%d]%c", &j, &levels, &tail) != 2) return std::nullopt;
  return std::pair{j, levels};
}

}  // namespace detail

struct CatalogEntry {
  std::string name;
  std::string description;
  bool pure;
};

inline std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out{
      {"GHZ4", "4-qubit GHZ state (|1111>+|2222>)/sqrt2", true},
      {"BP4", "Bell product |Phi+> x |Phi+>", true},
      {"F4", "tier-1 state (|1111>+|1122>+|2212>+|2221>)/2", true},
      {"W4", "4-qubit W state", true},
      {"GHZ3", "3-qubit GHZ state", true},
      {"BELL", "2-qubit Bell state |Phi+>", true},
      {"GHZ+1", "1/2 (GHZ4 + |1111><1111|)", false},
      {"2SEP", "1/2 (BP4 + |1><1| x GHZ3)", false},
      {"F+1", "1/2 (F4 + |1111><1111|)", false},
      {"MME", "1/2 (GHZ3 x |1><1| + GHZ3 x |2><2|), every member maximally entangled", false},
  };
  for (const auto& n : tgx_state_names()) out.push_back({n, "maximally F_N-entangled 4-qubit TGX state", true});
  return out;
}

/// Pure catalog states. Throws InvalidArgument for unknown or mixed names.
inline PureState catalog_pure(std::string_view name) {
  const auto q4 = ModeDims::qubits(4);
  if (name == "GHZ4") return detail::from_digit_strings(q4, {"1111", "2222"});
  if (name == "BP4") return detail::from_digit_strings(q4, {"1111", "1122", "2211", "2222"});
  if (name == "F4") return detail::from_digit_strings(q4, {"1111", "1122", "2212", "2221"});
  if (name == "W4") return detail::from_digit_strings(q4, {"1112", "1121", "1211", "2111"});
  if (name == "GHZ3") return detail::from_digit_strings(ModeDims::qubits(3), {"111", "222"});
  if (name == "BELL") return detail::from_digit_strings(ModeDims::qubits(2), {"11", "22"});
  if (auto parsed = detail::parse_tgx_name(name)) {
    const auto& tables = tgx_level_tables();
    auto it = tables.find(parsed->second);
    if (it != tables.end() && parsed->first >= 1 && static_cast<std::size_t>(parsed->first) <= it->second.size())
      return PureState::uniform_over(q4, it->second[parsed->first - 1]);
  }
  for (const auto& e : catalog_entries())
    if (e.name == name) throw InvalidArgument("catalog: state " + std::string(name) + " is mixed");
  throw InvalidArgument("catalog: unknown state " + std::string(name));
}

inline DensityMatrix catalog(std::string_view name) {
  const auto q4 = ModeDims::qubits(4);
  const auto basis1111 = detail::from_digit_strings(q4, {"1111"}).density();
  if (name == "GHZ+1") return detail::mix(catalog_pure("GHZ4").density(), basis1111);
  if (name == "F+1") return detail::mix(catalog_pure("F4").density(), basis1111);
  if (name == "2SEP") {
    const auto ket1 = detail::from_digit_strings(ModeDims{2}, {"1"});
    return detail::mix(catalog_pure("BP4").density(), kron(ket1, catalog_pure("GHZ3")).density());
  }
  if (name == "MME") {
    const auto a = detail::from_digit_strings(q4, {"1111", "2221"});
    const auto b = detail::from_digit_strings(q4, {"1112", "2222"});
    return detail::mix(a.density(), b.density());
  }
  return catalog_pure(name).density();
}

}  // namespace entcon
