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

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "entcon/convexroof.hpp"
#include "entcon/entarray.hpp"
#include "entcon/entcore.hpp"
#include "entcon/errors.hpp"
#include "entcon/qstate.hpp"

namespace entcon::io {

using json = nlohmann::json;

/// A state as read from a qstate-JSON file: pure states keep their amplitudes.
using AnyState = std::variant<PureState, DensityMatrix>;

inline DensityMatrix as_density(const AnyState& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return p->density();
  return std::get<DensityMatrix>(s);
}

namespace detail {

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("qstate-JSON: complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline ModeDims dims_from(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array()) throw FormatError("qstate-JSON: missing integer array 'dims'");
  std::vector<int> d;
  for (const auto& x : j["dims"]) {
    if (!x.is_number_integer()) throw FormatError("qstate-JSON: 'dims' must hold integers");
    d.push_back(x.get<int>());
  }
  try {
    return ModeDims(std::move(d));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("qstate-JSON: ") + e.what());
  }
}

}  // namespace detail

inline json to_json(const PureState& psi) {
  json amps = json::array();
  for (Index i = 0; i < psi.amplitudes().size(); ++i) amps.push_back(detail::complex_json(psi.amplitudes()(i)));
  return {{"dims", psi.dims().values()}, {"kind", "pure"}, {"amplitudes", std::move(amps)}};
}

inline json to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (Index i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (Index j = 0; j < rho.dim(); ++j) row.push_back(detail::complex_json(rho.matrix()(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dims", rho.dims().values()}, {"kind", "mixed"}, {"matrix", std::move(rows)}};
}

inline json to_json(const AnyState& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

/// Parses qstate-JSON. Structural problems raise FormatError; well-formed
/// data that is not a valid state raises InvalidState.
inline AnyState state_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("qstate-JSON: top level must be an object");
  const ModeDims dims = detail::dims_from(j);
  if (!j.contains("kind") || !j["kind"].is_string()) throw FormatError("qstate-JSON: missing string 'kind'");
  const auto kind = j["kind"].get<std::string>();
  const Index n = dims.total();
  if (kind == "pure") {
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
      throw FormatError("qstate-JSON: pure state needs 'amplitudes'");
    const auto& a = j["amplitudes"];
    if (static_cast<Index>(a.size()) != n)
      throw FormatError("qstate-JSON: expected " + std::to_string(n) + " amplitudes");
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = detail::complex_from(a[i]);
    return PureState(dims, std::move(v));
  }
  if (kind == "mixed") {
    if (!j.contains("matrix") || !j["matrix"].is_array()) throw FormatError("qstate-JSON: mixed state needs 'matrix'");
    const auto& m = j["matrix"];
    if (static_cast<Index>(m.size()) != n) throw FormatError("qstate-JSON: matrix needs " + std::to_string(n) + " rows");
    Matrix data(n, n);
    for (Index i = 0; i < n; ++i) {
      if (!m[i].is_array() || static_cast<Index>(m[i].size()) != n)
        throw FormatError("qstate-JSON: matrix row " + std::to_string(i) + " has the wrong length");
      for (Index k = 0; k < n; ++k) data(i, k) = detail::complex_from(m[i][k]);
    }
    return DensityMatrix(dims, std::move(data));
  }
  throw FormatError("qstate-JSON: 'kind' must be \"pure\" or \"mixed\"");
}

inline AnyState parse_state(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("qstate-JSON: ") + e.what());
  }
  return state_from_json(j);
}

inline AnyState read_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str());
}

inline void write_state(const std::string& path, const AnyState& s) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << to_json(s).dump(2) << '\n';
}

/// Quotes a CSV field when needed (RFC 4180).
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline json to_json(const MeasureReport& r) {
  json parts = json::array();
  for (const auto& pv : r.per_partition) parts.push_back({{"partition", pv.partition.str()}, {"value", pv.value}});
  return {{"measure", r.measure}, {"k", r.k}, {"value", r.value}, {"normalization", r.normalization},
          {"per_partition", std::move(parts)}};
}

/// Flat records: measure, k, partition, value. The aggregate itself is the
/// row with an empty partition.
inline std::string to_csv(const MeasureReport& r) {
  std::string out = "measure,k,partition,value\r\n";
  out += csv_field(r.measure) + "," + std::to_string(r.k) + ",," + number(r.value) + "\r\n";
  for (const auto& pv : r.per_partition)
    out += csv_field(r.measure) + "," + std::to_string(pv.partition.size()) + "," + csv_field(pv.partition.str()) +
           "," + number(pv.value) + "\r\n";
  return out;
}

inline json to_json(const CreResult& r, const std::string& measure, const CreOptions& options) {
  json out = {{"measure", measure},
              {"value", r.value},
              {"budget", options.budget},
              {"seed", options.seed},
              {"samples_used", r.samples_used},
              {"rank", r.rank},
              {"best_decomposition_size", r.best.count()},
              {"best_source", source_name(r.best.source)},
              {"low_confidence", r.low_confidence}};
  if (!r.history.empty()) out["history"] = r.history;
  return out;
}

inline std::string history_csv(const CreResult& r) {
  std::string out = "sample_index,running_min\r\n";
  for (std::size_t i = 0; i < r.history.size(); ++i) out += std::to_string(i) + "," + number(r.history[i]) + "\r\n";
  return out;
}

inline json to_json(const EntConcurrenceVector& v) {
  json rows = json::array();
  for (const auto& row : v.rows) {
    json entries = json::array();
    for (const auto& e : row) {
      json x = {{"partition", e.partition.str()}, {"value", e.value}, {"method", method_name(e.method)}};
      if (e.low_confidence) x["low_confidence"] = true;
      entries.push_back(std::move(x));
    }
    rows.push_back(std::move(entries));
  }
  return {{"reduction", v.reduction}, {"rows", std::move(rows)}};
}

/// rows -> reductions -> vectors, like the array's printed layout.
inline json to_json(const EntConcurrenceArray& a) {
  json rows = json::array();
  for (const auto& row : a.rows) {
    json vs = json::array();
    for (const auto& v : row) vs.push_back(to_json(v));
    rows.push_back(std::move(vs));
  }
  return {{"modes", a.modes}, {"sum", a.sum()}, {"rows", std::move(rows)}};
}

inline std::string to_csv(const EntConcurrenceArray& a) {
  std::string out = "reduction,partition,value,method\r\n";
  for (const auto& row : a.rows)
    for (const auto& v : row)
      for (const auto& r : v.rows)
        for (const auto& e : r)
          out += csv_field(reduction_str(v.reduction)) + "," + csv_field(e.partition.str()) + "," + number(e.value) +
                 "," + method_name(e.method) + "\r\n";
  return out;
}

}  // namespace entcon::io
