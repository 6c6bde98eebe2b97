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
#include <charconv>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "entcon/entcon.hpp"
#include "table.hpp"

namespace entcon::cli {

class UnknownMeasure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MeasureKind {
  Ent,
  Aggregate,
  Level,
  StrictLevel,
  StrictAggregate,
  Partitional,
  PartitionalConcurrence,
  Vector,
  Array,
  Absolute,
  Rms
};

struct MeasureSpec {
  MeasureKind kind = MeasureKind::Ent;
  Family family = Family::DM;
  int k = 0;
  std::string name;
};

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

/// Accepts ent, fgm|fsm|fdm (ec, ent-concurrence), gm<k>|sm<k>|dm<k> (also
/// gm_k), sgm<k>, sfgm, pe, pec, vector, array, abs, rms.
inline MeasureSpec parse_measure(const std::string& text) {
  std::string s = lower(text);
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  auto level = [&](std::size_t prefix) -> std::optional<int> {
    int k = 0;
    const char* b = s.data() + prefix;
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, k);
    if (b == e || ec != std::errc() || p != e) return std::nullopt;
    return k;
  };
  MeasureSpec m;
  m.name = s;
  if (s == "ent") return m;
  if (s == "fgm" || s == "fsm" || s == "fdm" || s == "ec" || s == "entconcurrence" || s == "ent-concurrence") {
    m.kind = MeasureKind::Aggregate;
    m.family = s == "fgm" ? Family::GM : s == "fsm" ? Family::SM : Family::DM;
    m.name = aggregate_name(m.family);
    return m;
  }
  if (s == "sfgm") {
    m.kind = MeasureKind::StrictAggregate;
    m.family = Family::GM;
    m.name = "SFGM";
    return m;
  }
  if (s.rfind("sgm", 0) == 0) {
    if (auto k = level(3)) {
      m.kind = MeasureKind::StrictLevel;
      m.family = Family::GM;
      m.k = *k;
      m.name = "SGM_" + std::to_string(*k);
      return m;
    }
  }
  for (auto [prefix, f] : {std::pair{"gm", Family::GM}, std::pair{"sm", Family::SM}, std::pair{"dm", Family::DM}}) {
    if (s.rfind(prefix, 0) == 0) {
      if (auto k = level(2)) {
        m.kind = MeasureKind::Level;
        m.family = f;
        m.k = *k;
        m.name = family_name(f) + "_" + std::to_string(*k);
        return m;
      }
    }
  }
  if (s == "pe" || s == "partitional") return {MeasureKind::Partitional, Family::GM, 0, "partitional-ent"};
  if (s == "pec" || s == "partitional-concurrence")
    return {MeasureKind::PartitionalConcurrence, Family::DM, 0, "partitional-ent-concurrence"};
  if (s == "vector") return {MeasureKind::Vector, Family::DM, 0, "ent-concurrence-vector"};
  if (s == "array") return {MeasureKind::Array, Family::DM, 0, "ent-concurrence-array"};
  if (s == "abs" || s == "absolute") return {MeasureKind::Absolute, Family::DM, 0, "absolute-ent-concurrence"};
  if (s == "rms") return {MeasureKind::Rms, Family::DM, 0, "rms-diagnostic"};
  throw UnknownMeasure("unknown measure '" + text + "'");
}

/// A catalog name, or else a qstate-JSON path.
inline io::AnyState load_state(const std::string& source) {
  for (const auto& e : catalog_entries())
    if (e.name == source) {
      if (e.pure) return catalog_pure(source);
      return catalog(source);
    }
  if (!std::filesystem::exists(source))
    throw FormatError("'" + source + "' is neither a catalog state nor an existing file");
  return io::read_state(source);
}

/// Named state sets for --normalize-over, or a comma-separated list.
inline std::vector<std::string> reference_names(const std::string& set) {
  if (set == "table1" || set == "tgx") return tgx_state_names();
  if (set == "pure-tests") return {"GHZ4", "BP4", "F4", "W4"};
  if (set == "mixed-tests") return {"GHZ+1", "2SEP", "F+1", "MME", "F4"};
  std::vector<std::string> out;
  std::string cur;
  for (char c : set + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (out.empty()) throw InvalidArgument("empty --normalize-over set");
  return out;
}

struct Request {
  MeasureSpec measure;
  std::optional<ModePartition> partition;
  std::vector<int> reduction;  // empty = all modes
  CreOptions cre;
};

struct Outcome {
  double value = 0.0;
  std::string method;  // exact or cre
  json detail = json::object();
  Table table;
};

namespace detail {

inline std::vector<int> modes_or_all(const std::vector<int>& r, std::size_t n) {
  return r.empty() ? all_modes(n) : r;
}

inline Table report_table(const MeasureReport& r) {
  Table t{r.measure, {"partition", "value"}, {}, {}};
  for (const auto& pv : r.per_partition) t.add({pv.partition.str(), pv.value});
  t.add({"total", r.value});
  return t;
}

inline Table vector_table(const EntConcurrenceVector& v) {
  Table t{"ent-concurrence vector (" + reduction_str(v.reduction) + ")", {"partition", "value", "method"}, {}, {}};
  for (const auto& row : v.rows)
    for (const auto& e : row) t.add({e.partition.str(), e.value, method_name(e.method)});
  return t;
}

inline Table array_table(const EntConcurrenceArray& a) {
  Table t{"ent-concurrence array", {"reduction", "partition", "value", "method"}, {}, {}};
  for (const auto& row : a.rows)
    for (const auto& v : row)
      for (const auto& r : v.rows)
        for (const auto& e : r) t.add({reduction_str(v.reduction), e.partition.str(), e.value, method_name(e.method)});
  return t;
}

inline Table scalar_table(const std::string& name, double value) {
  Table t{"", {"measure", "value"}, {}, {}};
  t.add({name, value});
  return t;
}

inline PureMeasure ent_measure(const ModeDims& dims) {
  const auto labels = all_modes(dims.size());
  std::vector<std::vector<int>> singletons;
  for (int m : labels) singletons.push_back({m});
  return partition_ent_measure(dims, labels, ModePartition(singletons));
}

}  // namespace detail

/// Evaluates one measure. Pure input is scored exactly; mixed input goes
/// through the convex-roof engine.
inline Outcome evaluate(const Request& req, const io::AnyState& state) {
  const DensityMatrix rho = io::as_density(state);
  const bool pure = is_pure(rho);
  const std::size_t n = rho.num_modes();
  const auto& m = req.measure;
  Outcome out;
  out.method = pure ? "exact" : "cre";
  auto cre_detail = [&](const CreResult& r) {
    out.detail = io::to_json(r, m.name, req.cre);
    out.value = r.value;
  };
  switch (m.kind) {
    case MeasureKind::Ent: {
      if (pure) {
        out.value = ent(as_pure(rho));
      } else {
        cre_detail(cre(detail::ent_measure(rho.dims()), rho, req.cre));
      }
      out.table = detail::scalar_table("ent", out.value);
      break;
    }
    case MeasureKind::Aggregate: {
      if (pure) {
        const auto r = aggregate_ent(as_pure(rho), m.family);
        out.value = r.value;
        out.detail = io::to_json(r);
        out.table = detail::report_table(r);
      } else {
        cre_detail(hatted_aggregate(rho, m.family, req.cre));
        out.table = detail::scalar_table(m.name, out.value);
      }
      break;
    }
    case MeasureKind::Level: {
      entcon::detail::check_level(m.k, n);
      if (pure) {
        const auto psi = as_pure(rho);
        PartitionTable table(psi.dims());
        const auto row = table.evaluate_row(psi.amplitudes(), m.k);
        out.value = combine_level(m.family, row);
        Table t{m.name, {"partition", "value"}, {}, {}};
        for (std::size_t h = 0; h < row.size(); ++h)
          t.add({table.row(m.k)[h].partition().str(), family_term(m.family, row[h])});
        t.add({"total", out.value});
        out.table = std::move(t);
      } else {
        cre_detail(hatted_k_ent(rho, m.family, m.k, req.cre));
        out.table = detail::scalar_table(m.name, out.value);
      }
      break;
    }
    case MeasureKind::StrictLevel: {
      const auto r = sgm_k(rho, m.k, req.cre);
      out.value = r.value;
      Table t{m.name, {"partition", "cre"}, {}, {}};
      json parts = json::array();
      for (const auto& pv : r.per_partition) {
        t.add({pv.partition.str(), pv.value});
        parts.push_back({{"partition", pv.partition.str()}, {"value", pv.value}});
      }
      t.add({"min", r.value});
      out.table = std::move(t);
      out.detail = {{"argmin", r.argmin.str()}, {"per_partition", std::move(parts)}};
      break;
    }
    case MeasureKind::StrictAggregate: {
      out.value = sfgm(rho, req.cre);
      out.table = detail::scalar_table(m.name, out.value);
      break;
    }
    case MeasureKind::Partitional:
    case MeasureKind::PartitionalConcurrence: {
      if (!req.partition) throw InvalidArgument(m.name + " needs --partition");
      const auto& p = *req.partition;
      const auto reduction = p.modes();
      const auto reduced = partial_trace(rho, reduction);
      const bool root = m.kind == MeasureKind::PartitionalConcurrence;
      if (is_pure(reduced)) {
        out.method = "exact";
        const PartitionalEnt pe(reduced.dims(), reduction, p);
        const double e = pe(as_pure(reduced).amplitudes());
        out.value = root ? ent_sqrt(e) : e;
      } else {
        out.method = "cre";
        const auto measure = root ? partition_concurrence_measure(reduced.dims(), reduction, p)
                                  : partition_ent_measure(reduced.dims(), reduction, p);
        cre_detail(cre(measure, reduced, req.cre));
      }
      out.table = detail::scalar_table(m.name + " (" + p.str() + ")", out.value);
      break;
    }
    case MeasureKind::Vector: {
      const auto v = ent_concurrence_vector(rho, detail::modes_or_all(req.reduction, n), req.cre);
      out.value = v.sum();
      out.detail = io::to_json(v);
      out.table = detail::vector_table(v);
      break;
    }
    case MeasureKind::Array: {
      const auto a = ent_concurrence_array(rho, req.cre);
      out.value = a.sum();
      out.detail = io::to_json(a);
      out.table = detail::array_table(a);
      break;
    }
    case MeasureKind::Absolute: {
      out.value = absolute_ent_concurrence(rho, req.cre);
      out.table = detail::scalar_table(m.name, out.value);
      break;
    }
    case MeasureKind::Rms: {
      const auto v = ent_concurrence_vector(rho, detail::modes_or_all(req.reduction, n), req.cre);
      Table t{"rms diagnostic (" + reduction_str(v.reduction) + ")", {"partition", "value", "rms", "residual"}, {}, {}};
      json rows = json::array();
      double worst = 0.0;
      for (const auto& r : rms_diagnostic(v)) {
        t.add({r.partition.str(), r.value, r.rms, r.residual});
        rows.push_back({{"partition", r.partition.str()}, {"value", r.value}, {"rms", r.rms}, {"residual", r.residual}});
        worst = std::max(worst, r.residual);
      }
      out.value = worst;
      out.detail = {{"rows", std::move(rows)}};
      out.table = std::move(t);
      break;
    }
  }
  return out;
}

}  // namespace entcon::cli
