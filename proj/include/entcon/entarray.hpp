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
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entcon/convexroof.hpp"
#include "entcon/entcore.hpp"
#include "entcon/partition.hpp"

namespace entcon {

enum class EntryMethod { PureExact, Cre, DiagonalShortcut };

inline std::string method_name(EntryMethod m) {
  switch (m) {
    case EntryMethod::PureExact: return "pure-exact";
    case EntryMethod::Cre: return "cre";
    case EntryMethod::DiagonalShortcut: return "diagonal-shortcut";
  }
  return "?";
}

struct VectorEntry {
  ModePartition partition;
  double value = 0.0;
  EntryMethod method = EntryMethod::PureExact;
  bool low_confidence = false;
};

/// Partitional ent-concurrences of one reduction; rows[T-2] lists the
/// T-partitions in canonical order.
struct EntConcurrenceVector {
  std::vector<int> reduction;
  std::vector<std::vector<VectorEntry>> rows;

  double sum() const {
    double s = 0.0;
    for (const auto& row : rows)
      for (const auto& e : row) s += e.value;
    return s;
  }

  std::size_t entry_count() const {
    std::size_t c = 0;
    for (const auto& row : rows) c += row.size();
    return c;
  }

  const VectorEntry& at(const ModePartition& p) const {
    for (const auto& row : rows)
      for (const auto& e : row)
        if (e.partition == p) return e;
    throw InvalidArgument("EntConcurrenceVector: no entry for " + p.str());
  }
};

/// rows[k-2] holds the vectors of the C(N,k) k-mode reductions in
/// lexicographic order.
struct EntConcurrenceArray {
  std::size_t modes = 0;
  std::vector<std::vector<EntConcurrenceVector>> rows;

  double sum() const {
    double s = 0.0;
    for (const auto& row : rows)
      for (const auto& v : row) s += v.sum();
    return s;
  }

  std::size_t entry_count() const {
    std::size_t c = 0;
    for (const auto& row : rows)
      for (const auto& v : row) c += v.entry_count();
    return c;
  }

  const EntConcurrenceVector& vector(std::span<const int> reduction) const {
    for (const auto& row : rows)
      for (const auto& v : row)
        if (std::equal(v.reduction.begin(), v.reduction.end(), reduction.begin(), reduction.end())) return v;
    throw InvalidArgument("EntConcurrenceArray: no such reduction");
  }
};

/// All k-element subsets of 1..n in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

inline std::string reduction_str(std::span<const int> reduction) {
  std::string s;
  for (std::size_t i = 0; i < reduction.size(); ++i) s += (i ? "," : "") + std::to_string(reduction[i]);
  return s;
}

/// Partitional ent-concurrences of the reduction onto `reduction`. Pure
/// reductions are evaluated exactly, product-basis diagonal ones are zero,
/// and everything else is a per-partition CRE seeded from (seed, reduction,
/// partition).
inline EntConcurrenceVector ent_concurrence_vector(const DensityMatrix& rho, std::span<const int> reduction,
                                                   const CreOptions& options = {}) {
  if (reduction.size() < 2) throw InvalidArgument("ent_concurrence_vector: reduction needs at least two modes");
  const auto reduced = partial_trace(rho, reduction);
  const std::vector<int> labels(reduction.begin(), reduction.end());
  EntConcurrenceVector out{labels, {}};
  const bool pure = is_pure(reduced);
  const bool diagonal = !pure && is_diagonal(reduced.matrix());
  const PartitionTable table(reduced.dims(), labels);
  std::optional<PureState> psi;
  if (pure) psi = as_pure(reduced);
  for (const auto& row : table.rows()) {
    std::vector<VectorEntry> entries;
    for (const auto& pe : row) {
      VectorEntry e{pe.partition(), 0.0, EntryMethod::PureExact, false};
      if (pure) {
        e.value = ent_sqrt(pe(psi->amplitudes()));
      } else if (diagonal) {
        e.method = EntryMethod::DiagonalShortcut;
      } else {
        CreOptions o = options;
        o.seed = entry_seed(options.seed, labels, pe.partition());
        const auto r = cre(partition_concurrence_measure(reduced.dims(), labels, pe.partition()), reduced, o);
        e.value = r.value;
        e.method = EntryMethod::Cre;
        e.low_confidence = r.low_confidence;
      }
      entries.push_back(std::move(e));
    }
    out.rows.push_back(std::move(entries));
  }
  return out;
}

inline EntConcurrenceVector ent_concurrence_vector(const DensityMatrix& rho, const CreOptions& options = {}) {
  const auto all = all_modes(rho.num_modes());
  return ent_concurrence_vector(rho, all, options);
}

/// k-ent-concurrence: CRE of the DM_k ent (exact for pure input).
inline double k_ent_concurrence(const DensityMatrix& rho, int k, const CreOptions& options = {}) {
  detail::check_level(k, rho.num_modes());
  if (is_pure(rho)) return dm_k_ent(as_pure(rho), k);
  return hatted_k_ent(rho, Family::DM, k, options).value;
}

/// Ent-concurrence: CRE of the FDM ent (exact for pure input).
inline double ent_concurrence(const DensityMatrix& rho, const CreOptions& options = {}) {
  if (is_pure(rho)) return aggregate_ent(as_pure(rho), Family::DM).value;
  return hatted_aggregate(rho, Family::DM, options).value;
}

inline EntConcurrenceArray ent_concurrence_array(const DensityMatrix& rho, const CreOptions& options = {}) {
  const int n = static_cast<int>(rho.num_modes());
  if (n < 2) throw InvalidArgument("ent_concurrence_array: needs at least two modes");
  EntConcurrenceArray out{static_cast<std::size_t>(n), {}};
  for (int k = 2; k <= n; ++k) {
    std::vector<EntConcurrenceVector> row;
    for (const auto& c : combinations(n, k)) row.push_back(ent_concurrence_vector(rho, c, options));
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Sum of every entry of the ent-concurrence array; with a reference set the
/// value is divided by the largest such sum over the set.
inline double absolute_ent_concurrence(const DensityMatrix& rho, const CreOptions& options = {},
                                       std::optional<std::span<const DensityMatrix>> reference_set = {}) {
  const double value = ent_concurrence_array(rho, options).sum();
  if (!reference_set) return value;
  if (reference_set->empty()) throw InvalidArgument("absolute_ent_concurrence: empty reference set");
  double best = 0.0;
  for (const auto& s : *reference_set) best = std::max(best, ent_concurrence_array(s, options).sum());
  if (!(best > 0.0)) throw InvalidArgument("absolute_ent_concurrence: reference set maximum is zero");
  return value / best;
}

inline double rms(std::span<const double> x) {
  if (x.empty()) throw InvalidArgument("rms: empty input");
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s / static_cast<double>(x.size()));
}

struct RmsRow {
  ModePartition partition;
  double value = 0.0;
  std::vector<ModePartition> matched;
  double rms = 0.0;
  double residual = 0.0;
};

/// Compares every entry with T >= 3 blocks against the rms of the
/// bipartitions that split off each of its blocks.
inline std::vector<RmsRow> rms_diagnostic(const EntConcurrenceVector& v) {
  std::vector<RmsRow> out;
  const auto& all = v.reduction;
  for (std::size_t t = 1; t < v.rows.size(); ++t) {
    for (const auto& e : v.rows[t]) {
      RmsRow row{e.partition, e.value, {}, 0.0, 0.0};
      std::vector<double> xs;
      for (const auto& block : e.partition.blocks()) {
        std::vector<int> rest;
        for (int m : all)
          if (std::find(block.begin(), block.end(), m) == block.end()) rest.push_back(m);
        ModePartition bi({block, rest});
        xs.push_back(v.at(bi).value);
        row.matched.push_back(std::move(bi));
      }
      row.rms = rms(xs);
      row.residual = std::abs(row.value - row.rms);
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace entcon
