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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entcon/partition.hpp"
#include "entcon/qstate.hpp"

namespace entcon {

/// Minimum single-mode purity reachable by L equally weighted levels spread
/// over a mode with n_m levels.
inline double p_mp(int levels, int n_m) {
  if (levels < 1 || n_m < 2) throw InvalidArgument("p_mp: need L >= 1 and n_m >= 2");
  const int q = levels / n_m;
  const int r = levels % n_m;
  const double l = levels;
  return r * std::pow((1.0 + q) / l, 2) + (n_m - r) * std::pow(q / l, 2);
}

/// Normalization M(L) of the ent for level counts `dims`.
inline double norm_M(int levels, const ModeDims& dims) {
  double s = 0.0;
  for (int n : dims.values()) s += (n * p_mp(levels, n) - 1.0) / (n - 1.0);
  return 1.0 - s / static_cast<double>(dims.size());
}

/// Normalization data for the ent of a system with level counts `dims`.
struct EntParams {
  ModeDims dims;
  double m_star = 1.0;
  std::vector<int> l_star;
};

/// Every L in 2..n/n_max that maximizes M(L), together with that maximum.
inline EntParams l_star(const ModeDims& dims) {
  if (dims.size() < 2) throw InvalidArgument("l_star: the ent needs at least two modes");
  const int upper = static_cast<int>(dims.total() / dims.max());
  EntParams p{dims, -std::numeric_limits<double>::infinity(), {}};
  for (int L = 2; L <= upper; ++L) {
    const double m = norm_M(L, dims);
    if (m > p.m_star + 1e-13) {
      p.m_star = m;
      p.l_star = {L};
    } else if (std::abs(m - p.m_star) <= 1e-13) {
      p.l_star.push_back(L);
    }
  }
  return p;
}

/// The ent from the single-mode purities of a pure state, clamped to [0, 1].
inline double ent_from_purities(const EntParams& params, std::span<const double> purities) {
  const auto& d = params.dims.values();
  double s = 0.0;
  for (std::size_t m = 0; m < d.size(); ++m) s += (d[m] * purities[m] - 1.0) / (d[m] - 1.0);
  const double v = (1.0 - s / static_cast<double>(d.size())) / params.m_star;
  return std::clamp(v, 0.0, 1.0);
}

/// sqrt for ent-concurrences: arguments below 1e-12 are roundoff and give 0;
/// anything below -1e-9 is a bug upstream.
inline double ent_sqrt(double x) {
  if (x < -1e-9) throw NumericalError("ent_sqrt: negative argument " + std::to_string(x));
  return x < 1e-12 ? 0.0 : std::sqrt(x);
}

/// Purity of the reduction of a pure state onto a fixed group of modes,
/// via the Gram matrix of the reshaped amplitude matrix.
class BlockPurity {
 public:
  BlockPurity(const ModeDims& dims, std::span<const int> positions)
      : block_(detail::subsystem_offsets(dims, positions)),
        rest_(detail::subsystem_offsets(dims, detail::complement(positions, dims.size()))) {}

  double operator()(const Vector& amps) const {
    const Index rows = static_cast<Index>(block_.size());
    const Index cols = static_cast<Index>(rest_.size());
    Matrix psi(rows, cols);
    for (Index a = 0; a < rows; ++a)
      for (Index c = 0; c < cols; ++c) psi(a, c) = amps(block_[a] + rest_[c]);
    const double norm2 = amps.squaredNorm();
    Matrix gram = rows <= cols ? Matrix(psi * psi.adjoint()) : Matrix(psi.adjoint() * psi);
    return std::clamp(gram.cwiseAbs2().sum() / (norm2 * norm2), 0.0, 1.0);
  }

 private:
  std::vector<Index> block_;
  std::vector<Index> rest_;
};

/// Evaluation plan for one partitional ent: the ent of a pure state after its
/// modes are regrouped into the partition's blocks, normalized for the block
/// dimensions. `labels[i]` is the mode label carried by position i of the
/// state.
class PartitionalEnt {
 public:
  PartitionalEnt(const ModeDims& dims, std::span<const int> labels, ModePartition partition)
      : partition_(std::move(partition)), params_(l_star(block_dims(dims, labels, partition_))) {
    if (partition_.modes().size() != labels.size())
      throw InvalidArgument("PartitionalEnt: partition does not cover the state's modes");
    for (const auto& block : partition_.blocks()) {
      std::vector<int> positions;
      for (int m : block) {
        auto it = std::find(labels.begin(), labels.end(), m);
        if (it == labels.end()) throw InvalidArgument("PartitionalEnt: unknown mode " + std::to_string(m));
        positions.push_back(static_cast<int>(it - labels.begin()) + 1);
      }
      blocks_.emplace_back(dims, positions);
    }
  }

  double operator()(const Vector& amps) const {
    std::vector<double> purities;
    purities.reserve(blocks_.size());
    for (const auto& b : blocks_) purities.push_back(b(amps));
    return ent_from_purities(params_, purities);
  }

  const ModePartition& partition() const noexcept { return partition_; }
  const EntParams& params() const noexcept { return params_; }

 private:
  ModePartition partition_;
  EntParams params_;
  std::vector<BlockPurity> blocks_;
};

/// Every canonical T-partition (T = 2..S) of a labelled S-mode system, with
/// evaluation plans. rows()[T-2] holds the T-partitions.
class PartitionTable {
 public:
  PartitionTable(const ModeDims& dims, std::vector<int> labels) : dims_(dims), labels_(std::move(labels)) {
    if (labels_.size() != dims.size()) throw InvalidArgument("PartitionTable: one label per mode required");
    if (labels_.size() < 2) throw InvalidArgument("PartitionTable: at least two modes required");
    for (int t = 2; t <= static_cast<int>(labels_.size()); ++t) {
      std::vector<PartitionalEnt> row;
      for (auto& p : enumerate_partitions(labels_, t)) row.emplace_back(dims_, labels_, std::move(p));
      rows_.push_back(std::move(row));
    }
  }

  explicit PartitionTable(const ModeDims& dims) : PartitionTable(dims, all_modes(dims.size())) {}

  const ModeDims& dims() const noexcept { return dims_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<PartitionalEnt>>& rows() const noexcept { return rows_; }
  const std::vector<PartitionalEnt>& row(int t) const { return rows_.at(t - 2); }

  /// Partitional ents of a pure state, laid out like rows().
  std::vector<std::vector<double>> evaluate(const Vector& amps) const {
    std::vector<std::vector<double>> out;
    for (const auto& row : rows_) {
      std::vector<double> values;
      for (const auto& pe : row) values.push_back(pe(amps));
      out.push_back(std::move(values));
    }
    return out;
  }

  std::vector<double> evaluate_row(const Vector& amps, int t) const {
    std::vector<double> values;
    for (const auto& pe : row(t)) values.push_back(pe(amps));
    return values;
  }

 private:
  ModeDims dims_;
  std::vector<int> labels_;
  std::vector<std::vector<PartitionalEnt>> rows_;
};

/// How partitional values at one level k combine: GM takes the minimum ent,
/// SM sums ents, DM sums ent-concurrences (square roots).
enum class Family { GM, SM, DM };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::GM: return "GM";
    case Family::SM: return "SM";
    case Family::DM: return "DM";
  }
  return "?";
}

/// Per-partition value reported for a family: the ent, or its square root
/// for DM.
inline double family_term(Family f, double ent_value) {
  return f == Family::DM ? ent_sqrt(ent_value) : ent_value;
}

/// Combines the k-partitional ents of one level.
inline double combine_level(Family f, std::span<const double> ents) {
  if (ents.empty()) throw InvalidArgument("combine_level: no partitions");
  double out = f == Family::GM ? std::numeric_limits<double>::infinity() : 0.0;
  for (double e : ents) {
    if (f == Family::GM)
      out = std::min(out, e);
    else
      out += family_term(f, e);
  }
  return out;
}

namespace detail {
inline void check_level(int k, std::size_t modes) {
  if (k < 2 || static_cast<std::size_t>(k) > modes)
    throw InvalidArgument("k must satisfy 2 <= k <= N (got k=" + std::to_string(k) + ")");
}
}  // namespace detail

/// The ent of a pure state.
inline double ent(const PureState& psi) {
  if (psi.num_modes() < 2) throw InvalidArgument("ent: needs at least two modes");
  PartitionTable table(psi.dims());
  return table.rows().back().front()(psi.amplitudes());
}

/// The ent of a density matrix that must be pure; mixed input needs a
/// convex-roof extension instead.
inline double ent(const DensityMatrix& rho) { return ent(as_pure(rho)); }

/// Partitional ent of a pure state over a partition of all of its modes.
inline double partitional_ent(const PureState& psi, const ModePartition& partition) {
  const PartitionalEnt pe(psi.dims(), all_modes(psi.num_modes()), partition);
  return pe(psi.amplitudes());
}

/// Partitional ent of the `reduction` of rho; the reduced state must be pure.
inline double partitional_ent(const DensityMatrix& rho, std::span<const int> reduction,
                              const ModePartition& partition) {
  const auto reduced = repartition(rho, reduction, partition);
  if (!is_pure(reduced))
    throw InvalidState("partitional_ent: reduced state is mixed; use a convex-roof extension");
  return ent(as_pure(reduced));
}

inline double partitional_ent_concurrence(const PureState& psi, const ModePartition& partition) {
  return ent_sqrt(partitional_ent(psi, partition));
}

/// Unnormalized k-level family value (GM_k, SM_k or DM_k ent).
inline double k_ent(const PureState& psi, Family f, int k) {
  detail::check_level(k, psi.num_modes());
  PartitionTable table(psi.dims());
  const auto values = table.evaluate_row(psi.amplitudes(), k);
  return combine_level(f, values);
}

inline double gm_k_ent(const PureState& psi, int k) { return k_ent(psi, Family::GM, k); }
inline double sm_k_ent(const PureState& psi, int k) { return k_ent(psi, Family::SM, k); }
inline double dm_k_ent(const PureState& psi, int k) { return k_ent(psi, Family::DM, k); }

namespace detail {
template <typename Fn>
double reference_max(std::span<const PureState> reference_set, Fn&& fn) {
  if (reference_set.empty()) throw InvalidArgument("normalization: empty reference set");
  double best = 0.0;
  for (const auto& s : reference_set) best = std::max(best, fn(s));
  if (!(best > 0.0)) throw InvalidArgument("normalization: reference set maximum is zero");
  return best;
}
}  // namespace detail

/// SM_k / DM_k normalized by the maximum over a caller-supplied state list.
inline double sm_k_ent(const PureState& psi, int k, std::span<const PureState> reference_set) {
  return sm_k_ent(psi, k) / detail::reference_max(reference_set, [k](const PureState& s) { return sm_k_ent(s, k); });
}
inline double dm_k_ent(const PureState& psi, int k, std::span<const PureState> reference_set) {
  return dm_k_ent(psi, k) / detail::reference_max(reference_set, [k](const PureState& s) { return dm_k_ent(s, k); });
}

struct PartitionValue {
  ModePartition partition;
  double value;
};

/// A measure value with the per-partition values it was built from. For
/// FGM/FSM the per-partition values are ents; for FDM they are
/// ent-concurrences.
struct MeasureReport {
  std::string measure;
  Family family = Family::DM;
  int k = 0;  // 0 for the full aggregate over k = 2..N
  double value = 0.0;
  double normalization = 1.0;
  std::vector<PartitionValue> per_partition;

  /// Rebuilds the value from per_partition with the family's rule.
  double recompute() const {
    std::vector<std::vector<double>> by_level;
    for (const auto& pv : per_partition) {
      const std::size_t t = pv.partition.size();
      if (by_level.size() < t + 1) by_level.resize(t + 1);
      by_level[t].push_back(pv.value);
    }
    double total = 0.0;
    for (const auto& level : by_level) {
      if (level.empty()) continue;
      if (family == Family::GM)
        total += *std::min_element(level.begin(), level.end());
      else
        for (double v : level) total += v;
    }
    return total / normalization;
  }
};

inline std::string aggregate_name(Family f) { return "F" + family_name(f); }

/// FGM / FSM / FDM ent (sum of the family's k-ents over k = 2..N),
/// unnormalized.
inline MeasureReport aggregate_ent(const PureState& psi, Family f) {
  PartitionTable table(psi.dims());
  MeasureReport report{aggregate_name(f), f, 0, 0.0, 1.0, {}};
  const auto ents = table.evaluate(psi.amplitudes());
  for (std::size_t r = 0; r < ents.size(); ++r) {
    report.value += combine_level(f, ents[r]);
    for (std::size_t h = 0; h < ents[r].size(); ++h)
      report.per_partition.push_back({table.rows()[r][h].partition(), family_term(f, ents[r][h])});
  }
  return report;
}

/// Aggregate normalized by its maximum over `reference_set`.
inline MeasureReport aggregate_ent(const PureState& psi, Family f, std::span<const PureState> reference_set) {
  auto report = aggregate_ent(psi, f);
  report.normalization =
      detail::reference_max(reference_set, [f](const PureState& s) { return aggregate_ent(s, f).value; });
  report.value /= report.normalization;
  return report;
}

}  // namespace entcon
