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
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "entcon/entcore.hpp"
#include "entcon/parallel.hpp"
#include "entcon/qstate.hpp"
#include "entcon/rng.hpp"

namespace entcon {

/// A pure-state measure evaluated on a normalized amplitude vector.
using PureMeasure = std::function<double(const Vector&)>;

/// {p_j, psi_j} with rho = sum_j p_j |psi_j><psi_j|.
struct Decomposition {
  enum class Source { Eigen, Sampled, Polished };

  ModeDims dims = ModeDims::qubits(1);
  std::vector<double> probabilities;
  std::vector<Vector> states;  // normalized
  Source source = Source::Eigen;
  std::uint64_t seed = 0;
  Index size = 0;  // rows of the mixing isometry

  std::size_t count() const noexcept { return states.size(); }

  Matrix reconstruct() const {
    const Index n = dims.total();
    Matrix out = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < states.size(); ++j) out += probabilities[j] * states[j] * states[j].adjoint();
    return out;
  }

  double average(const PureMeasure& measure) const {
    double s = 0.0;
    for (std::size_t j = 0; j < states.size(); ++j) s += probabilities[j] * measure(states[j]);
    return s;
  }
};

inline std::string source_name(Decomposition::Source s) {
  switch (s) {
    case Decomposition::Source::Eigen: return "eigen";
    case Decomposition::Source::Sampled: return "sampled";
    case Decomposition::Source::Polished: return "polished";
  }
  return "?";
}

namespace detail {
inline Matrix orthonormalize(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
  const Matrix r = qr.matrixQR().topRows(g.cols()).triangularView<Eigen::Upper>();
  for (Index j = 0; j < g.cols(); ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}
}  // namespace detail

/// Haar-random D x r isometry: QR of a complex Ginibre matrix with the phases
/// of R's diagonal moved into Q.
inline Matrix haar_isometry(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im);
    }
  return detail::orthonormalize(g);
}


/// Default isometry sizes for rank r: r, r+1, ..., min(r^2, r+4).
inline std::vector<int> default_schedule(Index rank) {
  std::vector<int> s;
  const Index hi = std::min(rank * rank, rank + 4);
  for (Index d = rank; d <= hi; ++d) s.push_back(static_cast<int>(d));
  return s;
}

/// Indexed stream of decompositions of a fixed mixed state. Sample 0 is the
/// eigendecomposition; sample i >= 1 mixes the eigen-ensemble with a Haar
/// isometry whose size cycles through the schedule, drawn from a generator
/// seeded by derive_seed(seed, i), so any sample can be produced independently.
class DecompositionSampler {
 public:
  DecompositionSampler(const DensityMatrix& rho, std::uint64_t seed, std::vector<int> schedule = {})
      : dims_(rho.dims()), seed_(seed), spectrum_(spectral(rho)) {
    const Index r = spectrum_.rank;
    if (r < 1) throw InvalidState("DecompositionSampler: zero state");
    schedule_ = schedule.empty() ? default_schedule(r) : std::move(schedule);
    for (int d : schedule_)
      if (d < r)
        throw InvalidArgument("DecompositionSampler: schedule entry " + std::to_string(d) + " is below rank " +
                              std::to_string(r));
    scaled_.resize(dims_.total(), r);
    for (Index i = 0; i < r; ++i) scaled_.col(i) = std::sqrt(spectrum_.eigenvalues[i]) * spectrum_.eigenvectors.col(i);
  }

  Index rank() const noexcept { return spectrum_.rank; }
  const std::vector<int>& schedule() const noexcept { return schedule_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// The mixing isometry of sample `index`.
  Matrix isometry(std::size_t index) const {
    if (index == 0) return Matrix::Identity(rank(), rank());
    Rng rng(derive_seed(seed_, index));
    const Index d = schedule_[(index - 1) % schedule_.size()];
    return haar_isometry(d, rank(), rng);
  }

  Decomposition sample(std::size_t index) const {
    auto dec = from_isometry(isometry(index));
    dec.source = index == 0 ? Decomposition::Source::Eigen : Decomposition::Source::Sampled;
    dec.seed = index == 0 ? seed_ : derive_seed(seed_, index);
    return dec;
  }

  /// psi~_j = sum_i conj(V_ji) sqrt(lambda_i) e_i, p_j = <psi~_j|psi~_j>.
  /// Members with negligible weight are dropped.
  Decomposition from_isometry(const Matrix& v) const {
    if (v.cols() != rank()) throw InvalidArgument("DecompositionSampler: isometry has the wrong column count");
    Decomposition dec;
    dec.dims = dims_;
    dec.size = v.rows();
    for (Index j = 0; j < v.rows(); ++j) {
      Vector psi = scaled_ * v.row(j).adjoint();
      const double p = psi.squaredNorm();
      if (p < 1e-15) continue;
      dec.probabilities.push_back(p);
      dec.states.push_back(psi / std::sqrt(p));
    }
    return dec;
  }

 private:
  ModeDims dims_;
  std::uint64_t seed_;
  Spectrum spectrum_;
  std::vector<int> schedule_;
  Matrix scaled_;
};

/// `count` decompositions (the eigendecomposition first).
inline std::vector<Decomposition> sample_decompositions(const DensityMatrix& rho, std::size_t count,
                                                        std::vector<int> schedule, std::uint64_t seed) {
  DecompositionSampler sampler(rho, seed, std::move(schedule));
  std::vector<Decomposition> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.sample(i));
  return out;
}

struct CreOptions {
  std::size_t budget = 900;
  std::uint64_t seed = 0;
  std::vector<int> schedule;  // empty = default_schedule(rank)
  bool polish = false;
  int polish_steps = 200;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool history = false;
};

struct CreResult {
  double value = 0.0;
  Decomposition best;
  std::size_t best_index = 0;
  std::size_t samples_used = 0;
  Index rank = 0;
  bool low_confidence = false;  // rank > 4
  bool polished = false;
  std::vector<double> history;  // running minimum after each sample
};

namespace detail {

/// Random-perturbation local search around the best isometry; a step is kept
/// only if it lowers the average.
inline void polish(const DecompositionSampler& sampler, const PureMeasure& measure, const CreOptions& options,
                   CreResult& result) {
  Matrix v = sampler.isometry(result.best_index);
  Rng rng(derive_seed(options.seed, 0xfeedULL + options.budget));
  double sigma = 0.1;
  bool improved = false;
  for (int step = 0; step < options.polish_steps && result.value > 0.0; ++step) {
    Matrix g(v.rows(), v.cols());
    for (Index j = 0; j < v.cols(); ++j)
      for (Index i = 0; i < v.rows(); ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        g(i, j) = Complex(re, im);
      }
    const Matrix trial = orthonormalize(v + sigma * g);
    auto dec = sampler.from_isometry(trial);
    const double value = dec.average(measure);
    if (value < result.value) {
      v = trial;
      result.value = value;
      result.best = std::move(dec);
      improved = true;
      sigma *= 1.5;
    } else {
      sigma = std::max(sigma * 0.85, 1e-9);
    }
  }
  if (improved) {
    result.best.source = Decomposition::Source::Polished;
    result.polished = true;
  }
}

}  // namespace detail

/// Upper bound on the convex-roof extension min_{p_j, psi_j} sum_j p_j m(psi_j)
/// from `budget` sampled decompositions. Deterministic in (rho, seed, budget,
/// schedule); the thread count only changes wall-clock time.
inline CreResult cre(const PureMeasure& measure, const DensityMatrix& rho, const CreOptions& options = {}) {
  if (options.budget < 1) throw InvalidArgument("cre: budget must be at least 1");
  DecompositionSampler sampler(rho, options.seed, options.schedule);
  CreResult result;
  result.rank = sampler.rank();
  result.low_confidence = result.rank > 4;
  const std::size_t count = result.rank == 1 ? 1 : options.budget;
  std::vector<double> values(count);
  parallel_for(count, options.threads, [&](std::size_t i) { values[i] = sampler.sample(i).average(measure); });
  result.samples_used = count;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    if (values[i] < best) {
      best = values[i];
      result.best_index = i;
    }
    if (options.history) result.history.push_back(best);
  }
  result.value = best;
  result.best = sampler.sample(result.best_index);
  if (options.polish && result.rank > 1) detail::polish(sampler, measure, options, result);
  result.value = std::max(result.value, 0.0);
  return result;
}

/// Measure on normalized amplitudes of a state with the given dims, built from
/// a partition table: the family aggregate (k = 0) or the level-k value.
inline PureMeasure family_measure(const ModeDims& dims, Family f, int k = 0) {
  auto table = std::make_shared<PartitionTable>(dims);
  if (k != 0) detail::check_level(k, dims.size());
  return [table, f, k](const Vector& amps) {
    if (k != 0) return combine_level(f, table->evaluate_row(amps, k));
    double s = 0.0;
    for (const auto& row : table->evaluate(amps)) s += combine_level(f, row);
    return s;
  };
}

/// Partitional ent-concurrence of one partition of a state whose modes carry
/// `labels`.
inline PureMeasure partition_concurrence_measure(const ModeDims& dims, std::span<const int> labels,
                                                 const ModePartition& partition) {
  auto pe = std::make_shared<PartitionalEnt>(dims, labels, partition);
  return [pe](const Vector& amps) { return ent_sqrt((*pe)(amps)); };
}

inline PureMeasure partition_ent_measure(const ModeDims& dims, std::span<const int> labels,
                                         const ModePartition& partition) {
  auto pe = std::make_shared<PartitionalEnt>(dims, labels, partition);
  return [pe](const Vector& amps) { return (*pe)(amps); };
}

/// Hatted FGM / FSM / FDM (unnormalized). The FDM case is the
/// ent-concurrence of formation.
inline CreResult hatted_aggregate(const DensityMatrix& rho, Family f, const CreOptions& options = {}) {
  return cre(family_measure(rho.dims(), f), rho, options);
}

/// Hatted GM_k / SM_k / DM_k: CRE of the level-k family value.
inline CreResult hatted_k_ent(const DensityMatrix& rho, Family f, int k, const CreOptions& options = {}) {
  return cre(family_measure(rho.dims(), f, k), rho, options);
}

/// Per-entry seed for the CRE of one partition of one reduction.
inline std::uint64_t entry_seed(std::uint64_t seed, std::span<const int> reduction, const ModePartition& partition) {
  std::string key;
  for (std::size_t i = 0; i < reduction.size(); ++i) key += (i ? "," : "") + std::to_string(reduction[i]);
  key += "/" + partition.str();
  return seed ^ stable_hash(key);
}

struct StrictResult {
  double value = 0.0;
  ModePartition argmin;
  std::vector<PartitionValue> per_partition;  // CRE of each partitional ent
};

/// SGM_k: the smallest per-partition CRE of the k-partitional ents.
inline StrictResult sgm_k(const DensityMatrix& rho, int k, const CreOptions& options = {}) {
  detail::check_level(k, rho.num_modes());
  const auto labels = all_modes(rho.num_modes());
  const auto partitions = enumerate_partitions(labels, k);
  StrictResult out{std::numeric_limits<double>::infinity(), partitions.front(), {}};
  for (const auto& p : partitions) {
    CreOptions o = options;
    o.seed = entry_seed(options.seed, labels, p);
    const double v = cre(partition_ent_measure(rho.dims(), labels, p), rho, o).value;
    out.per_partition.push_back({p, v});
    if (v < out.value) {
      out.value = v;
      out.argmin = p;
    }
  }
  return out;
}

/// SFGM: sum of SGM_k over k = 2..N (unnormalized).
inline double sfgm(const DensityMatrix& rho, const CreOptions& options = {}) {
  double s = 0.0;
  for (int k = 2; k <= static_cast<int>(rho.num_modes()); ++k) s += sgm_k(rho, k, options).value;
  return s;
}

}  // namespace entcon
