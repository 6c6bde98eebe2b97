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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "entcon/errors.hpp"
#include "entcon/rng.hpp"

namespace entcon {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kNorm = 1e-12;
/// Eigenvalues in [kEigenFloor, 0) are roundoff and clamp to zero.
inline constexpr double kEigenFloor = -1e-10;
inline constexpr double kRank = 1e-10;
/// A density matrix with purity above 1 - kPurity is treated as pure.
inline constexpr double kPurity = 1e-10;
}  // namespace tolerance

/// Level counts (n_1, ..., n_N) of an N-mode system. Mode 1 is the slowest
/// varying digit of a level index.
class ModeDims {
 public:
  explicit ModeDims(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InvalidArgument("ModeDims: at least one mode is required");
    total_ = 1;
    for (int d : dims_) {
      if (d < 2) throw InvalidArgument("ModeDims: every mode needs at least 2 levels");
      total_ *= d;
    }
  }
  ModeDims(std::initializer_list<int> dims) : ModeDims(std::vector<int>(dims)) {}

  static ModeDims qubits(int count) { return ModeDims(std::vector<int>(count, 2)); }

  std::size_t size() const noexcept { return dims_.size(); }
  int operator[](std::size_t pos) const { return dims_.at(pos); }
  Index total() const noexcept { return total_; }
  int max() const { return *std::max_element(dims_.begin(), dims_.end()); }
  const std::vector<int>& values() const noexcept { return dims_; }

  /// Big-endian strides: stride of the last mode is 1.
  std::vector<Index> strides() const {
    std::vector<Index> s(dims_.size(), 1);
    for (std::size_t i = dims_.size(); i-- > 1;) s[i - 1] = s[i] * dims_[i];
    return s;
  }

  /// Zero-based digits of a zero-based level.
  std::vector<int> digits(Index level) const {
    std::vector<int> out(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      out[i] = static_cast<int>(level % dims_[i]);
      level /= dims_[i];
    }
    return out;
  }

  Index level(std::span<const int> digits) const {
    Index out = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) out = out * dims_[i] + digits[i];
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "x" : "") << dims_[i];
    return os.str();
  }

  friend bool operator==(const ModeDims&, const ModeDims&) = default;

 private:
  std::vector<int> dims_;
  Index total_ = 1;
};

/// Mode labels 1..count.
inline std::vector<int> all_modes(std::size_t count) {
  std::vector<int> m(count);
  std::iota(m.begin(), m.end(), 1);
  return m;
}

namespace detail {

/// Checks that `modes` holds distinct labels in 1..count.
inline void check_mode_labels(std::span<const int> modes, std::size_t count, const char* what) {
  if (modes.empty()) throw InvalidArgument(std::string(what) + ": empty mode list");
  std::vector<bool> seen(count + 1, false);
  for (int m : modes) {
    if (m < 1 || static_cast<std::size_t>(m) > count)
      throw InvalidArgument(std::string(what) + ": mode label " + std::to_string(m) + " out of range");
    if (seen[m]) throw InvalidArgument(std::string(what) + ": duplicate mode label " + std::to_string(m));
    seen[m] = true;
  }
}

/// For the subsystem formed by `modes` (1-based, in the given order), the
/// offset each of its levels contributes to a full-system level index.
inline std::vector<Index> subsystem_offsets(const ModeDims& dims, std::span<const int> modes) {
  auto strides = dims.strides();
  std::vector<Index> offsets{0};
  for (int m : modes) {
    const int n = dims[m - 1];
    const Index stride = strides[m - 1];
    std::vector<Index> next;
    next.reserve(offsets.size() * n);
    for (Index base : offsets)
      for (int d = 0; d < n; ++d) next.push_back(base + d * stride);
    offsets = std::move(next);
  }
  return offsets;
}

inline std::vector<int> complement(std::span<const int> modes, std::size_t count) {
  std::vector<bool> in(count + 1, false);
  for (int m : modes) in[m] = true;
  std::vector<int> out;
  for (std::size_t m = 1; m <= count; ++m)
    if (!in[m]) out.push_back(static_cast<int>(m));
  return out;
}

inline ModeDims sub_dims(const ModeDims& dims, std::span<const int> modes) {
  std::vector<int> out;
  for (int m : modes) out.push_back(dims[m - 1]);
  return ModeDims(std::move(out));
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace detail

class DensityMatrix;

/// Normalized state vector over a ModeDims system.
class PureState {
 public:
  PureState(ModeDims dims, Vector amplitudes) : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    if (amps_.size() != dims_.total())
      throw InvalidState("PureState: amplitude count " + std::to_string(amps_.size()) +
                         " does not match dimension " + std::to_string(dims_.total()));
    if (std::abs(amps_.norm() - 1.0) > tolerance::kNorm)
      throw InvalidState("PureState: amplitudes are not normalized");
  }

  /// Rescales `v` to unit norm before construction.
  static PureState normalized(ModeDims dims, Vector v) {
    const double n = v.norm();
    if (!(n > 0.0)) throw InvalidState("PureState: zero vector");
    v /= n;
    return PureState(std::move(dims), std::move(v));
  }

  /// Equal-weight superposition of the given one-based levels.
  static PureState uniform_over(ModeDims dims, std::span<const int> levels) {
    Vector v = Vector::Zero(dims.total());
    for (int l : levels) {
      if (l < 1 || l > dims.total()) throw InvalidArgument("PureState: level out of range");
      v(l - 1) += 1.0;
    }
    return normalized(std::move(dims), std::move(v));
  }

  const ModeDims& dims() const noexcept { return dims_; }
  const Vector& amplitudes() const noexcept { return amps_; }
  std::size_t num_modes() const noexcept { return dims_.size(); }

  DensityMatrix density() const;

 private:
  ModeDims dims_;
  Vector amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over a ModeDims system.
class DensityMatrix {
 public:
  /// Validates every invariant; throws InvalidState on violation.
  DensityMatrix(ModeDims dims, Matrix data) : dims_(std::move(dims)), data_(std::move(data)) {
    validate();
  }

  /// Trusted construction for results of invariant-preserving operations.
  /// Only symmetrizes away roundoff.
  static DensityMatrix trusted(ModeDims dims, Matrix data) {
    Matrix h = 0.5 * (data + data.adjoint());
    return DensityMatrix(Trusted{}, std::move(dims), std::move(h));
  }

  const ModeDims& dims() const noexcept { return dims_; }
  const Matrix& matrix() const noexcept { return data_; }
  Index dim() const noexcept { return data_.rows(); }
  std::size_t num_modes() const noexcept { return dims_.size(); }

 private:
  struct Trusted {};
  DensityMatrix(Trusted, ModeDims dims, Matrix data) : dims_(std::move(dims)), data_(std::move(data)) {}

  void validate() const {
    const Index n = dims_.total();
    if (data_.rows() != n || data_.cols() != n)
      throw InvalidState("DensityMatrix: matrix is " + std::to_string(data_.rows()) + "x" +
                         std::to_string(data_.cols()) + " but dims " + dims_.str() + " need " +
                         std::to_string(n) + "x" + std::to_string(n));
    if (!data_.allFinite()) throw InvalidState("DensityMatrix: non-finite entries");
    if (detail::max_abs(data_ - data_.adjoint()) > tolerance::kHermitian)
      throw InvalidState("DensityMatrix: matrix is not Hermitian");
    if (std::abs(data_.trace() - Complex(1.0, 0.0)) > tolerance::kTrace)
      throw InvalidState("DensityMatrix: trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(data_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("DensityMatrix: eigensolver failed");
    if (es.eigenvalues().minCoeff() < tolerance::kEigenFloor)
      throw InvalidState("DensityMatrix: matrix has a negative eigenvalue");
  }

  ModeDims dims_;
  Matrix data_;
};

inline DensityMatrix PureState::density() const {
  return DensityMatrix::trusted(dims_, amps_ * amps_.adjoint());
}

/// Kronecker product; the first factor's index varies slowest.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ModeDims concat(const ModeDims& a, const ModeDims& b) {
  std::vector<int> d = a.values();
  d.insert(d.end(), b.values().begin(), b.values().end());
  return ModeDims(std::move(d));
}

inline DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::trusted(concat(a.dims(), b.dims()), kron(a.matrix(), b.matrix()));
}

inline PureState kron(const PureState& a, const PureState& b) {
  Vector v(a.amplitudes().size() * b.amplitudes().size());
  for (Index i = 0; i < a.amplitudes().size(); ++i)
    v.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
  return PureState::normalized(concat(a.dims(), b.dims()), std::move(v));
}

/// Reduced state on `keep` (one-based labels). The output's modes follow the
/// order of `keep`, so this also reorders.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const std::size_t count = rho.num_modes();
  detail::check_mode_labels(keep, count, "partial_trace");
  const auto traced = detail::complement(keep, count);
  const auto kept_off = detail::subsystem_offsets(rho.dims(), keep);
  const auto traced_off = detail::subsystem_offsets(rho.dims(), traced);
  const Index nk = static_cast<Index>(kept_off.size());
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(nk, nk);
  for (Index a = 0; a < nk; ++a)
    for (Index b = 0; b < nk; ++b) {
      Complex s{0.0, 0.0};
      for (Index t : traced_off) s += m(kept_off[a] + t, kept_off[b] + t);
      out(a, b) = s;
    }
  return DensityMatrix::trusted(detail::sub_dims(rho.dims(), keep), std::move(out));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

namespace detail {
inline void check_permutation(std::span<const int> order, std::size_t count) {
  if (order.size() != count) throw InvalidArgument("permute_modes: order must list every mode once");
  check_mode_labels(order, count, "permute_modes");
}
}  // namespace detail

/// Relabels modes: new mode i is old mode order[i] (one-based).
inline DensityMatrix permute_modes(const DensityMatrix& rho, std::span<const int> order) {
  detail::check_permutation(order, rho.num_modes());
  const auto off = detail::subsystem_offsets(rho.dims(), order);
  const Index n = rho.dim();
  Matrix out(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) out(a, b) = rho.matrix()(off[a], off[b]);
  return DensityMatrix::trusted(detail::sub_dims(rho.dims(), order), std::move(out));
}

inline PureState permute_modes(const PureState& psi, std::span<const int> order) {
  detail::check_permutation(order, psi.num_modes());
  const auto off = detail::subsystem_offsets(psi.dims(), order);
  Vector v(psi.amplitudes().size());
  for (Index a = 0; a < v.size(); ++a) v(a) = psi.amplitudes()(off[a]);
  return PureState(detail::sub_dims(psi.dims(), order), std::move(v));
}

/// tr(rho^2) for a Hermitian matrix, clamped to [0, 1].
inline double purity(const Matrix& m) {
  return std::clamp(m.cwiseAbs2().sum(), 0.0, 1.0);
}

inline double purity(const DensityMatrix& rho) { return purity(rho.matrix()); }

inline bool is_pure(const DensityMatrix& rho, double tol = tolerance::kPurity) {
  return purity(rho) > 1.0 - tol;
}

inline bool is_diagonal(const Matrix& m, double tol = 1e-14) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (i != j && std::abs(m(i, j)) > tol) return false;
  return true;
}

/// Eigen-decomposition of a density matrix, largest eigenvalue first.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;  // columns, same order as eigenvalues
  Index rank = 0;
};

/// Negative eigenvalues down to -1e-10 are clamped to zero; anything lower is
/// an invalid state. Diagonal input returns product-basis eigenvectors.
inline Spectrum spectral(const DensityMatrix& rho, double rank_tol = tolerance::kRank) {
  const Matrix& m = rho.matrix();
  const Index n = m.rows();
  std::vector<double> values(n);
  Matrix vectors;
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  if (is_diagonal(m)) {
    for (Index i = 0; i < n; ++i) values[i] = m(i, i).real();
    vectors = Matrix::Identity(n, n);
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) throw NumericalError("spectral: eigensolver did not converge");
    for (Index i = 0; i < n; ++i) values[i] = es.eigenvalues()(i);
    vectors = es.eigenvectors();
  }
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return values[a] > values[b]; });
  Spectrum s;
  s.eigenvectors.resize(n, n);
  s.eigenvalues.resize(n);
  for (Index i = 0; i < n; ++i) {
    double v = values[order[i]];
    if (v < tolerance::kEigenFloor) throw InvalidState("spectral: negative eigenvalue " + std::to_string(v));
    if (v < 0.0) v = 0.0;
    s.eigenvalues[i] = v;
    s.eigenvectors.col(i) = vectors.col(order[i]);
    if (v > rank_tol) ++s.rank;
  }
  return s;
}

/// The pure state underlying a rank-1 density matrix (global phase fixed so
/// the largest amplitude is real positive).
inline PureState as_pure(const DensityMatrix& rho) {
  if (!is_pure(rho)) throw InvalidState("as_pure: state is mixed (purity " + std::to_string(purity(rho)) + ")");
  const Spectrum s = spectral(rho);
  Vector v = s.eigenvectors.col(0);
  Index arg = 0;
  v.cwiseAbs().maxCoeff(&arg);
  v *= std::conj(v(arg)) / std::abs(v(arg));
  return PureState::normalized(rho.dims(), std::move(v));
}

/// Normalized vector of i.i.d. standard complex Gaussians (Haar measure).
inline PureState haar_random_pure(const ModeDims& dims, Rng& rng) {
  Vector v(dims.total());
  for (Index i = 0; i < v.size(); ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = Complex(re, im);
  }
  return PureState::normalized(dims, std::move(v));
}

inline PureState haar_random_pure(const ModeDims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure(dims, rng);
}

/// Haar-random n x n unitary (QR of a Ginibre matrix with the phases of R's
/// diagonal divided out).
inline Matrix haar_random_unitary(Index n, Rng& rng) {
  Matrix g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

}  // namespace entcon
