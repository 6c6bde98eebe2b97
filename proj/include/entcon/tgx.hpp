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

#include <vector>

#include "entcon/qstate.hpp"

namespace entcon {

/// Sparsity pattern of "simple" (true-generalized X) states: an element is
/// forbidden when its row and column multi-indices differ in exactly one mode,
/// because such an element lands in an off-diagonal of that mode's reduction.
class TgxMask {
 public:
  explicit TgxMask(ModeDims dims) : dims_(std::move(dims)) {
    const Index n = dims_.total();
    allowed_.assign(static_cast<std::size_t>(n * n), true);
    for (Index a = 0; a < n; ++a) {
      const auto da = dims_.digits(a);
      for (Index b = 0; b < n; ++b) {
        const auto db = dims_.digits(b);
        int differing = 0;
        for (std::size_t m = 0; m < da.size(); ++m) differing += da[m] != db[m];
        allowed_[a * n + b] = differing != 1;
      }
    }
  }

  const ModeDims& dims() const noexcept { return dims_; }

  /// Zero-based row/column.
  bool allowed(Index row, Index col) const { return allowed_.at(row * dims_.total() + col); }

 private:
  ModeDims dims_;
  std::vector<bool> allowed_;
};

inline TgxMask tgx_mask(const ModeDims& dims) { return TgxMask(dims); }

inline bool is_tgx(const DensityMatrix& rho, double tol = 1e-12) {
  const TgxMask mask(rho.dims());
  const Index n = rho.dim();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (!mask.allowed(a, b) && std::abs(rho.matrix()(a, b)) >= tol) return false;
  return true;
}

}  // namespace entcon
