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
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entcon/qstate.hpp"

namespace entcon {

/// A grouping of mode labels into T disjoint, nonempty blocks. Stored in
/// canonical form: labels ascending inside each block, blocks ordered by
/// (size, smallest label).
class ModePartition {
 public:
  explicit ModePartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InvalidArgument("ModePartition: no blocks");
    std::vector<int> all;
    for (auto& b : blocks_) {
      if (b.empty()) throw InvalidArgument("ModePartition: empty block");
      std::sort(b.begin(), b.end());
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    if (all.front() < 1) throw InvalidArgument("ModePartition: mode labels start at 1");
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw InvalidArgument("ModePartition: blocks overlap");
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.front() < b.front();
    });
  }

  /// Parses "1|2,3,4": commas join modes within a block, bars separate blocks.
  static ModePartition parse(std::string_view text) {
    std::vector<std::vector<int>> blocks(1);
    std::string number;
    auto flush = [&] {
      if (number.empty()) throw InvalidArgument("ModePartition: malformed partition '" + std::string(text) + "'");
      blocks.back().push_back(std::stoi(number));
      number.clear();
    };
    for (char c : text) {
      if (c == ' ') continue;
      if (c >= '0' && c <= '9') {
        number.push_back(c);
      } else if (c == ',') {
        flush();
      } else if (c == '|') {
        flush();
        blocks.emplace_back();
      } else {
        throw InvalidArgument("ModePartition: unexpected character in '" + std::string(text) + "'");
      }
    }
    flush();
    return ModePartition(std::move(blocks));
  }

  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  /// Every label, ascending.
  std::vector<int> modes() const {
    std::vector<int> all;
    for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return all;
  }

  /// Block contents concatenated in block order.
  std::vector<int> flattened() const {
    std::vector<int> all;
    for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
    return all;
  }

  std::string str() const {
    std::string s;
    for (std::size_t q = 0; q < blocks_.size(); ++q) {
      if (q) s += '|';
      for (std::size_t i = 0; i < blocks_[q].size(); ++i) {
        if (i) s += ',';
        s += std::to_string(blocks_[q][i]);
      }
    }
    return s;
  }

  /// Canonical order: block-size tuple first, then block contents.
  friend std::strong_ordering operator<=>(const ModePartition& a, const ModePartition& b) {
    const auto sizes = [](const ModePartition& p) {
      std::vector<std::size_t> s;
      for (const auto& blk : p.blocks_) s.push_back(blk.size());
      return s;
    };
    if (auto c = sizes(a) <=> sizes(b); c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }
  friend bool operator==(const ModePartition& a, const ModePartition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<int>> blocks_;
};

/// Stirling number of the second kind by the alternating binomial sum.
inline std::uint64_t stirling2(int n, int k) {
  if (k < 1 || n < k || n > 20) throw InvalidArgument("stirling2: need 1 <= k <= N <= 20");
  __int128 sum = 0;
  __int128 binom = 1;  // C(k, j)
  for (int j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * (k - j + 1) / j;
    __int128 power = 1;
    for (int i = 0; i < n; ++i) power *= j;
    sum += ((k - j) % 2 == 0 ? 1 : -1) * binom * power;
  }
  for (int i = 2; i <= k; ++i) sum /= i;
  return static_cast<std::uint64_t>(sum);
}

/// Same numbers by S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::uint64_t stirling2_recurrence(int n, int k) {
  if (k < 1 || n < k || n > 20) throw InvalidArgument("stirling2: need 1 <= k <= N <= 20");
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

/// All partitions of `modes` into exactly k blocks, in canonical order.
/// Generated as restricted growth strings, then sorted.
inline std::vector<ModePartition> enumerate_partitions(std::span<const int> modes, int k) {
  const int s = static_cast<int>(modes.size());
  if (k < 1 || k > s) throw InvalidArgument("enumerate_partitions: k out of range");
  std::vector<ModePartition> out;
  // growth[i] = block of modes[i]; growth[0] = 0, growth[i] <= 1 + max(growth[0..i-1]).
  std::vector<int> growth(s, 0), prefix_max(s, 0);
  auto emit = [&] {
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < s; ++i) blocks[growth[i]].push_back(modes[i]);
    out.emplace_back(std::move(blocks));
  };
  // Iterative odometer over valid strings; keep those using exactly k blocks.
  while (true) {
    if (prefix_max[s - 1] + 1 == k) emit();
    int i = s - 1;
    while (i > 0 && (growth[i] == prefix_max[i - 1] + 1 || growth[i] + 1 >= k)) --i;
    if (i == 0) break;
    ++growth[i];
    prefix_max[i] = std::max(prefix_max[i - 1], growth[i]);
    for (int j = i + 1; j < s; ++j) {
      growth[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ModePartition> enumerate_partitions(std::initializer_list<int> modes, int k) {
  return enumerate_partitions(std::span<const int>(modes.begin(), modes.size()), k);
}

/// n_{m^(q)} for each block, given the level counts of the labelled modes.
/// `labels[i]` names the mode whose level count is `dims[i]`.
inline ModeDims block_dims(const ModeDims& dims, std::span<const int> labels, const ModePartition& partition) {
  std::vector<int> out;
  for (const auto& block : partition.blocks()) {
    int n = 1;
    for (int m : block) {
      auto it = std::find(labels.begin(), labels.end(), m);
      if (it == labels.end()) throw InvalidArgument("block_dims: mode " + std::to_string(m) + " not present");
      n *= dims[static_cast<std::size_t>(it - labels.begin())];
    }
    out.push_back(n);
  }
  return ModeDims(std::move(out));
}

namespace detail {

/// Positions (one-based) within `labels` of the partition's flattened modes;
/// verifies the partition covers exactly `labels`.
inline std::vector<int> partition_positions(std::span<const int> labels, const ModePartition& partition) {
  const auto flat = partition.flattened();
  if (flat.size() != labels.size()) throw InvalidArgument("repartition: partition does not cover the reduction");
  std::vector<int> pos;
  for (int m : flat) {
    auto it = std::find(labels.begin(), labels.end(), m);
    if (it == labels.end())
      throw InvalidArgument("repartition: mode " + std::to_string(m) + " is not in the reduction");
    pos.push_back(static_cast<int>(it - labels.begin()) + 1);
  }
  return pos;
}

}  // namespace detail

/// Reduces `rho` to `reduction` (one-based labels of rho's modes), then
/// regroups the modes so each block of `partition` is one new mode. The result
/// is a T-mode state whose dims are the block dimensions.
inline DensityMatrix repartition(const DensityMatrix& rho, std::span<const int> reduction,
                                 const ModePartition& partition) {
  const auto reduced = partial_trace(rho, reduction);
  const auto order = detail::partition_positions(reduction, partition);
  const auto permuted = permute_modes(reduced, order);
  return DensityMatrix::trusted(block_dims(reduced.dims(), reduction, partition), permuted.matrix());
}

/// Pure-state repartition over all modes (labels 1..N).
inline PureState repartition(const PureState& psi, const ModePartition& partition) {
  const auto labels = all_modes(psi.num_modes());
  const auto order = detail::partition_positions(labels, partition);
  const auto permuted = permute_modes(psi, order);
  return PureState(block_dims(psi.dims(), labels, partition), permuted.amplitudes());
}

}  // namespace entcon
