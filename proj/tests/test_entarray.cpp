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

#include <gtest/gtest.h>

#include "entcon/entcon.hpp"
#include "oracles.hpp"

namespace entcon {
namespace {

std::vector<double> values(const EntConcurrenceVector& v) {
  std::vector<double> out;
  for (const auto& row : v.rows)
    for (const auto& e : row) out.push_back(e.value);
  return out;
}

const double a = std::sqrt(2.0 / 3.0), b = std::sqrt(8.0 / 9.0);

TEST(Combinations, Lexicographic) {
  EXPECT_EQ(combinations(4, 2),
            (std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(combinations(4, 3), (std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_EQ(combinations(4, 4).size(), 1u);
}

TEST(Vector, FullStateExact) {
  const std::vector<std::pair<const char*, std::vector<double>>> cases{
      {"F4", {1, 1, 1, 1, a, 1, 1, b, 1, 1, 1, 1, b, 1}},
      {"GHZ4", {1, 1, 1, 1, a, a, a, b, b, b, b, b, b, 1}},
      {"BP4", {1, 1, 1, 1, 0, 1, 1, a, 1, 1, 1, 1, a, 1}},
  };
  for (const auto& [name, expected] : cases) {
    const auto v = ent_concurrence_vector(catalog(name));
    const auto got = values(v);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-9) << name << " " << i;
    for (const auto& row : v.rows)
      for (const auto& e : row) EXPECT_EQ(e.method, EntryMethod::PureExact);
  }
}

TEST(Vector, WPairIsHalf) {
  const std::vector<int> red{1, 2};
  const auto v = ent_concurrence_vector(catalog("W4"), red);
  ASSERT_EQ(v.entry_count(), 1u);
  EXPECT_EQ(v.rows[0][0].method, EntryMethod::Cre);
  const double c = oracle::wootters(partial_trace(catalog("W4"), red).matrix());
  EXPECT_NEAR(c, 0.5, 1e-12);
  EXPECT_GE(v.rows[0][0].value, c - 1e-9);
  EXPECT_LE(v.rows[0][0].value, c + 2e-2);
}

TEST(Vector, RejectsSingleMode) {
  EXPECT_THROW(ent_concurrence_vector(catalog("W4"), std::vector<int>{2}), InvalidArgument);
}

TEST(Array, ShapeAndGhz) {
  const auto arr = ent_concurrence_array(catalog("GHZ4"));
  ASSERT_EQ(arr.rows.size(), 3u);
  EXPECT_EQ(arr.rows[0].size(), 6u);
  EXPECT_EQ(arr.rows[1].size(), 4u);
  EXPECT_EQ(arr.rows[2].size(), 1u);
  EXPECT_EQ(arr.entry_count(), 36u);
  for (int k = 0; k < 2; ++k)
    for (const auto& v : arr.rows[k])
      for (const auto& row : v.rows)
        for (const auto& e : row) {
          EXPECT_EQ(e.value, 0.0);
          EXPECT_EQ(e.method, EntryMethod::DiagonalShortcut);
        }
  EXPECT_NEAR(arr.sum(), 4 + 3 * a + 6 * b + 1, 1e-9);
}

TEST(Array, BellProductPairs) {
  const auto arr = ent_concurrence_array(catalog("BP4"));
  const std::vector<double> pairs{1, 0, 0, 0, 0, 1};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(arr.rows[0][i].rows[0][0].value, pairs[i], 1e-9);
  EXPECT_EQ(arr.rows[0][0].rows[0][0].method, EntryMethod::PureExact);
}

TEST(Array, WState) {
  const auto arr = ent_concurrence_array(catalog("W4"));
  for (const auto& v : arr.rows[0]) {
    EXPECT_GE(v.rows[0][0].value, 0.5 - 1e-9);
    EXPECT_LE(v.rows[0][0].value, 0.5 + 2e-2);
  }
  for (const auto& v : arr.rows[1])
    for (double x : values(v)) {
      EXPECT_GE(x, std::sqrt(0.5) - 1e-9);
      EXPECT_LE(x, std::sqrt(0.5) + 2e-2);
    }
  const double w1 = std::sqrt(0.75), w2 = std::sqrt(13.0 / 18.0);
  const std::vector<double> bottom{w1, w1, w1, w1, a, a, a, w2, w2, w2, w2, w2, w2, w1};
  const auto got = values(arr.rows[2][0]);
  for (std::size_t i = 0; i < bottom.size(); ++i) EXPECT_NEAR(got[i], bottom[i], 1e-9);
  EXPECT_NEAR(absolute_ent_concurrence(catalog("W4")), 26.19, 3e-2);
}

TEST(Array, DeterministicAcrossThreads) {
  CreOptions o;
  o.budget = 60;
  o.threads = 1;
  const auto x = ent_concurrence_array(catalog("F4"), o);
  o.threads = 3;
  const auto y = ent_concurrence_array(catalog("F4"), o);
  EXPECT_EQ(io::to_json(x).dump(), io::to_json(y).dump());
}

TEST(Array, MonotoneInBudget) {
  CreOptions small, large;
  small.budget = 50;
  large.budget = 400;
  const std::vector<int> red{3, 4};
  const double s = ent_concurrence_vector(catalog("F4"), red, small).rows[0][0].value;
  const double l = ent_concurrence_vector(catalog("F4"), red, large).rows[0][0].value;
  EXPECT_LE(l, s);
}

TEST(KEntConcurrence, PureAndNormalized) {
  EXPECT_NEAR(k_ent_concurrence(catalog("GHZ4"), 2), 4 + 3 * a, 1e-12);
  double mx = 0.0;
  for (const auto& n : tgx_state_names()) mx = std::max(mx, k_ent_concurrence(catalog(n), 2));
  EXPECT_NEAR(k_ent_concurrence(catalog("PHI[2][4]"), 2) / mx, 1.000, 5e-4);
  EXPECT_NEAR(k_ent_concurrence(catalog("PHI[1][2]"), 2) / mx, 0.946, 5e-4);
  EXPECT_NEAR(k_ent_concurrence(catalog("PHI[1][4]"), 2) / mx, 0.880, 5e-4);
  EXPECT_THROW(k_ent_concurrence(catalog("GHZ4"), 5), InvalidArgument);
}

TEST(Absolute, ReferenceSet) {
  const std::vector<DensityMatrix> set{catalog("GHZ4"), catalog("BP4")};
  const double v = absolute_ent_concurrence(catalog("GHZ4"), {}, std::span<const DensityMatrix>(set));
  EXPECT_NEAR(v, (4 + 3 * a + 6 * b + 1) / ent_concurrence_array(catalog("BP4")).sum(), 1e-12);
  EXPECT_THROW(absolute_ent_concurrence(catalog("GHZ4"), {}, std::span<const DensityMatrix>{}), InvalidArgument);
}

TEST(Rms, Examples) {
  const std::vector<double> x{1, 1, 0.0541};
  EXPECT_NEAR(rms(x), 0.817, 1e-3);
  EXPECT_THROW(rms(std::vector<double>{}), InvalidArgument);
  for (const auto& r : rms_diagnostic(ent_concurrence_vector(catalog("GHZ4")))) {
    if (r.partition.str() == "1|2|3|4") {
      EXPECT_NEAR(r.rms, 1.0, 1e-12);
      EXPECT_EQ(r.matched.size(), 4u);
    }
  }
}

TEST(Rms, SeparableVectorHasZeroResiduals) {
  Rng rng(6);
  auto psi = haar_random_pure(ModeDims{2}, rng);
  for (int m = 0; m < 3; ++m) psi = kron(psi, haar_random_pure(ModeDims{2}, rng));
  for (const auto& r : rms_diagnostic(ent_concurrence_vector(psi.density()))) {
    EXPECT_EQ(r.value, 0.0);
    EXPECT_EQ(r.residual, 0.0);
  }
}

TEST(Rms, MatchedPartitions) {
  const auto v = ent_concurrence_vector(catalog("BP4"));
  for (const auto& r : rms_diagnostic(v))
    if (r.partition.str() == "1|2|3,4") {
      std::vector<std::string> m;
      for (const auto& p : r.matched) m.push_back(p.str());
      EXPECT_EQ(m, (std::vector<std::string>{"1|2,3,4", "2|1,3,4", "1,2|3,4"}));
    }
}

}  // namespace
}  // namespace entcon
