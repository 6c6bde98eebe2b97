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

DensityMatrix mix2(const PureState& a, const PureState& b, double p) {
  return DensityMatrix(a.dims(), p * a.density().matrix() + (1 - p) * b.density().matrix());
}

PureMeasure concurrence_12() {
  return partition_concurrence_measure(ModeDims{2, 2}, std::vector<int>{1, 2}, ModePartition::parse("1|2"));
}

TEST(Sampler, RankOne) {
  const auto rho = catalog("GHZ4");
  DecompositionSampler s(rho, 1);
  EXPECT_EQ(s.rank(), 1);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto d = s.sample(i);
    ASSERT_EQ(d.count(), 1u);
    EXPECT_NEAR(std::abs(d.states[0].dot(catalog_pure("GHZ4").amplitudes())), 1.0, 1e-12);
  }
}

TEST(Sampler, EigenFirstAndDiagonalProducts) {
  const auto rho = partial_trace(catalog("GHZ4"), {1, 2});
  DecompositionSampler s(rho, 0);
  const auto d = s.sample(0);
  EXPECT_EQ(d.source, Decomposition::Source::Eigen);
  ASSERT_EQ(d.count(), 2u);
  const auto measure = family_measure(rho.dims(), Family::DM);
  EXPECT_EQ(d.average(measure), 0.0);
}

TEST(Sampler, ReconstructsState) {
  for (const char* n : {"GHZ+1", "2SEP", "F+1", "MME"}) {
    const auto rho = catalog(n);
    const auto ds = sample_decompositions(rho, 60, {}, 3);
    for (const auto& d : ds) {
      double total = 0.0;
      for (double p : d.probabilities) {
        EXPECT_GT(p, 0.0);
        total += p;
      }
      EXPECT_NEAR(total, 1.0, 1e-10);
      EXPECT_LT(detail::max_abs(d.reconstruct() - rho.matrix()), 1e-9) << n;
    }
  }
}

TEST(Sampler, ScheduleAndDeterminism) {
  const auto rho = catalog("GHZ+1");
  DecompositionSampler s(rho, 5);
  EXPECT_EQ(s.schedule(), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(s.sample(1).size, 2);
  EXPECT_EQ(s.sample(2).size, 3);
  EXPECT_EQ(s.sample(3).size, 4);
  EXPECT_EQ(s.sample(4).size, 2);
  DecompositionSampler t(rho, 5);
  EXPECT_EQ(s.sample(17).states[0], t.sample(17).states[0]);
  EXPECT_THROW(DecompositionSampler(rho, 0, {1, 2}), InvalidArgument);
  EXPECT_EQ(default_schedule(3), (std::vector<int>{3, 4, 5, 6, 7}));
  EXPECT_EQ(default_schedule(1), (std::vector<int>{1}));
}

TEST(Cre, PureInputIsExact) {
  const auto psi = haar_random_pure(ModeDims::qubits(4), 12);
  const auto r = cre(family_measure(psi.dims(), Family::DM), psi.density());
  EXPECT_EQ(r.samples_used, 1u);
  EXPECT_NEAR(r.value, aggregate_ent(psi, Family::DM).value, 1e-10);
}

TEST(Cre, WoottersRankTwo) {
  const auto rho = mix2(catalog_pure("BELL"), PureState(ModeDims{2, 2}, Vector::Unit(4, 0)), 0.5);
  const double c = oracle::wootters(rho.matrix());
  const auto r = cre(concurrence_12(), rho);
  EXPECT_GE(r.value, c - 1e-9);
  EXPECT_LE(r.value, c + 2e-2);
}

TEST(Cre, WoottersRandomMixtures) {
  for (int s = 0; s < 5; ++s) {
    Rng rng(derive_seed(31, s));
    const auto a = haar_random_pure(ModeDims{2, 2}, rng), b = haar_random_pure(ModeDims{2, 2}, rng);
    const auto rho = mix2(a, b, 0.3 + 0.4 * rng.uniform());
    const double c = oracle::wootters(rho.matrix());
    const double v = cre(concurrence_12(), rho).value;
    EXPECT_GE(v, c - 1e-9);
    EXPECT_LE(v, c + 2e-2);
  }
}

TEST(Cre, MonotoneInBudget) {
  const auto rho = catalog("F+1");
  const auto m = family_measure(rho.dims(), Family::DM);
  double prev = 1e300;
  for (std::size_t b : {1, 10, 50, 200}) {
    CreOptions o;
    o.budget = b;
    o.seed = 8;
    const double v = cre(m, rho, o).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(Cre, HistoryAndThreadIndependence) {
  const auto rho = catalog("GHZ+1");
  const auto m = family_measure(rho.dims(), Family::SM);
  CreOptions o;
  o.budget = 120;
  o.history = true;
  o.threads = 1;
  const auto a = cre(m, rho, o);
  o.threads = 4;
  const auto b = cre(m, rho, o);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.best_index, b.best_index);
  ASSERT_EQ(a.history.size(), 120u);
  EXPECT_TRUE(std::is_sorted(a.history.rbegin(), a.history.rend()));
  EXPECT_EQ(a.history.back(), a.value);
}

TEST(Cre, PointwiseOrderCarriesOver) {
  // GM_2 <= SM_2 on every decomposition, so the same samples give ordered minima
  const auto rho = catalog("2SEP");
  CreOptions o;
  o.budget = 200;
  EXPECT_LE(hatted_k_ent(rho, Family::GM, 2, o).value, hatted_k_ent(rho, Family::SM, 2, o).value);
}

TEST(Cre, MmeEverySampleIsOne) {
  const auto rho = catalog("MME");
  const auto m = partition_concurrence_measure(rho.dims(), all_modes(4), ModePartition::parse("1|2,3,4"));
  for (const auto& d : sample_decompositions(rho, 200, {}, 2)) EXPECT_NEAR(d.average(m), 1.0, 1e-9);
}

TEST(Cre, MixedSignatures) {
  CreOptions o;
  o.polish = true;
  const auto sep = catalog("2SEP"), mme = catalog("MME");
  EXPECT_NEAR(hatted_k_ent(sep, Family::GM, 2, o).value, 0.0, 1e-6);
  EXPECT_NEAR(hatted_k_ent(mme, Family::GM, 2, o).value, 0.0, 1e-6);
  EXPECT_GT(hatted_k_ent(sep, Family::SM, 2, o).value, 0.05);
  EXPECT_GT(hatted_k_ent(mme, Family::SM, 2, o).value, 0.05);
  EXPECT_GT(sgm_k(sep, 2, o).value, 0.05);
  EXPECT_NEAR(sgm_k(mme, 2, o).value, 0.0, 1e-6);
}

TEST(Cre, MinInsideAverageBoundsStrict) {
  const auto rho = catalog("GHZ+1");
  const auto ds = sample_decompositions(rho, 300, {}, 4);
  const auto labels = all_modes(4);
  double hatted = 1e300, strict = 1e300;
  for (const auto& d : ds) hatted = std::min(hatted, d.average(family_measure(rho.dims(), Family::GM, 2)));
  for (const auto& p : enumerate_partitions(labels, 2)) {
    const auto m = partition_ent_measure(rho.dims(), labels, p);
    for (const auto& d : ds) strict = std::min(strict, d.average(m));
  }
  EXPECT_LE(hatted, strict + 1e-12);
  const auto s = sgm_k(rho, 2);
  for (const auto& pv : s.per_partition) EXPECT_GE(pv.value, s.value);
}

TEST(Cre, ProductAndDiagonalStatesScoreZero) {
  Rng rng(2);
  auto psi = haar_random_pure(ModeDims{2}, rng);
  for (int m = 0; m < 3; ++m) psi = kron(psi, haar_random_pure(ModeDims{2}, rng));
  const auto rho = psi.density();
  EXPECT_NEAR(hatted_aggregate(rho, Family::DM).value, 0.0, 1e-10);
  EXPECT_NEAR(sfgm(rho), 0.0, 1e-10);
  Matrix d = Matrix::Zero(16, 16);
  for (int i = 0; i < 16; ++i) d(i, i) = (i + 1) / 136.0;
  const DensityMatrix diag(ModeDims::qubits(4), d);
  for (Family f : {Family::GM, Family::SM, Family::DM}) EXPECT_EQ(hatted_aggregate(diag, f).value, 0.0);
  EXPECT_EQ(sfgm(diag), 0.0);
}

TEST(Cre, LowConfidenceFlag) {
  Matrix d = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) d(i, i) = 1.0 / 8;
  d(0, 7) = d(7, 0) = 0.05;
  const DensityMatrix rho(ModeDims::qubits(3), d);
  CreOptions o;
  o.budget = 5;
  const auto r = hatted_aggregate(rho, Family::DM, o);
  EXPECT_EQ(r.rank, 8);
  EXPECT_TRUE(r.low_confidence);
  EXPECT_FALSE(hatted_aggregate(catalog("GHZ+1"), Family::DM, o).low_confidence);
}

}  // namespace
}  // namespace entcon
