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

std::vector<std::vector<int>> blocks_of(const std::string& s) { return ModePartition::parse(s).blocks(); }

TEST(PMp, Examples) {
  EXPECT_DOUBLE_EQ(p_mp(2, 2), 0.5);
  for (int d = 2; d <= 6; ++d) EXPECT_DOUBLE_EQ(p_mp(1, d), 1.0);
  EXPECT_NEAR(p_mp(3, 2), 5.0 / 9.0, 1e-15);
  for (int L = 1; L <= 20; ++L)
    for (int d = 2; d <= 6; ++d) EXPECT_NEAR(p_mp(L, d), oracle::min_purity(L, d), 1e-15);
  EXPECT_THROW(p_mp(0, 2), InvalidArgument);
}

TEST(LStar, Examples) {
  EXPECT_DOUBLE_EQ(l_star(ModeDims::qubits(4)).m_star, 1.0);
  const auto q2 = l_star(ModeDims{2, 2});
  EXPECT_EQ(q2.l_star, (std::vector<int>{2}));
  EXPECT_DOUBLE_EQ(q2.m_star, 1.0);
  const auto qt = l_star(ModeDims{2, 3});
  EXPECT_EQ(qt.l_star, (std::vector<int>{2}));
  EXPECT_NEAR(qt.m_star, 7.0 / 8.0, 1e-15);
  EXPECT_NEAR(l_star(ModeDims{2, 8}).m_star, 11.0 / 14.0, 1e-15);
  EXPECT_NEAR(l_star(ModeDims{2, 2, 4}).m_star, 1.0, 1e-15);
  EXPECT_THROW(l_star(ModeDims{2}), InvalidArgument);
}

TEST(LStar, MatchesExhaustiveScan) {
  for (const auto& d : std::vector<std::vector<int>>{{2, 3}, {3, 3}, {2, 3, 4}, {4, 2, 2}, {5, 2}, {3, 3, 3}})
    EXPECT_NEAR(l_star(ModeDims(d)).m_star, oracle::m_star(d), 1e-14);
  for (int d = 2; d <= 5; ++d) EXPECT_NEAR(l_star(ModeDims{d, d, d}).m_star, 1.0, 1e-14);
}

TEST(Ent, Examples) {
  EXPECT_NEAR(ent(catalog_pure("GHZ4")), 1.0, 1e-12);
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    auto psi = haar_random_pure(ModeDims{2}, rng);
    for (int m = 0; m < 3; ++m) psi = kron(psi, haar_random_pure(ModeDims{2 + m}, rng));
    EXPECT_NEAR(ent(psi), 0.0, 1e-12);
  }
  EXPECT_THROW(ent(catalog("GHZ+1")), InvalidState);
}

TEST(Ent, TwoQubitsIsConcurrenceSquared) {
  for (int s = 0; s < 100; ++s) {
    const auto psi = haar_random_pure(ModeDims{2, 2}, 7000 + s);
    const double c = oracle::pure_concurrence(psi.amplitudes());
    EXPECT_NEAR(ent(psi), c * c, 1e-10);
    EXPECT_NEAR(partitional_ent_concurrence(psi, ModePartition::parse("1|2")), c, 1e-10);
  }
}

TEST(Ent, MatchesOracleAndStaysInRange) {
  for (const auto& d : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2, 2}}) {
    for (int s = 0; s < 3000; ++s) {
      const auto psi = haar_random_pure(ModeDims(d), 9000 + s);
      const double e = ent(psi);
      EXPECT_GE(e, 0.0);
      EXPECT_LE(e, 1.0);
      if (s < 50) EXPECT_NEAR(e, oracle::ent(psi.amplitudes(), d), 1e-12);
    }
  }
}

TEST(Ent, LocalUnitaryInvariance) {
  Rng rng(21);
  const ModeDims dims{2, 3, 2};
  for (int t = 0; t < 20; ++t) {
    const auto psi = haar_random_pure(dims, rng);
    Matrix u = haar_random_unitary(2, rng);
    u = kron(u, haar_random_unitary(3, rng));
    u = kron(u, haar_random_unitary(2, rng));
    const PureState moved(dims, u * psi.amplitudes());
    EXPECT_NEAR(ent(psi), ent(moved), 1e-10);
  }
}

TEST(Ent, MaximalTestStates) {
  for (const char* n : {"GHZ4", "BP4", "F4"}) EXPECT_NEAR(ent(catalog_pure(n)), 1.0, 1e-12) << n;
  for (const auto& n : tgx_state_names()) EXPECT_NEAR(ent(catalog_pure(n)), 1.0, 1e-12) << n;
}

TEST(PartitionalEnt, Examples) {
  const auto bp = catalog_pure("BP4"), ghz = catalog_pure("GHZ4"), f = catalog_pure("F4");
  EXPECT_NEAR(partitional_ent(bp, ModePartition::parse("1,2|3,4")), 0.0, 1e-12);
  EXPECT_NEAR(partitional_ent(bp, ModePartition::parse("1,3|2,4")), 1.0, 1e-12);
  EXPECT_NEAR(partitional_ent(ghz, ModePartition::parse("1|2|3,4")), 8.0 / 9.0, 1e-12);
  EXPECT_NEAR(partitional_ent_concurrence(ghz, ModePartition::parse("1,2|3,4")), std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(partitional_ent_concurrence(f, ModePartition::parse("1|2|3,4")), std::sqrt(8.0 / 9.0), 1e-12);
}

TEST(PartitionalEnt, MatchesOracleOnAllPartitions) {
  const std::vector<int> d{2, 3, 2, 2};
  for (int s = 0; s < 3; ++s) {
    const auto psi = haar_random_pure(ModeDims(d), 300 + s);
    for (int k = 2; k <= 4; ++k)
      for (const auto& p : enumerate_partitions(all_modes(4), k))
        EXPECT_NEAR(partitional_ent(psi, p), oracle::ent(psi.amplitudes(), d, p.blocks()), 1e-12) << p.str();
  }
}

TEST(PartitionalEnt, ReducedPureStates) {
  // GHZ3 x |1>: the reduction onto modes 1..3 is pure
  const auto rho = kron(catalog_pure("GHZ3"), PureState(ModeDims{2}, Vector::Unit(2, 0))).density();
  const std::vector<int> red{1, 2, 3};
  EXPECT_NEAR(partitional_ent(rho, red, ModePartition::parse("1|2,3")), 1.0, 1e-12);
  EXPECT_THROW(partitional_ent(catalog("GHZ4"), red, ModePartition::parse("1|2,3")), InvalidState);
}

TEST(KEnts, Examples) {
  const auto bp = catalog_pure("BP4"), ghz = catalog_pure("GHZ4"), f = catalog_pure("F4");
  EXPECT_NEAR(gm_k_ent(bp, 2), 0.0, 1e-12);
  double dm = 0.0;
  for (int k = 2; k <= 4; ++k) dm += dm_k_ent(ghz, k);
  EXPECT_NEAR(dm, 13.11, 5e-3);
  double sg = 0.0, sb = 0.0;
  for (int k = 2; k <= 4; ++k) sg += sm_k_ent(ghz, k), sb += sm_k_ent(bp, k);
  EXPECT_NEAR(sg, 12.33, 5e-3);
  EXPECT_NEAR(sb, 12.33, 5e-3);
  EXPECT_NEAR(sg, sb, 1e-9);
  EXPECT_THROW(gm_k_ent(ghz, 1), InvalidArgument);
  EXPECT_THROW(gm_k_ent(ghz, 5), InvalidArgument);
}

TEST(KEnts, MinAtMostMean) {
  for (int s = 0; s < 50; ++s) {
    const auto psi = haar_random_pure(ModeDims::qubits(4), 800 + s);
    for (int k = 2; k <= 4; ++k)
      EXPECT_LE(gm_k_ent(psi, k), sm_k_ent(psi, k) / static_cast<double>(stirling2(4, k)) + 1e-12);
  }
}

TEST(Aggregate, ReferenceSums) {
  const auto f = catalog_pure("F4"), ghz = catalog_pure("GHZ4"), bp = catalog_pure("BP4");
  EXPECT_NEAR(aggregate_ent(f, Family::DM).value, 13.70, 5e-3);
  EXPECT_NEAR(aggregate_ent(ghz, Family::DM).value, 13.11, 5e-3);
  EXPECT_NEAR(aggregate_ent(bp, Family::DM).value, 12.63, 5e-3);
  EXPECT_NEAR(aggregate_ent(f, Family::SM).value, 13.44, 5e-3);
  const double a = std::sqrt(2.0 / 3.0), b = std::sqrt(8.0 / 9.0);
  EXPECT_NEAR(aggregate_ent(ghz, Family::DM).value, 4 + 3 * a + 6 * b + 1, 1e-12);
  EXPECT_NEAR(aggregate_ent(bp, Family::DM).value, 6 + 2 * a + 4 + 1, 1e-12);
  EXPECT_NEAR(aggregate_ent(f, Family::DM).value, 6 + a + 4 + 2 * b + 1, 1e-12);
}

TEST(Aggregate, ProductStatesVanish) {
  Rng rng(4);
  auto psi = haar_random_pure(ModeDims{2}, rng);
  for (int m = 0; m < 3; ++m) psi = kron(psi, haar_random_pure(ModeDims{2}, rng));
  for (Family f : {Family::GM, Family::SM, Family::DM}) EXPECT_NEAR(aggregate_ent(psi, f).value, 0.0, 1e-10);
}

TEST(Aggregate, ReportRecomputes) {
  for (const char* n : {"W4", "F4", "BP4"})
    for (Family f : {Family::GM, Family::SM, Family::DM}) {
      const auto r = aggregate_ent(catalog_pure(n), f);
      EXPECT_EQ(r.per_partition.size(), 14u);
      EXPECT_NEAR(r.recompute(), r.value, 1e-12);
    }
}

TEST(Aggregate, FigureOrdering) {
  const auto v = [](const char* n, Family f) { return aggregate_ent(catalog_pure(n), f).value; };
  EXPECT_GT(v("F4", Family::DM), v("GHZ4", Family::DM));
  EXPECT_GT(v("GHZ4", Family::DM), v("BP4", Family::DM));
  EXPECT_GT(v("BP4", Family::DM), v("W4", Family::DM));
  EXPECT_LT(v("BP4", Family::GM), v("W4", Family::GM));
  EXPECT_NEAR(v("GHZ4", Family::GM), v("F4", Family::GM), 1e-12);
}

TEST(Normalization, ReferenceSet) {
  std::vector<PureState> set;
  for (const auto& n : tgx_state_names()) set.push_back(catalog_pure(n));
  EXPECT_NEAR(aggregate_ent(catalog_pure("GHZ4"), Family::DM, set).value, 0.957, 5e-4);
  EXPECT_NEAR(dm_k_ent(catalog_pure("BP4"), 2, set), 0.880, 5e-4);
  EXPECT_NEAR(dm_k_ent(catalog_pure("F4"), 3, set), 1.0, 1e-12);
  const auto r = aggregate_ent(catalog_pure("GHZ4"), Family::DM, set);
  EXPECT_NEAR(r.recompute(), r.value, 1e-12);
  EXPECT_THROW(aggregate_ent(catalog_pure("GHZ4"), Family::DM, std::span<const PureState>{}), InvalidArgument);
}

TEST(EntSqrt, Clamping) {
  EXPECT_EQ(ent_sqrt(-1e-13), 0.0);
  EXPECT_EQ(ent_sqrt(5e-13), 0.0);
  EXPECT_DOUBLE_EQ(ent_sqrt(0.25), 0.5);
  EXPECT_THROW(ent_sqrt(-1e-8), NumericalError);
}

}  // namespace
}  // namespace entcon
