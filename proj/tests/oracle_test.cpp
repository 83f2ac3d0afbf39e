// Copyright 2026 The Strength Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "strength/errors.hpp"
#include "strength/families.hpp"
#include "strength/labeling.hpp"
#include "strength/oracle.hpp"
#include "test_support.hpp"

namespace strength {
namespace {

// Minimum over all p! numberings.
int BruteStrength(const Graph& g) {
  std::vector<int> labels(g.order());
  std::iota(labels.begin(), labels.end(), 1);
  int best = 2 * g.order();
  do {
    best = std::min(best, strength_of(g, Numbering(labels)));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

TEST(Oracle, MatchesPermutationSearch) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_nonempty_graph(2, 7, rng);
    const auto r = exact_strength(g);
    ASSERT_EQ(r.status, OracleStatus::kExact);
    EXPECT_EQ(r.value, BruteStrength(g));
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(strength_of(g, *r.witness), r.value);
  }
}

TEST(Oracle, Families) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(exact_strength(path_graph(n)).value, n + 1) << n;
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(exact_strength(cycle_graph(n)).value, n + 2) << n;
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(exact_strength(complete_graph(n)).value, 2 * n - 1);
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 6; ++n) {
      EXPECT_EQ(exact_strength(complete_bipartite(m, n)).value, m + n + m) << m << "," << n;
    }
  }
  EXPECT_EQ(exact_strength(hypercube(3)).value, 11);
  EXPECT_EQ(exact_strength(petersen_graph()).value, 14);
}

TEST(Oracle, IsolatedVerticesDoNotChangeStrength) {
  const Graph g = Graph::FromEdges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  const auto r = exact_strength(g);
  EXPECT_EQ(r.value, 7);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->order(), 6);
  EXPECT_EQ(strength_of(g, *r.witness), 7);
}

TEST(Feasibility, Thresholds) {
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(feasible_at(c4, 5).status, Feasibility::kInfeasible);
  const auto ok = feasible_at(c4, 6);
  ASSERT_EQ(ok.status, Feasibility::kFeasible);
  EXPECT_LE(strength_of(c4, *ok.witness), 6);
  EXPECT_EQ(feasible_at(hypercube(3), 10).status, Feasibility::kInfeasible);
  EXPECT_EQ(feasible_at(hypercube(3), 11).status, Feasibility::kFeasible);
  EXPECT_EQ(feasible_at(c4, 2).status, Feasibility::kInfeasible);
  EXPECT_EQ(feasible_at(c4, 100).status, Feasibility::kFeasible);
}

TEST(Feasibility, BudgetHitOnDenseGraph) {
  std::mt19937_64 rng(1);
  const Graph g = testing::random_graph(12, 45, rng);
  const auto full = exact_strength(g);
  ASSERT_EQ(full.status, OracleStatus::kExact);
  OracleOptions tiny;
  tiny.budget = 10;
  // Just below the strength: refuting needs more than ten nodes.
  EXPECT_EQ(feasible_at(g, full.value - 1, tiny).status, Feasibility::kBudgetHit);
  EXPECT_EQ(feasible_at(g, full.value - 1).status, Feasibility::kInfeasible);
  const auto r = exact_strength(g, tiny);
  ASSERT_EQ(r.status, OracleStatus::kBracket);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_LE(r.lower, full.value);
  EXPECT_EQ(r.upper, 2 * 12 - 1);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(strength_of(g, *r.witness), r.upper);
}

TEST(Oracle, OrderCap) {
  EXPECT_THROW(exact_strength(hypercube(4)), PreconditionError);
  OracleOptions wide;
  wide.order_cap = 16;
  EXPECT_EQ(exact_strength(hypercube(4), wide).value, 21);
}

TEST(Oracle, DeterministicAcrossJobsAndSymmetry) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_nonempty_graph(5, 10, rng);
    OracleOptions serial;
    OracleOptions parallel;
    parallel.jobs = 4;
    OracleOptions plain;
    plain.symmetry = false;
    const auto a = exact_strength(g, serial);
    const auto b = exact_strength(g, parallel);
    const auto c = exact_strength(g, plain);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.value, c.value);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(Oracle, EmptyGraphHasNoStrength) {
  EXPECT_THROW(exact_strength(Graph(4)), UndefinedStrengthError);
}

}  // namespace
}  // namespace strength
