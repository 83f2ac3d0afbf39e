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

// Cross-checks of bounds, sequences and constructions against the exact
// search on every connected graph with 3 to 7 vertices and on seeded random
// graphs and forests.

#include <gtest/gtest.h>

#include <random>

#include "strength/bounds.hpp"
#include "strength/delta_sequence.hpp"
#include "strength/graph_io.hpp"
#include "strength/labeling.hpp"
#include "strength/oracle.hpp"
#include "test_support.hpp"

namespace strength {
namespace {

void CheckAgainstOracle(const Graph& g) {
  const std::string id = write_graph6(g);
  const auto oracle = exact_strength(g);
  ASSERT_EQ(oracle.status, OracleStatus::kExact) << id;
  const int str = oracle.value;

  const auto report = bounds_report(g);
  for (const auto& e : report.entries) {
    if (e.kind == BoundKind::kLower) {
      EXPECT_LE(e.value, str) << id << " " << e.name;
    } else {
      EXPECT_GE(e.value, str) << id << " " << e.name;
    }
  }

  const auto core = strip_isolated(g);
  const Graph& h = core.graph;
  const int p = h.order();
  if (p - 2 < min_degree(h)) return;  // complete: no sequence to search

  const auto delta = find_delta_sequence(h);
  ASSERT_NE(delta.status, SearchStatus::kBudgetHit) << id;
  if (delta.sequence) {
    EXPECT_EQ(str, p + min_degree(h)) << id;
    EXPECT_EQ(strength_of(h, label_from_sequence(h, *delta.sequence)),
              p + delta.sequence->first_degree())
        << id;
  }

  SequenceSearchOptions any;
  any.mode = SequenceMode::kAnyDegree;
  const auto free = find_delta_sequence(h, any);
  ASSERT_NE(free.status, SearchStatus::kBudgetHit) << id;
  if (free.sequence) {
    const int s = strength_of(h, label_from_sequence(h, *free.sequence));
    EXPECT_EQ(s, p + free.sequence->first_degree()) << id;
    EXPECT_GE(s, str) << id;
  }
}

TEST(Property, EveryConnectedGraphUpToSeven) {
  const auto corpus = testing::connected_corpus();
  ASSERT_EQ(corpus.size(), 994U);
  for (const Graph& g : corpus) CheckAgainstOracle(g);
}

TEST(Property, RandomGraphsUpToNine) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    CheckAgainstOracle(testing::random_nonempty_graph(2, 9, rng));
  }
}

TEST(Property, RandomForests) {
  std::mt19937_64 rng(1414);
  for (int trial = 0; trial < 500; ++trial) {
    const int p = std::uniform_int_distribution<int>(3, 14)(rng);
    const Graph t = testing::random_forest(p, rng);
    const std::string id = write_graph6(t);
    ASSERT_TRUE(is_forest(t)) << id;
    ASSERT_TRUE(isolated_vertices(t).empty()) << id;
    const auto seq = forest_delta_sequence(t);
    EXPECT_NO_THROW(validate_sequence(t, seq)) << id;
    for (int z : seq.prefix_sums) EXPECT_GE(z, 0) << id;
    const auto prof = pendant_profile(t);
    EXPECT_GE(seq.final_prefix(), static_cast<int>(prof.pendants.size()) -
                                      static_cast<int>(prof.supports.size()))
        << id;
    EXPECT_EQ(strength_of(t, label_from_sequence(t, seq)), p + 1) << id;
    if (p <= 12) EXPECT_EQ(exact_strength(t).value, p + 1) << id;
  }
}

TEST(Property, IsolatedPaddingIsInvariant) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_nonempty_graph(2, 8, rng);
    const std::vector<Graph> parts{g, Graph(2)};
    EXPECT_EQ(exact_strength(g).value, exact_strength(disjoint_union(parts)).value);
  }
}

}  // namespace
}  // namespace strength
