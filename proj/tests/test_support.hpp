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

#ifndef STRENGTH_TESTS_TEST_SUPPORT_HPP_
#define STRENGTH_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "strength/graph.hpp"
#include "strength/graph_io.hpp"

namespace strength::testing {

inline std::filesystem::path data_dir() { return STRENGTH_TEST_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return STRENGTH_FIXTURE_DIR; }

// Every connected graph on 3..7 vertices, one per isomorphism class.
inline std::vector<Graph> connected_corpus() {
  return parse_graph6_lines(read_text_file(data_dir() / "connected_3_to_7.g6"));
}

// G(p, q): q distinct edges drawn uniformly.
inline Graph random_graph(int p, int q, std::mt19937_64& rng) {
  std::vector<Edge> pairs;
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(static_cast<std::size_t>(q));
  return Graph::FromEdges(p, pairs);
}

// A random graph with at least one edge and p in [max(lo, 2), hi].
inline Graph random_nonempty_graph(int lo, int hi, std::mt19937_64& rng) {
  lo = std::max(lo, 2);
  const int p = std::uniform_int_distribution<int>(lo, hi)(rng);
  const int q = std::uniform_int_distribution<int>(1, p * (p - 1) / 2)(rng);
  return random_graph(p, q, rng);
}

// A random forest on p vertices without isolated vertices: random attachment
// trees, then isolated leftovers glued to a random earlier vertex.
inline Graph random_forest(int p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution new_tree(0.2);
  std::vector<int> root_of(p, 0);
  for (int v = 1; v < p; ++v) {
    if (new_tree(rng) && v + 1 < p) {
      root_of[v] = v;
      continue;
    }
    int lo = 0;
    // Attach inside the current tree only.
    for (int u = v - 1; u >= 0; --u) {
      if (root_of[u] == u) {
        lo = u;
        break;
      }
    }
    const int parent = std::uniform_int_distribution<int>(lo, v - 1)(rng);
    edges.emplace_back(parent, v);
    root_of[v] = root_of[parent];
  }
  Graph g = Graph::FromEdges(p, edges);
  for (int v = 0; v < p; ++v) {
    if (g.degree(v) == 0) {
      const int other = v == 0 ? 1 : std::uniform_int_distribution<int>(0, v - 1)(rng);
      edges.emplace_back(other, v);
      g = Graph::FromEdges(p, edges);
    }
  }
  return g;
}

}  // namespace strength::testing

#endif  // STRENGTH_TESTS_TEST_SUPPORT_HPP_
