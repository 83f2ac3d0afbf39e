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

#include <random>

#include "strength/errors.hpp"
#include "strength/families.hpp"
#include "strength/graph.hpp"
#include "strength/graph_io.hpp"
#include "strength/symmetry.hpp"
#include "test_support.hpp"

namespace strength {
namespace {

TEST(Graph, FromEdgesRejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph::FromEdges(3, {{0, 0}}), ParameterError);
  EXPECT_THROW(Graph::FromEdges(3, {{0, 1}, {1, 0}}), ParameterError);
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), ParameterError);
  EXPECT_THROW(Graph(-1), ParameterError);
}

TEST(Graph, BasicQueries) {
  const Graph g = Graph::FromEdges(4, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(min_degree(g), 0);
  EXPECT_EQ(max_degree(g), 2);
  EXPECT_EQ(isolated_vertices(g), std::vector<Vertex>{3});
  EXPECT_FALSE(is_connected(g));
  EXPECT_FALSE(is_forest(g));
  EXPECT_EQ(components(g).size(), 2U);
}

TEST(Graph, StripIsolatedKeepsParentMap) {
  const Graph g = Graph::FromEdges(5, {{1, 3}, {3, 4}});
  const auto core = strip_isolated(g);
  EXPECT_EQ(core.graph.order(), 3);
  EXPECT_EQ(core.to_parent, (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(core.graph.size(), 2);
}

TEST(Graph, NeighborhoodExterior) {
  const Graph c6 = cycle_graph(6);
  const VertexSet s({0, 1}, 6);
  EXPECT_EQ(neighborhood_exterior(c6, s).members(), (std::vector<Vertex>{2, 5}));
}

TEST(Graph, DisjointUnionOffsets) {
  const std::vector<Graph> parts{cycle_graph(4), path_graph(2)};
  const Graph u = disjoint_union(parts);
  EXPECT_EQ(u.order(), 6);
  EXPECT_EQ(u.size(), 5);
  EXPECT_EQ(union_offsets(parts), (std::vector<int>{0, 4}));
  EXPECT_TRUE(u.adjacent(4, 5));
}

TEST(Graph, HypercubeIsIteratedProductWithK2) {
  Graph g = path_graph(2);
  for (int n = 2; n <= 7; ++n) {
    g = cartesian_product_k2(g);
    EXPECT_EQ(g, hypercube(n)) << n;
  }
}

TEST(Graph, Bipartition) {
  EXPECT_TRUE(bipartition(hypercube(4)).has_value());
  EXPECT_FALSE(bipartition(cycle_graph(5)).has_value());
  const auto side = bipartition(complete_bipartite(2, 3));
  ASSERT_TRUE(side);
  EXPECT_NE((*side)[0], (*side)[2]);
}

TEST(Families, Counts) {
  struct Case {
    const char* spec;
    int p;
    int q;
  };
  for (const Case& c : {Case{"path:5", 5, 4}, Case{"cycle:7", 7, 7}, Case{"complete:5", 5, 10},
                        Case{"complete-bipartite:3,4", 7, 12}, Case{"hypercube:4", 16, 32},
                        Case{"star:4", 5, 4}, Case{"wheel:5", 6, 10}, Case{"fan:5", 6, 9},
                        Case{"petersen", 10, 15}, Case{"cycle:4+cycle:5", 9, 9},
                        Case{"one-point-union:3,4,5", 10, 12},
                        Case{"two-regular:4,6,5,5,7", 27, 27}}) {
    const Graph g = generate(parse_family(c.spec));
    EXPECT_EQ(g.order(), c.p) << c.spec;
    EXPECT_EQ(g.size(), c.q) << c.spec;
  }
}

TEST(Families, RoundTripText) {
  const auto spec = parse_family("hypercube:3+complete-bipartite:2,3");
  EXPECT_EQ(parse_family(to_string(spec)), spec);
}

TEST(Families, RejectsBadSpecs) {
  EXPECT_THROW(parse_family("cycle:"), ParseError);
  EXPECT_THROW(parse_family("cycle:4:"), ParseError);
  EXPECT_THROW(generate(parse_family("cycle:2")), ParameterError);
  EXPECT_THROW(generate(parse_family("nosuch:3")), ParameterError);
  EXPECT_THROW(generate(parse_family("hypercube:21")), ParameterError);
}

TEST(GraphIo, Graph6KnownEncodings) {
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(write_graph6(path_graph(2)), "A_");
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
}

TEST(GraphIo, Graph6RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_nonempty_graph(1, 70, rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

TEST(GraphIo, Graph6Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);
  EXPECT_THROW(parse_graph6("C~~"), ParseError);
  EXPECT_THROW(parse_graph6("C\x01"), ParseError);
  try {
    parse_graph6("C");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1U);
  }
}

TEST(GraphIo, EdgeListRoundTrip) {
  const Graph g = petersen_graph();
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), Error);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
}

TEST(GraphIo, CorpusIsCompleteAndConnected) {
  const auto corpus = testing::connected_corpus();
  ASSERT_EQ(corpus.size(), 994U);
  int by_order[8] = {};
  for (const Graph& g : corpus) {
    EXPECT_TRUE(is_connected(g));
    ++by_order[g.order()];
  }
  EXPECT_EQ(by_order[3], 2);
  EXPECT_EQ(by_order[4], 6);
  EXPECT_EQ(by_order[5], 21);
  EXPECT_EQ(by_order[6], 112);
  EXPECT_EQ(by_order[7], 853);
}

TEST(GraphIo, DotMentionsLabels) {
  const std::string dot = write_dot(path_graph(3), {1, 3, 2});
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("--"), std::string::npos);
}

TEST(Symmetry, OrbitsOfSmallGraphs) {
  const auto star = automorphism_orbits(star_graph(4));
  EXPECT_EQ(star[0], 0);
  for (int v = 1; v <= 4; ++v) EXPECT_EQ(star[v], 1);
  const auto cube = automorphism_orbits(hypercube(4));
  for (int v = 0; v < 16; ++v) EXPECT_EQ(cube[v], 0);
  const auto path = automorphism_orbits(path_graph(4));
  EXPECT_EQ(path, (std::vector<Vertex>{0, 1, 1, 0}));
}

TEST(Symmetry, AutomorphismIsValid) {
  const Graph g = petersen_graph();
  for (Vertex to = 0; to < 10; ++to) {
    const auto map = find_automorphism(g, 0, to);
    ASSERT_TRUE(map);
    EXPECT_EQ((*map)[0], to);
    for (const auto& [u, v] : g.edges()) EXPECT_TRUE(g.adjacent((*map)[u], (*map)[v]));
  }
  EXPECT_FALSE(find_automorphism(path_graph(3), 0, 1));
}

TEST(Symmetry, TwinClasses) {
  const auto twins = twin_classes(complete_bipartite(2, 3));
  EXPECT_EQ(twins, (std::vector<Vertex>{0, 0, 2, 2, 2}));
  const auto k4 = twin_classes(complete_graph(4));
  EXPECT_EQ(k4, (std::vector<Vertex>{0, 0, 0, 0}));
}

}  // namespace
}  // namespace strength
