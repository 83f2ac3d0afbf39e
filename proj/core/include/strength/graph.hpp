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

#ifndef STRENGTH_GRAPH_HPP_
#define STRENGTH_GRAPH_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace strength {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..p-1. Immutable once built; safe to
// share across threads.
//
// Adjacency is held twice: sorted neighbor lists for iteration, and a p x p
// bit matrix for O(1) adjacency tests and for the bitmask algorithms in
// bounds.cpp (those require p <= 64 and use row_mask()).
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on p vertices.
  explicit Graph(int p);

  // Throws ParameterError on a loop, a repeated edge, or an endpoint outside
  // [0, p).
  static Graph FromEdges(int p, std::span<const Edge> edges);
  static Graph FromEdges(int p, std::initializer_list<Edge> edges) {
    return FromEdges(p, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return p_; }
  int size() const { return q_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const {
    const auto bit = static_cast<std::size_t>(u) * words_ * 64 + v;
    return (bits_[bit / 64] >> (bit % 64)) & 1U;
  }
  // Neighborhood of v as a bitmask. Requires order() <= 64.
  std::uint64_t row_mask(Vertex v) const;

  // All edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return p_ == other.p_ && adj_ == other.adj_;
  }

 private:
  int p_ = 0;
  int q_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

// A set of vertices of one graph, kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  // Throws ParameterError if a member lies outside [0, p) or is repeated.
  VertexSet(std::vector<Vertex> members, int p);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

// An induced subgraph plus the map from its vertices back to the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // non-increasing

// N(S) \ S: vertices outside s adjacent to at least one member of s.
VertexSet neighborhood_exterior(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Operand k's vertex v becomes offsets[k] + v, where offsets[k] is the total
// order of the operands before it.
Graph disjoint_union(std::span<const Graph> parts);
std::vector<int> union_offsets(std::span<const Graph> parts);

// G x K2. Vertex v of the first copy keeps its id; its twin in the second
// copy is p + v. Applied to Q_{n-1} this numbers Q_n by bitvector value.
Graph cartesian_product_k2(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
// Side (0 or 1) of each vertex in a proper 2-coloring, side 0 holding the
// smallest vertex of each component; nullopt if g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
std::vector<Vertex> isolated_vertices(const Graph& g);
// Removes isolated vertices; to_parent maps back to g.
InducedSubgraph strip_isolated(const Graph& g);

}  // namespace strength

#endif  // STRENGTH_GRAPH_HPP_
