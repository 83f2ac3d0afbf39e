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

#include "strength/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "strength/errors.hpp"

namespace strength {

Graph::Graph(int p) {
  if (p < 0) throw ParameterError("graph order must be non-negative");
  p_ = p;
  words_ = (static_cast<std::size_t>(p) + 63) / 64;
  adj_.assign(p, {});
  bits_.assign(words_ * p, 0);
}

Graph Graph::FromEdges(int p, std::span<const Edge> edges) {
  Graph g(p);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= p || v >= p) {
      throw ParameterError("edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "} has an endpoint outside [0," +
                           std::to_string(p) + ")");
    }
    if (u == v) {
      throw ParameterError("self-loop at vertex " + std::to_string(u));
    }
    if (g.adjacent(u, v)) {
      throw ParameterError("repeated edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "}");
    }
    for (auto [a, b] : {Edge{u, v}, Edge{v, u}}) {
      const auto bit = static_cast<std::size_t>(a) * g.words_ * 64 + b;
      g.bits_[bit / 64] |= std::uint64_t{1} << (bit % 64);
      g.adj_[a].push_back(b);
    }
    ++g.q_;
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

std::uint64_t Graph::row_mask(Vertex v) const {
  if (p_ > 64) throw PreconditionError("row_mask requires order <= 64");
  return bits_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(q_);
  for (Vertex u = 0; u < p_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members, int p)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= p) {
      throw ParameterError("vertex " + std::to_string(members_[i]) +
                           " outside [0," + std::to_string(p) + ")");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw ParameterError("duplicate vertex " + std::to_string(members_[i]));
    }
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("min_degree of the empty graph");
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

VertexSet neighborhood_exterior(const Graph& g, const VertexSet& s) {
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) mark[w] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mark[v] && !s.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out), g.order());
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out = g.neighbors(v);
  out.push_back(v);
  return VertexSet(std::move(out), g.order());
}

std::vector<int> union_offsets(std::span<const Graph> parts) {
  std::vector<int> offsets;
  int total = 0;
  for (const Graph& part : parts) {
    offsets.push_back(total);
    total += part.order();
  }
  return offsets;
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw ParameterError("disjoint_union of an empty list");
  const auto offsets = union_offsets(parts);
  std::vector<Edge> edges;
  int total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto [u, v] : parts[k].edges()) {
      edges.emplace_back(u + offsets[k], v + offsets[k]);
    }
    total += parts[k].order();
  }
  return Graph::FromEdges(total, edges);
}

Graph cartesian_product_k2(const Graph& g) {
  const int p = g.order();
  if (p < 1) throw ParameterError("cartesian_product_k2 needs p >= 1");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(p + u, p + v);
  }
  for (Vertex v = 0; v < p; ++v) edges.emplace_back(v, p + v);
  return Graph::FromEdges(2 * p, edges);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.size() + static_cast<int>(components(g).size()) == g.order();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  InducedSubgraph out;
  out.to_parent.assign(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order() || index[keep[i]] != -1) {
      throw ParameterError("induced_subgraph: bad or repeated vertex");
    }
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  out.graph = Graph::FromEdges(static_cast<int>(keep.size()), edges);
  return out;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

InducedSubgraph strip_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace strength
