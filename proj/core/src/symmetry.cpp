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

#include "strength/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace strength {
namespace {

std::vector<Edge> DoubledEdges(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  const int p = g.order();
  const std::size_t q = edges.size();
  for (std::size_t k = 0; k < q; ++k) {
    edges.emplace_back(edges[k].first + p, edges[k].second + p);
  }
  return edges;
}

// Searches for a bijection between the two halves of `pair` (g and a copy of
// g) that respects `colors`. Cells with different sizes in the halves mean
// no such bijection exists below this node.
bool ExtendMapping(const Graph& g, const Graph& pair, std::vector<int> colors,
                   std::vector<Vertex>& mapping) {
  colors = refine_colors(pair, std::move(colors));
  const int p = g.order();
  std::map<int, std::pair<std::vector<Vertex>, std::vector<Vertex>>> cells;
  for (Vertex v = 0; v < 2 * p; ++v) {
    auto& cell = cells[colors[v]];
    (v < p ? cell.first : cell.second).push_back(v);
  }
  const std::vector<Vertex>* left = nullptr;
  const std::vector<Vertex>* right = nullptr;
  for (const auto& [color, cell] : cells) {
    if (cell.first.size() != cell.second.size()) return false;
    if (cell.first.size() > 1 && left == nullptr) {
      left = &cell.first;
      right = &cell.second;
    }
  }
  if (left == nullptr) {
    for (const auto& [color, cell] : cells) {
      mapping[cell.first[0]] = cell.second[0] - p;
    }
    for (auto [u, v] : g.edges()) {
      if (!g.adjacent(mapping[u], mapping[v])) return false;
    }
    return true;
  }
  const int fresh = *std::max_element(colors.begin(), colors.end()) + 1;
  const Vertex x = left->front();
  for (Vertex y : *right) {
    std::vector<int> next = colors;
    next[x] = fresh;
    next[y] = fresh;
    if (ExtendMapping(g, pair, std::move(next), mapping)) return true;
  }
  return false;
}

Vertex Find(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

void Unite(std::vector<Vertex>& parent, Vertex a, Vertex b) {
  a = Find(parent, a);
  b = Find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int p = g.order();
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> signature(p);
    for (Vertex v = 0; v < p; ++v) {
      std::vector<int> around;
      around.reserve(g.degree(v));
      for (Vertex w : g.neighbors(v)) around.push_back(colors[w]);
      std::sort(around.begin(), around.end());
      signature[v] = {colors[v], std::move(around)};
      ids.emplace(signature[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (Vertex v = 0; v < p; ++v) colors[v] = ids[signature[v]];
    if (ids.size() == classes) return colors;
    classes = ids.size();
  }
}

std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from,
                                                     Vertex to) {
  const int p = g.order();
  const Graph pair = Graph::FromEdges(2 * p, DoubledEdges(g));
  std::vector<int> colors(2 * p, 0);
  colors[from] = 1;
  colors[p + to] = 1;
  std::vector<Vertex> mapping(p, -1);
  if (!ExtendMapping(g, pair, std::move(colors), mapping)) return std::nullopt;
  return mapping;
}

std::vector<Vertex> automorphism_orbits(const Graph& g) {
  const int p = g.order();
  std::vector<Vertex> parent(p);
  std::iota(parent.begin(), parent.end(), 0);
  const auto cells = refine_colors(g, std::vector<int>(p, 0));
  for (Vertex v = 0; v < p; ++v) {
    for (Vertex w = v + 1; w < p; ++w) {
      if (cells[v] != cells[w] || Find(parent, v) == Find(parent, w)) continue;
      if (auto sigma = find_automorphism(g, v, w)) {
        for (Vertex x = 0; x < p; ++x) Unite(parent, x, (*sigma)[x]);
      }
    }
  }
  std::vector<Vertex> orbit(p);
  for (Vertex v = 0; v < p; ++v) orbit[v] = Find(parent, v);
  return orbit;
}

std::vector<Vertex> twin_classes(const Graph& g) {
  const int p = g.order();
  std::vector<Vertex> cls(p);
  std::iota(cls.begin(), cls.end(), 0);
  for (Vertex u = 0; u < p; ++u) {
    if (cls[u] != u) continue;
    for (Vertex w = u + 1; w < p; ++w) {
      if (cls[w] != w || g.degree(u) != g.degree(w)) continue;
      std::vector<Vertex> nu, nw;
      for (Vertex x : g.neighbors(u)) {
        if (x != w) nu.push_back(x);
      }
      for (Vertex x : g.neighbors(w)) {
        if (x != u) nw.push_back(x);
      }
      if (nu == nw) cls[w] = u;
    }
  }
  return cls;
}

}  // namespace strength
