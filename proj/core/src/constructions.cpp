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

#include "strength/constructions.hpp"

#include <algorithm>

#include "strength/bounds.hpp"
#include "strength/errors.hpp"
#include "strength/families.hpp"
#include "strength/fixtures.hpp"

namespace strength {
namespace {

// Vertices of the cycle through `start`, in traversal order towards the
// smaller neighbor first.
std::vector<Vertex> TraverseCycle(const Graph& g, Vertex start) {
  std::vector<Vertex> order{start};
  Vertex previous = start;
  Vertex current = g.neighbors(start).front();
  while (current != start) {
    order.push_back(current);
    const auto around = g.neighbors(current);
    const Vertex next = around[0] == previous ? around[1] : around[0];
    previous = current;
    current = next;
  }
  return order;
}

bool IsPartX(const BipartiteNumbering& bn, Vertex v) {
  return std::binary_search(bn.part_x.begin(), bn.part_x.end(), v);
}

}  // namespace

TwoRegularSpec TwoRegularSpec::FromCycleLengths(std::vector<int> lengths) {
  if (lengths.empty()) throw ParameterError("a 2-regular graph needs at least one cycle");
  TwoRegularSpec spec;
  for (int n : lengths) {
    if (n < 3) throw ParameterError("cycle length must be >= 3");
    if (n % 2 == 0) {
      spec.even_halves.push_back(n / 2);
    } else {
      spec.odd_halves.push_back(n / 2);
    }
  }
  std::sort(spec.even_halves.begin(), spec.even_halves.end());
  std::sort(spec.odd_halves.begin(), spec.odd_halves.end());
  return spec;
}

int TwoRegularSpec::order() const {
  int p = 0;
  for (int m : even_halves) p += 2 * m;
  for (int n : odd_halves) p += 2 * n + 1;
  return p;
}

std::vector<int> TwoRegularSpec::cycle_lengths() const {
  std::vector<int> out;
  for (int m : even_halves) out.push_back(2 * m);
  for (int n : odd_halves) out.push_back(2 * n + 1);
  return out;
}

Graph TwoRegularSpec::graph() const {
  std::vector<Graph> parts;
  for (int n : cycle_lengths()) parts.push_back(cycle_graph(n));
  return disjoint_union(parts);
}

StrengthCertificate label_two_regular(const TwoRegularSpec& spec) {
  if (spec.even_halves.empty() && spec.odd_halves.empty()) {
    throw ParameterError("a 2-regular graph needs at least one cycle");
  }
  if (std::any_of(spec.even_halves.begin(), spec.even_halves.end(),
                  [](int m) { return m < 2; }) ||
      std::any_of(spec.odd_halves.begin(), spec.odd_halves.end(),
                  [](int n) { return n < 1; })) {
    throw ParameterError("even cycles need m >= 2 and odd cycles n >= 1");
  }
  if (!std::is_sorted(spec.even_halves.begin(), spec.even_halves.end()) ||
      !std::is_sorted(spec.odd_halves.begin(), spec.odd_halves.end())) {
    throw ParameterError("cycle lists must be ascending");
  }
  const int p = spec.order();
  std::vector<int> labels;
  labels.reserve(p);
  // Low labels count up from 1, high labels count down from p.
  int low = 0;
  int high = 0;
  for (int m : spec.even_halves) {
    for (int k = 0; k < m; ++k) {
      labels.push_back(++low);
      labels.push_back(p - high++);
    }
  }
  for (int n : spec.odd_halves) {
    for (int k = 0; k < n; ++k) {
      labels.push_back(++low);
      labels.push_back(p - high++);
    }
    labels.push_back(++low);
  }

  StrengthCertificate c;
  c.graph = spec.graph();
  c.witness = labels;
  const int k = spec.odd_count();
  c.claimed = std::max(p + 2, p + 1 + k);
  if (k >= 1) {
    c.lower_bound_name = kBoundIndependence;
    c.lower_bound_value = p + 1 + k;
  } else {
    c.lower_bound_name = kBoundMinDegree;
    c.lower_bound_value = p + 2;
  }
  c.method = "two-regular interleaving";
  const int actual = strength_of(c.graph, Numbering(labels));
  if (actual != c.claimed) {
    throw IntegrityError("two-regular labeling has strength " + std::to_string(actual) +
                         ", expected " + std::to_string(c.claimed));
  }
  return c;
}

std::optional<TwoRegularSpec> two_regular_spec_of(const Graph& g) {
  if (g.order() == 0 || min_degree(g) != 2 || max_degree(g) != 2) return std::nullopt;
  std::vector<int> lengths;
  for (const auto& component : components(g)) {
    lengths.push_back(static_cast<int>(component.size()));
  }
  return TwoRegularSpec::FromCycleLengths(lengths);
}

StrengthCertificate label_two_regular_graph(const Graph& g) {
  const auto spec = two_regular_spec_of(g);
  if (!spec) throw PreconditionError("graph is not 2-regular");
  StrengthCertificate canonical = label_two_regular(*spec);

  // Cycles of g in the canonical order: even lengths first, each ascending.
  auto cycles = components(g);
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    const bool a_odd = a.size() % 2 == 1;
    const bool b_odd = b.size() % 2 == 1;
    if (a_odd != b_odd) return !a_odd;
    return a.size() < b.size();
  });
  std::vector<int> labels(g.order(), 0);
  int offset = 0;
  for (const auto& cycle : cycles) {
    const auto order = TraverseCycle(g, cycle.front());
    for (std::size_t i = 0; i < order.size(); ++i) {
      labels[order[i]] = canonical.witness[offset + i];
    }
    offset += static_cast<int>(order.size());
  }
  canonical.graph = g;
  canonical.witness = std::move(labels);
  if (strength_of(g, Numbering(canonical.witness)) != canonical.claimed) {
    throw IntegrityError("transported two-regular labeling changed strength");
  }
  return canonical;
}

void check_bipartite_numbering(const BipartiteNumbering& bn) {
  const int p = bn.graph.order();
  if (bn.numbering.order() != p) throw PreconditionError("numbering order differs");
  if (p % 2 != 0 || static_cast<int>(bn.part_x.size()) != p / 2) {
    throw PreconditionError("parts are not of equal size");
  }
  if (!std::is_sorted(bn.part_x.begin(), bn.part_x.end())) {
    throw PreconditionError("part X must be ascending");
  }
  const int m = p / 2;
  for (Vertex v = 0; v < p; ++v) {
    const bool in_x = IsPartX(bn, v);
    if (in_x != (bn.numbering[v] <= m)) {
      throw PreconditionError("part X does not carry exactly the labels 1..m");
    }
  }
  for (const auto& [u, v] : bn.graph.edges()) {
    if (IsPartX(bn, u) == IsPartX(bn, v)) {
      throw PreconditionError("edge inside a part: not a bipartition");
    }
  }
}

BipartiteNumbering double_bipartite(const BipartiteNumbering& bn) {
  check_bipartite_numbering(bn);
  const int p = bn.graph.order();
  const int m = p / 2;
  BipartiteNumbering out;
  out.graph = cartesian_product_k2(bn.graph);
  std::vector<int> labels(2 * p);
  for (Vertex v = 0; v < p; ++v) {
    const int f = bn.numbering[v];
    if (IsPartX(bn, v)) {
      labels[v] = f;
      labels[p + v] = 3 * m + 1 - f;
      out.part_x.push_back(v);
    } else {
      labels[v] = 2 * m + f;
      labels[p + v] = 3 * m + 1 - f;
    }
  }
  for (Vertex v = 0; v < p; ++v) {
    if (!IsPartX(bn, v)) out.part_x.push_back(p + v);
  }
  out.numbering = Numbering(std::move(labels));
  return out;
}

BipartiteNumbering q2_base_numbering() {
  BipartiteNumbering out;
  out.graph = hypercube(2);
  out.numbering = Numbering({1, 3, 4, 2});
  out.part_x = {0, 3};
  return out;
}

BipartiteNumbering doubled_hypercube(int n) {
  if (n < 2 || n > 20) throw ParameterError("hypercube dimension must be in [2, 20]");
  BipartiteNumbering bn = q2_base_numbering();
  for (int k = 2; k < n; ++k) bn = double_bipartite(bn);
  return bn;
}

StrengthCertificate hypercube_certificate(int n) {
  if (n < 2 || n > 20) throw ParameterError("hypercube dimension must be in [2, 20]");
  StrengthCertificate c;
  const std::int64_t lower = hypercube_lower_bound(n);
  c.lower_bound_value = static_cast<int>(lower);
  c.lower_bound_name = n <= 6 ? kBoundXi : kBoundHypercube;

  if (n == 5 || n == 6) {
    const Fixture table = load_fixture(n == 5 ? "Q5" : "Q6");
    c.graph = table.graph;
    c.witness = table.numbering.labels();
    c.claimed = table.strength;
    c.method = "printed Q" + std::to_string(n) + " table";
    return c;
  }

  BipartiteNumbering bn;
  std::string method;
  if (n >= 7) {
    const Fixture q6 = load_fixture("Q6");
    BipartiteNumbering base;
    base.graph = q6.graph;
    base.numbering = q6.numbering;
    for (Vertex v = 0; v < q6.graph.order(); ++v) {
      if (q6.numbering[v] <= q6.graph.order() / 2) base.part_x.push_back(v);
    }
    bool usable = true;
    try {
      check_bipartite_numbering(base);
    } catch (const PreconditionError&) {
      usable = false;
    }
    if (usable) {
      bn = std::move(base);
      for (int k = 6; k < n; ++k) bn = double_bipartite(bn);
      method = "Q6 table doubled " + std::to_string(n - 6) + " times";
    } else {
      bn = doubled_hypercube(n);
      method = "Q2 doubled " + std::to_string(n - 2) + " times";
    }
  } else {
    bn = doubled_hypercube(n);
    method = "Q2 doubled " + std::to_string(n - 2) + " times";
  }
  c.graph = bn.graph;
  c.claimed = strength_of(bn.graph, bn.numbering);
  c.witness = bn.numbering.labels();
  c.method = method;
  if (c.claimed > hypercube_upper_bound(n)) {
    throw IntegrityError("doubling exceeded the closed-form upper bound");
  }
  return c;
}

}  // namespace strength
