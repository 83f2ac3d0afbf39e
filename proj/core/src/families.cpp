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

#include "strength/families.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "strength/errors.hpp"

namespace strength {
namespace {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec Parse() {
    FamilySpec spec;
    spec.terms.push_back(Term());
    while (Peek() == '+') {
      ++pos_;
      spec.terms.push_back(Term());
    }
    if (pos_ != text_.size()) Fail("unexpected character");
    return spec;
  }

 private:
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("family spec: " + what, pos_);
  }

  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  FamilyTerm Term() {
    FamilyTerm term;
    const std::size_t start = pos_;
    while (std::islower(static_cast<unsigned char>(Peek())) || Peek() == '-') {
      ++pos_;
    }
    if (pos_ == start) Fail("expected a family name");
    term.name = std::string(text_.substr(start, pos_ - start));
    if (Peek() != ':') return term;
    ++pos_;
    term.params.push_back(Int());
    if (term.name == "forest") {
      Expect(':');
      if (std::isdigit(static_cast<unsigned char>(Peek()))) {
        term.edges.push_back(Pair());
        while (Peek() == ',') {
          ++pos_;
          term.edges.push_back(Pair());
        }
      }
      return term;
    }
    while (Peek() == ',') {
      ++pos_;
      term.params.push_back(Int());
    }
    return term;
  }

  Edge Pair() {
    const int u = Int();
    Expect('-');
    return {u, Int()};
  }

  int Int() {
    if (!std::isdigit(static_cast<unsigned char>(Peek()))) Fail("expected an integer");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(Peek()))) {
      value = value * 10 + (Peek() - '0');
      if (value > std::numeric_limits<int>::max()) Fail("integer too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void Require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void RequireArity(const FamilyTerm& t, std::size_t lo, std::size_t hi) {
  Require(t.params.size() >= lo && t.params.size() <= hi,
          "family '" + t.name + "' takes " + std::to_string(lo) +
              (lo == hi ? "" : ".." + std::to_string(hi)) + " parameter(s)");
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  return FamilyParser(text).Parse();
}

std::string to_string(const FamilySpec& spec) {
  std::string out;
  for (std::size_t k = 0; k < spec.terms.size(); ++k) {
    const FamilyTerm& t = spec.terms[k];
    if (k) out += '+';
    out += t.name;
    for (std::size_t i = 0; i < t.params.size(); ++i) {
      out += (i == 0 ? ':' : ',');
      out += std::to_string(t.params[i]);
    }
    if (t.name == "forest") {
      out += ':';
      for (std::size_t i = 0; i < t.edges.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.edges[i].first) + '-' +
               std::to_string(t.edges[i].second);
      }
    }
  }
  return out;
}

Graph path_graph(int n) {
  Require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(n, edges);
}

Graph cycle_graph(int n) {
  Require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges);
}

Graph complete_graph(int n) {
  Require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(n, edges);
}

Graph complete_bipartite(int m, int n) {
  Require(m >= 1 && n >= 1, "complete-bipartite needs m, n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  }
  return Graph::FromEdges(m + n, edges);
}

Graph hypercube(int n) {
  Require(n >= 1 && n <= 20, "hypercube needs 1 <= n <= 20");
  const int p = 1 << n;
  std::vector<Edge> edges;
  for (int v = 0; v < p; ++v) {
    for (int i = 0; i < n; ++i) {
      const int w = v ^ (1 << i);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::FromEdges(p, edges);
}

Graph star_graph(int k) {
  Require(k >= 1, "star needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph::FromEdges(k + 1, edges);
}

Graph wheel_graph(int n) {
  Require(n >= 3, "wheel needs a rim of n >= 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % n + 1);
  }
  return Graph::FromEdges(n + 1, edges);
}

Graph fan_graph(int n) {
  Require(n >= 2, "fan needs a rim of n >= 2 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(0, i);
    if (i < n) edges.emplace_back(i, i + 1);
  }
  return Graph::FromEdges(n + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph::FromEdges(10, edges);
}

Graph generate(const FamilyTerm& t) {
  const auto& a = t.params;
  if (t.name == "path") {
    RequireArity(t, 1, 1);
    return path_graph(a[0]);
  }
  if (t.name == "cycle") {
    RequireArity(t, 1, 1);
    return cycle_graph(a[0]);
  }
  if (t.name == "complete") {
    RequireArity(t, 1, 1);
    return complete_graph(a[0]);
  }
  if (t.name == "complete-bipartite") {
    RequireArity(t, 2, 2);
    return complete_bipartite(a[0], a[1]);
  }
  if (t.name == "hypercube") {
    RequireArity(t, 1, 1);
    return hypercube(a[0]);
  }
  if (t.name == "star") {
    RequireArity(t, 1, 1);
    return star_graph(a[0]);
  }
  if (t.name == "wheel") {
    RequireArity(t, 1, 1);
    return wheel_graph(a[0]);
  }
  if (t.name == "fan") {
    RequireArity(t, 1, 1);
    return fan_graph(a[0]);
  }
  if (t.name == "petersen") {
    RequireArity(t, 0, 0);
    return petersen_graph();
  }
  if (t.name == "empty") {
    RequireArity(t, 1, 1);
    Require(a[0] >= 1, "empty needs n >= 1");
    return Graph(a[0]);
  }
  if (t.name == "one-point-union") {
    Require(!a.empty(), "one-point-union needs at least one cycle length");
    std::vector<Edge> edges;
    int next = 1;
    for (int len : a) {
      Require(len >= 3, "one-point-union cycle lengths must be >= 3");
      int prev = 0;
      for (int i = 1; i < len; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, 0);
    }
    return Graph::FromEdges(next, edges);
  }
  if (t.name == "two-regular") {
    Require(!a.empty(), "two-regular needs at least one cycle length");
    std::vector<int> evens, odds;
    for (int len : a) {
      Require(len >= 3, "two-regular cycle lengths must be >= 3");
      (len % 2 == 0 ? evens : odds).push_back(len);
    }
    std::sort(evens.begin(), evens.end());
    std::sort(odds.begin(), odds.end());
    std::vector<Graph> parts;
    for (int len : evens) parts.push_back(cycle_graph(len));
    for (int len : odds) parts.push_back(cycle_graph(len));
    return disjoint_union(parts);
  }
  if (t.name == "spider") {
    RequireArity(t, 2, 2);
    Require(a[0] >= 1 && a[1] >= 1, "spider needs k, l >= 1");
    std::vector<Edge> edges;
    for (int j = 0; j < a[0]; ++j) {
      int prev = 0;
      for (int s = 0; s < a[1]; ++s) {
        const int v = 1 + j * a[1] + s;
        edges.emplace_back(prev, v);
        prev = v;
      }
    }
    return Graph::FromEdges(1 + a[0] * a[1], edges);
  }
  if (t.name == "forest") {
    RequireArity(t, 1, 1);
    Graph g = Graph::FromEdges(a[0], t.edges);
    Require(is_forest(g), "forest edge list contains a cycle");
    return g;
  }
  throw ParameterError("unknown graph family '" + t.name + "'");
}

Graph generate(const FamilySpec& spec) {
  Require(!spec.terms.empty(), "empty family spec");
  if (spec.terms.size() == 1) return generate(spec.terms.front());
  std::vector<Graph> parts;
  for (const auto& term : spec.terms) parts.push_back(generate(term));
  return disjoint_union(parts);
}

}  // namespace strength
