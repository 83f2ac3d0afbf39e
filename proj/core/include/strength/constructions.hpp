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

#ifndef STRENGTH_CONSTRUCTIONS_HPP_
#define STRENGTH_CONSTRUCTIONS_HPP_

#include <optional>
#include <vector>

#include "strength/graph.hpp"
#include "strength/labeling.hpp"

namespace strength {

// Σ C_{2m_i} + Σ C_{2n_j+1}. Both lists are kept ascending; the graph puts
// the even cycles first.
struct TwoRegularSpec {
  std::vector<int> even_halves;  // m_i >= 2
  std::vector<int> odd_halves;   // n_j >= 1

  // From cycle lengths (each >= 3). Throws ParameterError.
  static TwoRegularSpec FromCycleLengths(std::vector<int> lengths);

  int order() const;
  int odd_count() const { return static_cast<int>(odd_halves.size()); }
  std::vector<int> cycle_lengths() const;  // in graph order
  Graph graph() const;
};

// The even cycles alternate low and high labels; odd cycle j takes an
// interleaved block that raises the maximum edge sum to p + j + 1. Exact with
// str = max(p + 2, p + 1 + k). Throws ParameterError for an invalid spec.
StrengthCertificate label_two_regular(const TwoRegularSpec& spec);

// The spec of a 2-regular graph, or nullopt.
std::optional<TwoRegularSpec> two_regular_spec_of(const Graph& g);

// label_two_regular transported onto an arbitrary 2-regular graph.
// Throws PreconditionError if g is not 2-regular.
StrengthCertificate label_two_regular_graph(const Graph& g);

// A numbering of a balanced bipartite graph whose part X carries 1..m.
struct BipartiteNumbering {
  Graph graph;
  Numbering numbering;
  std::vector<Vertex> part_x;  // ascending
};

// Throws PreconditionError unless the invariants hold.
void check_bipartite_numbering(const BipartiteNumbering& bn);

// The numbering F of G x K2 (copy vertex p + v) with blocks
//   F(x) = f(x), F(p+y) = 3m+1-f(y), F(p+x) = 3m+1-f(x), F(y) = 2m+f(y).
// Its strength is 5m + 1 and its X part takes 1..2m.
BipartiteNumbering double_bipartite(const BipartiteNumbering& bn);

// The optimal Q2 numbering with the even-parity class on {1, 2}.
BipartiteNumbering q2_base_numbering();

// Q2 doubled up to Q_n, n >= 2 (strength 2^n + 2^{n-2} + 1 for n >= 3).
BipartiteNumbering doubled_hypercube(int n);

// n = 2..4: exact from doubling and the neighborhood bound; n = 5: exact 40
// from the fixture table; n = 6: bracket [76, 79]; n >= 7: bracket from the
// closed-form lower bound and the better of the formula and doubling the Q6
// table (when its part-label property holds). 2 <= n <= 20.
StrengthCertificate hypercube_certificate(int n);

}  // namespace strength

#endif  // STRENGTH_CONSTRUCTIONS_HPP_
