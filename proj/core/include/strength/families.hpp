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

#ifndef STRENGTH_FAMILIES_HPP_
#define STRENGTH_FAMILIES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "strength/graph.hpp"

namespace strength {

// One named graph family with integer parameters, e.g. `hypercube:4` or
// `complete-bipartite:4,5`. `forest` additionally carries an edge list.
struct FamilyTerm {
  std::string name;
  std::vector<int> params;
  std::vector<Edge> edges;
  bool operator==(const FamilyTerm&) const = default;
};

// A disjoint union of family terms: `cycle:4+cycle:6`.
struct FamilySpec {
  std::vector<FamilyTerm> terms;
  bool operator==(const FamilySpec&) const = default;
};

// Grammar:
//   spec   := term ('+' term)*
//   term   := name [':' params]
//   params := int (',' int)*            for every family except forest
//           | int ':' [pair (',' pair)*] for forest, pair := int '-' int
// Throws ParseError carrying the byte offset of the offending character.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Vertex numbering of each family (frozen; stored fixtures depend on it):
//   path:n                 0-1-...-(n-1)
//   cycle:n                i ~ i+1 (mod n), n >= 3
//   complete:n             K_n
//   complete-bipartite:m,n side A = 0..m-1, side B = m..m+n-1
//   hypercube:n            id = bitvector value, bit i = coordinate i
//   star:k                 center 0, leaves 1..k
//   wheel:n                hub 0, rim cycle 1..n, n >= 3
//   fan:n                  hub 0, rim path 1..n, n >= 2
//   one-point-union:l1,..  shared vertex 0, cycle j on 0 and the next
//                          l_j - 1 fresh ids, in order
//   two-regular:l1,..      cycles laid out in canonical order: even lengths
//                          ascending, then odd lengths ascending
//   spider:k,l             center 0, leg j = 1+j*l .. (j+1)*l outward
//   petersen               outer 0..4, inner 5..9, spokes i ~ i+5
//   empty:n                n isolated vertices
//   forest:n:u-v,...       the listed edges; must be acyclic
// A multi-term spec is the disjoint union of its terms in order.
// Throws ParameterError on invalid parameters.
Graph generate(const FamilySpec& spec);
Graph generate(const FamilyTerm& term);

// Convenience constructors for the families used throughout the tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph hypercube(int n);
Graph star_graph(int k);
Graph wheel_graph(int n);
Graph fan_graph(int n);
Graph petersen_graph();

}  // namespace strength

#endif  // STRENGTH_FAMILIES_HPP_
