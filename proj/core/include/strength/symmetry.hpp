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

#ifndef STRENGTH_SYMMETRY_HPP_
#define STRENGTH_SYMMETRY_HPP_

#include <optional>
#include <vector>

#include "strength/graph.hpp"

namespace strength {

// Stable color refinement (1-dimensional Weisfeiler-Leman) starting from
// `initial` colors. Returns canonical color ids: equal inputs on isomorphic
// graphs yield corresponding outputs.
std::vector<int> refine_colors(const Graph& g, std::vector<int> initial);

// An automorphism of g mapping `from` to `to`, if one exists. Exact:
// refinement guides an exhaustive individualization search.
std::optional<std::vector<Vertex>> find_automorphism(const Graph& g, Vertex from,
                                                     Vertex to);

// Orbit id (smallest member) of every vertex under Aut(g).
std::vector<Vertex> automorphism_orbits(const Graph& g);

// Class id (smallest member) of every vertex under the twin relation:
// N(u) \ {w} == N(w) \ {u}. Swapping two twins is an automorphism.
std::vector<Vertex> twin_classes(const Graph& g);

}  // namespace strength

#endif  // STRENGTH_SYMMETRY_HPP_
