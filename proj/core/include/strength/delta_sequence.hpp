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

#ifndef STRENGTH_DELTA_SEQUENCE_HPP_
#define STRENGTH_DELTA_SEQUENCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strength/graph.hpp"
#include "strength/labeling.hpp"

namespace strength {

// A sequence is built from G by repeating: drop every isolated vertex of the
// residual graph, then delete one chosen vertex together with its neighbors.
// It stops when the residual is m K1 or m K1 + K_r. In a δ-sequence each
// chosen vertex has minimum degree in the residual; in a d-sequence any
// vertex may be chosen.
enum class SequenceMode { kMinDegree, kAnyDegree };

enum class TerminalKind {
  kIsolated,  // m K1; m == 0 only when a d-sequence choice empties the graph
  kClique,    // m K1 + K_r, r >= 2
};

// One step of a sequence. For the terminal step of kind kClique, `chosen` is
// the smallest clique vertex, `removed_neighbors` the rest of the clique and
// d = r - 1. For a terminal step of kind kIsolated, chosen is -1 and d = 0.
struct DeltaStep {
  int m = 0;
  std::vector<Vertex> isolated;
  int d = 0;
  Vertex chosen = -1;
  std::vector<Vertex> removed_neighbors;
  int y = 0;  // m + 1 - d
};

struct DeltaSequence {
  SequenceMode mode = SequenceMode::kMinDegree;
  std::vector<DeltaStep> steps;
  TerminalKind terminal = TerminalKind::kIsolated;
  int terminal_m = 0;
  int terminal_r = 0;
  // prefix_sums[k] is z_{k+2} = y_2 + ... + y_{k+2}.
  std::vector<int> prefix_sums;

  int length() const { return static_cast<int>(steps.size()); }
  int first_degree() const { return steps.front().d; }
  bool satisfies_condition() const;
  // Z = min z_i over 2 <= i <= s.
  int min_prefix() const;
  // z_s.
  int final_prefix() const { return prefix_sums.back(); }
};

enum class SearchStatus { kFound, kExhausted, kBudgetHit };
const char* to_string(SearchStatus status);

struct SequenceSearchOptions {
  SequenceMode mode = SequenceMode::kMinDegree;
  std::int64_t budget = 1'000'000;  // node expansions
  // Restrict the first chosen vertex to degree δ(G). Only meaningful in
  // any-degree mode (min-degree mode always does this).
  bool first_at_min_degree = false;
};

struct SequenceSearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<DeltaSequence> sequence;
  std::int64_t nodes = 0;
};

// Depth-first search for a sequence with every prefix sum z_i >= 0. Choice
// points are tried in (degree, vertex id) order, so results are reproducible.
// kExhausted is returned only after the whole choice tree was explored.
// Throws PreconditionError if g has an isolated vertex or p - 2 < δ(G).
SequenceSearchResult find_delta_sequence(const Graph& g,
                                         const SequenceSearchOptions& options = {});

// Search for the sequence maximizing Z = min_i z_i (not required to be >= 0).
// `status` is kFound when the whole tree was explored, kBudgetHit when the
// returned sequence is only the best seen within budget.
SequenceSearchResult best_prefix_sequence(const Graph& g,
                                          const SequenceSearchOptions& options = {});

// Builds the sequence determined by the given chosen vertices (one per
// non-terminal step). Throws ParameterError if a choice is not alive, or in
// min-degree mode not of minimum degree, or if the choices run out before a
// terminal residual (or continue past one).
DeltaSequence sequence_from_choices(const Graph& g, const std::vector<Vertex>& choices,
                                    SequenceMode mode);

// Replays `seq` on g and throws IntegrityError at the first step whose stored
// data disagrees with the residual graph.
void validate_sequence(const Graph& g, const DeltaSequence& seq);

// The constructive labeling: the chosen vertices take labels p, p-1, ...
// (each step's isolated vertices just before its chosen vertex), their
// deleted neighbors take 1, 2, ..., and a terminal clique takes the
// remaining middle block. Result has strength exactly p + d_1.
// Throws PreconditionError if seq violates the prefix condition and
// IntegrityError if seq does not belong to g.
Numbering label_from_sequence(const Graph& g, const DeltaSequence& seq);

// Pendant vertices adjacent to a vertex of degree >= 2 (P_T), and N_T(P_T).
struct PendantProfile {
  std::vector<Vertex> pendants;
  std::vector<Vertex> supports;
};
PendantProfile pendant_profile(const Graph& forest);

// δ-sequence of a forest built by repeatedly deleting a pendant from P_T
// (smallest id; any pendant once P_T is empty) with its neighbor. Satisfies
// the prefix condition with z_s >= |P_T| - |N_T(P_T)|.
// Throws PreconditionError unless t is a forest of order >= 3 without
// isolated vertices.
DeltaSequence forest_delta_sequence(const Graph& t);

// H + T with the spliced sequence: T's steps first, then H's. Vertices of H
// keep their ids; T's are shifted by |V(H)|.
struct Composition {
  Graph graph;
  DeltaSequence sequence;
};

// d_H - Z - z_t(T); the composition needs this to be <= 0.
int composition_deficit(const DeltaSequence& h_seq, const DeltaSequence& t_seq);

// Throws PreconditionError when t_seq violates the prefix condition, when
// Z > 0 (H already certifies itself), or when z_t(T) < d_H - Z (the message
// states the deficit).
Composition compose_h_plus_t(const Graph& h, const DeltaSequence& h_seq, const Graph& t,
                             const DeltaSequence& t_seq);

// K_{m,n} (n >= m) with the sequence {T, (n-1)K1}: delete a vertex of the
// n-side and the whole m-side. z_2 = n, d_T = m.
Composition complete_bipartite_with_sequence(int m, int n);

struct EmbedOptions {
  std::int64_t budget = 1'000'000;
  // Also join a neighbor of T's last chosen vertex to a vertex of H that is
  // not H's first chosen vertex, making the result connected when H is.
  bool connect = false;
};

struct EmbedResult {
  SearchStatus status = SearchStatus::kFound;  // kBudgetHit: inconclusive
  bool extended = false;    // graph is H + K_{m,n}, not H itself
  int attached_m = 0;
  int attached_n = 0;
  int h_min_prefix = 0;     // Z of the H sequence used for the extension
  Graph graph;
  DeltaSequence sequence;
  std::optional<StrengthCertificate> certificate;
};

// Either certifies str(H) = |V(H)| + δ(H) directly (δ-sequence, then
// d-sequence with d_1 = δ), or attaches T = K_{δ(H), n} with
// n = max(d_H - Z, δ(H)) using the best Z found, and certifies
// str(H + T) = |V(H + T)| + δ(H).
EmbedResult embed_minimal(const Graph& h, const EmbedOptions& options = {});

// One-line rendering, e.g.
//   G1[δ=2] -> K1+G2[δ=2,m=1,z=0] -> K1+G3[δ=1,m=1,z=1] -> K2[m=0,z=1]
std::string render_arrow_chain(const DeltaSequence& seq);

}  // namespace strength

#endif  // STRENGTH_DELTA_SEQUENCE_HPP_
