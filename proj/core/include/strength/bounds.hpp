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

#ifndef STRENGTH_BOUNDS_HPP_
#define STRENGTH_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strength/graph.hpp"

namespace strength {

inline constexpr int kIndependenceCap = 40;

struct IndependentSet {
  int size = 0;
  std::vector<Vertex> members;
};

// Exact α(G) by branch and bound (maximum clique of the complement with a
// greedy coloring bound). Throws PreconditionError when p > cap.
IndependentSet independence_number(const Graph& g, int cap = kIndependenceCap);

// A maximal independent set found greedily by minimum degree. Its size is
// only a lower bound on α and must not be used for the strength bound.
IndependentSet greedy_independent_set(const Graph& g);

// 2p - 2α + 1 with exact α.
int independence_lower_bound_str(const Graph& g, int cap = kIndependenceCap);

struct XiOptions {
  int i_max = 0;                               // 0: every size 1..p-1
  std::int64_t budget_per_size = 20'000'000;   // subset nodes per size
  int jobs = 1;
  // Stop once ξ reaches this value (used when re-checking a stated bound).
  std::optional<int> target;
};

struct XiEntry {
  int size = 0;
  int value = 0;                 // x_i
  std::vector<Vertex> witness;   // a set S with |S| = i and |N(S)\S| = x_i
};

struct XiProfile {
  std::vector<XiEntry> x;        // sizes 1, 2, ... in order, all exact
  int xi = 0;                    // max over x of x_i - i + 1
  bool complete = false;         // every size 1..p-1 computed
  int incomplete_at = 0;         // size whose budget ran out, 0 if none
};

// x_i = min |N(S)\S| over |S| = i, by subset enumeration with pruning.
// Requires 2 <= p <= 64.
XiProfile xi_profile(const Graph& g, const XiOptions& options = {});

// Closed forms for Q_n, n >= 2 (ParameterError otherwise).
std::int64_t hypercube_lower_bound(int n);
std::int64_t hypercube_upper_bound(int n);

// κ'(G) by unit-capacity max flow from vertex 0; 0 when disconnected.
int edge_connectivity(const Graph& g);

// The dimension n if g is isomorphic to Q_n (n >= 1), else nullopt. On
// success `codes` (if given) receives a bitvector per vertex realizing the
// isomorphism.
std::optional<int> recognize_hypercube(const Graph& g,
                                       std::vector<std::uint32_t>* codes = nullptr);

enum class BoundKind { kLower, kUpper };
const char* to_string(BoundKind kind);

struct BoundEntry {
  std::string name;
  std::int64_t value = 0;
  BoundKind kind = BoundKind::kLower;
  std::string note;
  std::vector<Vertex> witness;  // independent set or ξ subset when relevant
};

struct AbsentBound {
  std::string name;
  std::string reason;
};

struct BoundsOptions {
  int xi_i_max = 0;  // 0: all sizes when p <= 16, else up to 4
  std::int64_t xi_budget = 20'000'000;
  std::int64_t sequence_budget = 200'000;
  int jobs = 1;
  bool constructions = true;  // add construction-derived upper bounds
};

struct BoundsReport {
  int order = 0;            // p after isolated vertices were stripped
  int stripped_isolated = 0;
  std::vector<BoundEntry> entries;
  std::vector<AbsentBound> absent;
  std::int64_t best_lower = 0;
  std::int64_t best_upper = 0;
  std::string best_lower_name;
  std::string best_upper_name;

  bool exact() const { return best_lower == best_upper; }
  std::optional<std::int64_t> value_of(std::string_view name) const;
};

// Every applicable bound on str(G). Isolated vertices are stripped first
// (they do not change the strength). Throws UndefinedStrengthError when g
// has no edges.
BoundsReport bounds_report(const Graph& g, const BoundsOptions& options = {});

// Lower-bound names understood by recompute_lower_bound.
inline constexpr std::string_view kBoundMinDegree = "p+delta";
inline constexpr std::string_view kBoundEdgeConnectivity = "p+edge-connectivity";
inline constexpr std::string_view kBoundMaxDegree = "max-degree+2";
inline constexpr std::string_view kBoundIndependence = "independence";
inline constexpr std::string_view kBoundXi = "neighborhood-xi";
inline constexpr std::string_view kBoundHypercube = "hypercube";
inline constexpr std::string_view kBoundExhaustive = "exhaustive-search";

// Recomputes the named lower bound from g alone, or nullopt when the name is
// unknown or the bound does not apply. `target` lets expensive bounds stop
// early once they reach the value being checked.
std::optional<int> recompute_lower_bound(const Graph& g, std::string_view name,
                                         std::optional<int> target = std::nullopt);

}  // namespace strength

#endif  // STRENGTH_BOUNDS_HPP_
