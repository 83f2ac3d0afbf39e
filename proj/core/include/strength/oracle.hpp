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

#ifndef STRENGTH_ORACLE_HPP_
#define STRENGTH_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "strength/graph.hpp"
#include "strength/labeling.hpp"

namespace strength {

inline constexpr int kOracleOrderCap = 14;

struct OracleOptions {
  std::int64_t budget = 200'000'000;  // search nodes, over all thresholds
  double time_limit_seconds = 0;      // 0: no limit
  int jobs = 1;                       // workers splitting the root choices
  int order_cap = kOracleOrderCap;
  bool symmetry = true;               // root orbits and twin dominance
};

enum class Feasibility { kFeasible, kInfeasible, kBudgetHit };
const char* to_string(Feasibility f);

struct FeasibilityResult {
  Feasibility status = Feasibility::kInfeasible;
  std::optional<Numbering> witness;  // strength <= t when feasible
  std::int64_t nodes = 0;
};

// Is there a numbering with every edge sum <= t? Labels p, p-1, ... are
// placed in turn; a vertex may take label l only while l + (its largest
// labeled neighbor) <= t, and a counting (Hall) test on the remaining caps
// cuts hopeless branches. Deterministic for any number of jobs.
// Throws PreconditionError if p exceeds the order cap.
FeasibilityResult feasible_at(const Graph& g, int t, const OracleOptions& options = {});

enum class OracleStatus { kExact, kBracket };
const char* to_string(OracleStatus s);

struct OracleResult {
  OracleStatus status = OracleStatus::kBracket;
  int value = 0;  // str(G) when exact, else the upper end
  int lower = 0;
  int upper = 0;
  std::optional<Numbering> witness;  // strength == upper
  std::int64_t nodes = 0;
  std::string reason;  // why the search stopped short, if it did
};

// str(G) by thresholds t = p+1, p+2, ... over the graph without its isolated
// vertices (the witness is lifted back to g). On budget or time exhaustion
// returns the bracket [first undecided t, 2p - 1].
// Throws UndefinedStrengthError without edges and PreconditionError past
// the order cap.
OracleResult exact_strength(const Graph& g, const OracleOptions& options = {});

}  // namespace strength

#endif  // STRENGTH_ORACLE_HPP_
