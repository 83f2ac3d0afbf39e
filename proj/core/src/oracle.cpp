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

#include "strength/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

#include "strength/errors.hpp"
#include "strength/symmetry.hpp"

namespace strength {
namespace {

using Clock = std::chrono::steady_clock;

struct Limits {
  std::int64_t budget = 0;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
};

enum class Outcome { kFound, kDead, kAbort };

class LabelSearch {
 public:
  LabelSearch(const Graph& g, int t, const std::vector<Vertex>& twins, Limits& limits,
              const std::atomic<int>& first_found, int root_index)
      : g_(g),
        p_(g.order()),
        t_(t),
        twins_(twins),
        limits_(limits),
        first_found_(first_found),
        root_index_(root_index),
        label_(p_, 0),
        cap_(p_, p_),
        open_degree_(p_) {
    for (Vertex v = 0; v < p_; ++v) open_degree_[v] = g.degree(v);
  }

  // Places label p on `root`, then searches the rest.
  Outcome RunFrom(Vertex root) {
    if (!Tick()) return Outcome::kAbort;
    Place(root, p_);
    return Descend(p_ - 1);
  }

  std::vector<int> labels() const { return label_; }

 private:
  bool Tick() {
    const std::int64_t n = limits_.nodes.fetch_add(1, std::memory_order_relaxed);
    if (n >= limits_.budget) {
      limits_.out_of_budget = true;
      return false;
    }
    if (first_found_.load(std::memory_order_relaxed) < root_index_) return false;
    if (limits_.deadline && (n & 1023) == 0 && Clock::now() > *limits_.deadline) {
      limits_.out_of_budget = true;
      return false;
    }
    return !limits_.out_of_budget.load(std::memory_order_relaxed);
  }

  void Place(Vertex v, int l) {
    label_[v] = l;
    for (Vertex w : g_.neighbors(v)) {
      --open_degree_[w];
      if (!label_[w]) cap_[w] = std::min(cap_[w], t_ - l);
    }
  }

  // Every open vertex needs a label in 1..cap; labels 1..l remain.
  bool HallHolds(int l) const {
    std::vector<int> count(l + 1, 0);
    for (Vertex v = 0; v < p_; ++v) {
      if (label_[v]) continue;
      if (cap_[v] < 1) return false;
      ++count[std::min(cap_[v], l)];
    }
    int running = 0;
    for (int k = 1; k <= l; ++k) {
      running += count[k];
      if (running > k) return false;
    }
    return true;
  }

  Outcome Descend(int l) {
    if (l == 0) return Outcome::kFound;
    if (!HallHolds(l)) return Outcome::kDead;
    if (2 * l - 1 <= t_) {
      // Edges among the open vertices can no longer exceed t.
      std::vector<Vertex> open;
      for (Vertex v = 0; v < p_; ++v) {
        if (!label_[v]) open.push_back(v);
      }
      std::stable_sort(open.begin(), open.end(),
                       [&](Vertex a, Vertex b) { return cap_[a] < cap_[b]; });
      for (int i = 0; i < l; ++i) label_[open[i]] = i + 1;
      return Outcome::kFound;
    }
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < p_; ++v) {
      if (label_[v] || cap_[v] < l) continue;
      bool dominated = false;
      for (Vertex u = twins_[v]; u < v; ++u) {
        if (twins_[u] == twins_[v] && !label_[u]) {
          dominated = true;
          break;
        }
      }
      if (!dominated) candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      return open_degree_[a] < open_degree_[b];
    });
    for (Vertex v : candidates) {
      if (!Tick()) return Outcome::kAbort;
      std::vector<int> saved = cap_;
      Place(v, l);
      const Outcome o = Descend(l - 1);
      if (o == Outcome::kFound) return o;
      label_[v] = 0;
      for (Vertex w : g_.neighbors(v)) ++open_degree_[w];
      cap_ = std::move(saved);
      if (o == Outcome::kAbort) return o;
    }
    return Outcome::kDead;
  }

  const Graph& g_;
  int p_;
  int t_;
  const std::vector<Vertex>& twins_;
  Limits& limits_;
  const std::atomic<int>& first_found_;
  int root_index_;
  std::vector<int> label_;
  std::vector<int> cap_;
  std::vector<int> open_degree_;
};

FeasibilityResult Feasible(const Graph& g, int t, const OracleOptions& options,
                           Limits& limits) {
  const int p = g.order();
  FeasibilityResult out;
  const std::int64_t start_nodes = limits.nodes.load();
  if (g.size() == 0 || t >= 2 * p - 1) {
    std::vector<int> identity(p);
    for (int i = 0; i < p; ++i) identity[i] = i + 1;
    out.status = Feasibility::kFeasible;
    out.witness = Numbering(std::move(identity));
    return out;
  }
  if (t < 3) return out;

  std::vector<Vertex> twins(p);
  std::vector<Vertex> roots;
  if (options.symmetry) {
    twins = twin_classes(g);
    const auto orbits = automorphism_orbits(g);
    for (Vertex v = 0; v < p; ++v) {
      if (orbits[v] == v) roots.push_back(v);
    }
  } else {
    for (Vertex v = 0; v < p; ++v) {
      twins[v] = v;
      roots.push_back(v);
    }
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

  const int count = static_cast<int>(roots.size());
  std::vector<Outcome> outcome(count, Outcome::kAbort);
  std::vector<std::vector<int>> found(count);
  std::atomic<int> first_found{std::numeric_limits<int>::max()};
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      if (first_found.load() < i || limits.out_of_budget.load()) continue;
      LabelSearch search(g, t, twins, limits, first_found, i);
      outcome[i] = search.RunFrom(roots[i]);
      if (outcome[i] == Outcome::kFound) {
        found[i] = search.labels();
        int seen = first_found.load();
        while (i < seen && !first_found.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  const int threads = std::clamp(options.jobs, 1, count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  out.nodes = limits.nodes.load() - start_nodes;
  for (int i = 0; i < count; ++i) {
    if (outcome[i] == Outcome::kFound) {
      out.status = Feasibility::kFeasible;
      out.witness = Numbering(std::move(found[i]));
      return out;
    }
    if (outcome[i] == Outcome::kAbort) {
      out.status = Feasibility::kBudgetHit;
      return out;
    }
  }
  out.status = Feasibility::kInfeasible;
  return out;
}

void CheckOrder(const Graph& g, const OracleOptions& options) {
  if (g.order() > options.order_cap) {
    throw PreconditionError("exact search is limited to p <= " +
                            std::to_string(options.order_cap) + " (p = " +
                            std::to_string(g.order()) + ")");
  }
}

void StartClock(Limits& limits, const OracleOptions& options) {
  limits.budget = options.budget;
  if (options.time_limit_seconds > 0) {
    limits.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(
                                             options.time_limit_seconds));
  }
}

}  // namespace

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible:
      return "feasible";
    case Feasibility::kInfeasible:
      return "infeasible";
    case Feasibility::kBudgetHit:
      return "budget-hit";
  }
  return "infeasible";
}

const char* to_string(OracleStatus s) {
  return s == OracleStatus::kExact ? "exact" : "bracket";
}

FeasibilityResult feasible_at(const Graph& g, int t, const OracleOptions& options) {
  CheckOrder(g, options);
  Limits limits;
  StartClock(limits, options);
  return Feasible(g, t, options, limits);
}

OracleResult exact_strength(const Graph& input, const OracleOptions& options) {
  if (input.size() == 0) throw UndefinedStrengthError("strength is undefined without edges");
  const InducedSubgraph core = strip_isolated(input);
  const Graph& g = core.graph;
  CheckOrder(g, options);
  const int p = g.order();
  Limits limits;
  StartClock(limits, options);

  OracleResult out;
  // The vertex labeled p has a neighbor, so str >= p + 1.
  for (int t = p + 1; t <= 2 * p - 1; ++t) {
    auto step = Feasible(g, t, options, limits);
    if (step.status == Feasibility::kFeasible) {
      out.status = OracleStatus::kExact;
      out.value = out.lower = out.upper = t;
      out.witness = lift_over_isolated(input.order(), core.to_parent, *step.witness);
      out.nodes = limits.nodes.load();
      return out;
    }
    if (step.status == Feasibility::kBudgetHit) {
      std::vector<int> identity(p);
      for (int i = 0; i < p; ++i) identity[i] = i + 1;
      out.status = OracleStatus::kBracket;
      out.lower = t;
      out.upper = out.value = 2 * p - 1;
      out.witness = lift_over_isolated(input.order(), core.to_parent,
                                       Numbering(std::move(identity)));
      out.nodes = limits.nodes.load();
      out.reason = "search budget or time limit reached at threshold " + std::to_string(t);
      return out;
    }
  }
  throw IntegrityError("no threshold up to 2p - 1 was feasible");
}

}  // namespace strength
