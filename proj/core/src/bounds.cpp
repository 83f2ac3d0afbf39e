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

#include "strength/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <thread>

#include "strength/constructions.hpp"
#include "strength/delta_sequence.hpp"
#include "strength/errors.hpp"
#include "strength/oracle.hpp"

namespace strength {
namespace {

using Mask = std::uint64_t;

Mask Bit(int v) { return Mask{1} << v; }

// Maximum clique of the complement, colors as the bound.
class IndependentSetSolver {
 public:
  explicit IndependentSetSolver(const Graph& g) : p_(g.order()), non_adjacent_(p_) {
    const Mask all = p_ == 64 ? ~Mask{0} : Bit(p_) - 1;
    for (Vertex v = 0; v < p_; ++v) non_adjacent_[v] = all & ~g.row_mask(v) & ~Bit(v);
  }

  IndependentSet Solve() {
    const Mask all = p_ == 64 ? ~Mask{0} : Bit(p_) - 1;
    Expand(0, all);
    IndependentSet out;
    for (Vertex v = 0; v < p_; ++v) {
      if (best_ & Bit(v)) out.members.push_back(v);
    }
    out.size = static_cast<int>(out.members.size());
    return out;
  }

 private:
  void Expand(Mask current, Mask candidates) {
    if (candidates == 0) {
      if (std::popcount(current) > std::popcount(best_)) best_ = current;
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> color;
    Mask uncolored = candidates;
    for (int k = 1; uncolored; ++k) {
      Mask open = uncolored;
      while (open) {
        const Vertex v = std::countr_zero(open);
        open &= ~Bit(v) & ~non_adjacent_[v];
        uncolored &= ~Bit(v);
        order.push_back(v);
        color.push_back(k);
      }
    }
    const int size = std::popcount(current);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + color[i] <= std::popcount(best_)) return;
      const Vertex v = order[i];
      Expand(current | Bit(v), candidates & non_adjacent_[v]);
      candidates &= ~Bit(v);
    }
  }

  int p_;
  std::vector<Mask> non_adjacent_;
  Mask best_ = 0;
};

// Minimum |N[S]| - |S| over |S| = size, for sets whose smallest vertex is
// `first`.
class ExteriorSearch {
 public:
  ExteriorSearch(const std::vector<Mask>& closed, int size, std::int64_t budget,
                 std::atomic<std::int64_t>& nodes, std::atomic<int>& shared_best)
      : closed_(closed),
        p_(static_cast<int>(closed.size())),
        size_(size),
        budget_(budget),
        nodes_(nodes),
        shared_best_(shared_best) {}

  // Returns false if the budget ran out.
  bool Run(Vertex first) {
    best_ = p_ - size_ + 1;
    return Descend(first, 1, Bit(first), closed_[first]);
  }
  int best() const { return best_; }
  Mask best_set() const { return best_set_; }

 private:
  bool Descend(Vertex last, int k, Mask set, Mask cover) {
    const int value = std::popcount(cover) - size_;
    if (value >= best_ || value > shared_best_.load(std::memory_order_relaxed)) {
      return true;
    }
    if (k == size_) {
      best_ = value;
      best_set_ = set;
      int seen = shared_best_.load(std::memory_order_relaxed);
      while (value < seen && !shared_best_.compare_exchange_weak(seen, value)) {
      }
      return true;
    }
    for (Vertex w = last + 1; w <= p_ - (size_ - k); ++w) {
      if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) return false;
      if (!Descend(w, k + 1, set | Bit(w), cover | closed_[w])) return false;
    }
    return true;
  }

  const std::vector<Mask>& closed_;
  int p_;
  int size_;
  std::int64_t budget_;
  std::atomic<std::int64_t>& nodes_;
  std::atomic<int>& shared_best_;
  int best_ = 0;
  Mask best_set_ = 0;
};

// One size of the profile; nullopt when the budget ran out.
std::optional<XiEntry> ExteriorMinimum(const std::vector<Mask>& closed, int size,
                                       std::int64_t budget, int jobs) {
  const int p = static_cast<int>(closed.size());
  const int firsts = p - size + 1;
  std::vector<int> value(firsts, std::numeric_limits<int>::max());
  std::vector<Mask> sets(firsts, 0);
  std::atomic<std::int64_t> nodes{0};
  std::atomic<int> shared_best{p};
  std::atomic<int> next{0};
  std::atomic<bool> ok{true};
  auto worker = [&] {
    for (int first = next++; first < firsts && ok; first = next++) {
      ExteriorSearch search(closed, size, budget, nodes, shared_best);
      if (!search.Run(first)) {
        ok = false;
        return;
      }
      if (search.best_set()) {
        value[first] = search.best();
        sets[first] = search.best_set();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, firsts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (!ok) return std::nullopt;
  // The first (smallest leading vertex) set attaining the minimum.
  const auto best = std::min_element(value.begin(), value.end());
  XiEntry entry;
  entry.size = size;
  entry.value = *best;
  const Mask set = sets[best - value.begin()];
  for (Vertex v = 0; v < p; ++v) {
    if (set & Bit(v)) entry.witness.push_back(v);
  }
  return entry;
}

// Augmenting-path max flow on the undirected unit-capacity graph, stopping
// once `cap` units are found.
int UnitMaxFlow(const Graph& g, Vertex source, Vertex sink, int cap) {
  const int p = g.order();
  std::vector<int> offset(p + 1, 0);
  for (Vertex v = 0; v < p; ++v) offset[v + 1] = offset[v] + g.degree(v);
  std::vector<Vertex> head(offset[p]);
  std::vector<int> reverse(offset[p]);
  std::vector<int> flow(offset[p], 0);
  for (Vertex v = 0; v < p; ++v) {
    const auto around = g.neighbors(v);
    for (int i = 0; i < static_cast<int>(around.size()); ++i) head[offset[v] + i] = around[i];
  }
  for (Vertex v = 0; v < p; ++v) {
    for (int e = offset[v]; e < offset[v + 1]; ++e) {
      const Vertex w = head[e];
      const auto first = head.begin() + offset[w];
      const auto last = head.begin() + offset[w + 1];
      reverse[e] = static_cast<int>(std::lower_bound(first, last, v) - head.begin());
    }
  }
  int total = 0;
  std::vector<int> via(p);
  while (total < cap) {
    std::fill(via.begin(), via.end(), -1);
    via[source] = -2;
    std::deque<Vertex> queue{source};
    while (!queue.empty() && via[sink] == -1) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (int e = offset[v]; e < offset[v + 1]; ++e) {
        const Vertex w = head[e];
        if (via[w] == -1 && flow[e] < 1) {
          via[w] = e;
          queue.push_back(w);
        }
      }
    }
    if (via[sink] == -1) break;
    for (Vertex v = sink; v != source;) {
      const int e = via[v];
      ++flow[e];
      --flow[reverse[e]];
      v = head[reverse[e]];
    }
    ++total;
  }
  return total;
}

void CheckDimension(int n) {
  if (n < 2 || n > 62) throw ParameterError("hypercube dimension must be in [2, 62]");
}

BoundEntry Entry(std::string name, std::int64_t value, BoundKind kind, std::string note) {
  BoundEntry e;
  e.name = std::move(name);
  e.value = value;
  e.kind = kind;
  e.note = std::move(note);
  return e;
}

void AddConstructionUppers(const Graph& g, const BoundsOptions& options,
                           BoundsReport& report) {
  const int p = g.order();
  const int delta = min_degree(g);
  if (const auto n = recognize_hypercube(g); n && *n >= 2 && *n <= 20) {
    const auto c = hypercube_certificate(*n);
    report.entries.push_back(Entry("hypercube-construction", c.claimed, BoundKind::kUpper,
                                   c.method));
    return;
  }
  if (two_regular_spec_of(g)) {
    const auto c = label_two_regular_graph(g);
    report.entries.push_back(Entry("two-regular-construction", c.claimed,
                                   BoundKind::kUpper, c.method));
    return;
  }
  if (is_forest(g) && p >= 3) {
    report.entries.push_back(Entry("forest-construction", p + 1, BoundKind::kUpper,
                                   "pendant-first delta-sequence"));
    return;
  }
  if (p - 2 < delta) return;
  SequenceSearchOptions search;
  search.budget = options.sequence_budget;
  const auto direct = find_delta_sequence(g, search);
  if (direct.status == SearchStatus::kFound) {
    report.entries.push_back(Entry("delta-sequence", p + direct.sequence->first_degree(),
                                   BoundKind::kUpper, render_arrow_chain(*direct.sequence)));
    return;
  }
  search.mode = SequenceMode::kAnyDegree;
  const auto relaxed = find_delta_sequence(g, search);
  if (relaxed.status == SearchStatus::kFound) {
    report.entries.push_back(Entry("d-sequence", p + relaxed.sequence->first_degree(),
                                   BoundKind::kUpper, render_arrow_chain(*relaxed.sequence)));
  } else {
    report.absent.push_back({"delta-sequence", std::string("search ") +
                                                   to_string(relaxed.status)});
  }
}

}  // namespace

IndependentSet independence_number(const Graph& g, int cap) {
  if (g.order() > cap || g.order() > 64) {
    throw PreconditionError("exact independence number is limited to p <= " +
                            std::to_string(std::min(cap, 64)) + " (p = " +
                            std::to_string(g.order()) + ")");
  }
  if (g.order() == 0) return {};
  return IndependentSetSolver(g).Solve();
}

IndependentSet greedy_independent_set(const Graph& g) {
  std::vector<char> alive(g.order(), 1);
  std::vector<int> degree(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degree[v] = g.degree(v);
  IndependentSet out;
  for (;;) {
    Vertex pick = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (alive[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    }
    if (pick < 0) break;
    out.members.push_back(pick);
    std::vector<Vertex> gone{pick};
    for (Vertex w : g.neighbors(pick)) {
      if (alive[w]) gone.push_back(w);
    }
    for (Vertex v : gone) alive[v] = 0;
    for (Vertex v : gone) {
      for (Vertex w : g.neighbors(v)) {
        if (alive[w]) --degree[w];
      }
    }
  }
  std::sort(out.members.begin(), out.members.end());
  out.size = static_cast<int>(out.members.size());
  return out;
}

int independence_lower_bound_str(const Graph& g, int cap) {
  return 2 * g.order() - 2 * independence_number(g, cap).size + 1;
}

XiProfile xi_profile(const Graph& g, const XiOptions& options) {
  const int p = g.order();
  if (p < 2 || p > 64) throw PreconditionError("xi_profile needs 2 <= p <= 64");
  std::vector<Mask> closed(p);
  for (Vertex v = 0; v < p; ++v) closed[v] = g.row_mask(v) | Bit(v);
  const int last = options.i_max > 0 ? std::min(options.i_max, p - 1) : p - 1;
  XiProfile out;
  out.xi = std::numeric_limits<int>::min();
  for (int size = 1; size <= last; ++size) {
    auto entry = ExteriorMinimum(closed, size, options.budget_per_size, options.jobs);
    if (!entry) {
      out.incomplete_at = size;
      break;
    }
    out.xi = std::max(out.xi, entry->value - size + 1);
    out.x.push_back(std::move(*entry));
    if (options.target && out.xi >= *options.target) break;
  }
  out.complete = static_cast<int>(out.x.size()) == p - 1;
  return out;
}

std::int64_t hypercube_lower_bound(int n) {
  CheckDimension(n);
  const std::int64_t cube = std::int64_t{1} << n;
  switch (n) {
    case 2:
      return 6;
    case 3:
      return 11;
    case 4:
      return 21;
    default:
      break;
  }
  if (n <= 9) return cube + 4 * n - 12;
  if (n % 2 == 0) {
    const std::int64_t m = n / 2;
    return cube + m * m + 4;
  }
  const std::int64_t m = (n + 1) / 2;
  return cube + m * m - m + 4;
}

std::int64_t hypercube_upper_bound(int n) {
  CheckDimension(n);
  return (std::int64_t{1} << n) + (std::int64_t{1} << (n - 2)) + 1;
}

int edge_connectivity(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return 0;
  int best = min_degree(g);
  for (Vertex t = 1; t < g.order() && best > 0; ++t) {
    best = std::min(best, UnitMaxFlow(g, 0, t, best));
  }
  return best;
}

std::optional<int> recognize_hypercube(const Graph& g, std::vector<std::uint32_t>* codes) {
  const int p = g.order();
  if (p < 2 || !std::has_single_bit(static_cast<unsigned>(p))) return std::nullopt;
  const int n = std::countr_zero(static_cast<unsigned>(p));
  if (n > 30 || min_degree(g) != n || max_degree(g) != n) return std::nullopt;
  std::vector<int> dist(p, -1);
  std::vector<std::uint32_t> code(p, 0);
  dist[0] = 0;
  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  const auto around = g.neighbors(0);
  for (int i = 0; i < n; ++i) code[around[i]] = std::uint32_t{1} << i;
  std::vector<Vertex> by_distance(p);
  for (Vertex v = 0; v < p; ++v) {
    if (dist[v] < 0) return std::nullopt;
    by_distance[v] = v;
  }
  std::stable_sort(by_distance.begin(), by_distance.end(),
                   [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  for (Vertex v : by_distance) {
    if (dist[v] < 2) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == dist[v] - 1) code[v] |= code[w];
    }
    if (std::popcount(code[v]) != dist[v]) return std::nullopt;
  }
  std::vector<char> used(p, 0);
  for (Vertex v = 0; v < p; ++v) {
    if (code[v] >= static_cast<std::uint32_t>(p) || used[code[v]]) return std::nullopt;
    used[code[v]] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (std::popcount(code[v] ^ code[w]) != 1) return std::nullopt;
    }
  }
  if (codes) *codes = std::move(code);
  return n;
}

const char* to_string(BoundKind kind) {
  return kind == BoundKind::kLower ? "lower" : "upper";
}

std::optional<std::int64_t> BoundsReport::value_of(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e.value;
  }
  return std::nullopt;
}

BoundsReport bounds_report(const Graph& input, const BoundsOptions& options) {
  if (input.size() == 0) throw UndefinedStrengthError("strength is undefined without edges");
  const InducedSubgraph core = strip_isolated(input);
  const Graph& g = core.graph;
  const int p = g.order();
  BoundsReport report;
  report.order = p;
  report.stripped_isolated = input.order() - p;

  const int delta = min_degree(g);
  report.entries.push_back(Entry(std::string(kBoundMinDegree), p + delta, BoundKind::kLower,
                                 "p + min degree"));
  report.entries.push_back(Entry(std::string(kBoundMaxDegree), max_degree(g) + 2,
                                 BoundKind::kLower, "max degree + 2"));
  if (is_connected(g)) {
    report.entries.push_back(Entry(std::string(kBoundEdgeConnectivity),
                                   p + edge_connectivity(g), BoundKind::kLower,
                                   "p + edge connectivity"));
  } else {
    report.absent.push_back({std::string(kBoundEdgeConnectivity), "graph is disconnected"});
  }
  if (p <= kIndependenceCap) {
    const auto alpha = independence_number(g);
    auto e = Entry(std::string(kBoundIndependence), 2 * p - 2 * alpha.size + 1,
                   BoundKind::kLower, "2p - 2*alpha + 1, alpha = " + std::to_string(alpha.size));
    e.witness = alpha.members;
    report.entries.push_back(std::move(e));
  } else {
    report.absent.push_back({std::string(kBoundIndependence),
                             "exact alpha limited to p <= " + std::to_string(kIndependenceCap)});
  }
  if (p <= 64) {
    XiOptions xi;
    xi.i_max = options.xi_i_max > 0 ? options.xi_i_max : (p <= 16 ? 0 : 4);
    xi.budget_per_size = options.xi_budget;
    xi.jobs = options.jobs;
    const auto profile = xi_profile(g, xi);
    if (!profile.x.empty()) {
      const auto best = std::max_element(
          profile.x.begin(), profile.x.end(), [](const XiEntry& a, const XiEntry& b) {
            return a.value - a.size < b.value - b.size;
          });
      std::string note = "p + xi, sizes 1.." + std::to_string(profile.x.size());
      if (profile.incomplete_at) {
        note += " (budget ran out at size " + std::to_string(profile.incomplete_at) + ")";
      }
      auto e = Entry(std::string(kBoundXi), p + profile.xi, BoundKind::kLower, note);
      e.witness = best->witness;
      report.entries.push_back(std::move(e));
    }
  } else {
    report.absent.push_back({std::string(kBoundXi), "subset enumeration limited to p <= 64"});
  }
  if (const auto n = recognize_hypercube(g); n && *n >= 2) {
    report.entries.push_back(Entry(std::string(kBoundHypercube), hypercube_lower_bound(*n),
                                   BoundKind::kLower,
                                   "closed form for Q" + std::to_string(*n)));
  }

  report.entries.push_back(Entry("2p-1", 2 * p - 1, BoundKind::kUpper, "any numbering"));
  if (options.constructions) AddConstructionUppers(g, options, report);

  report.best_lower = std::numeric_limits<std::int64_t>::min();
  report.best_upper = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : report.entries) {
    if (e.kind == BoundKind::kLower && e.value > report.best_lower) {
      report.best_lower = e.value;
      report.best_lower_name = e.name;
    }
    if (e.kind == BoundKind::kUpper && e.value < report.best_upper) {
      report.best_upper = e.value;
      report.best_upper_name = e.name;
    }
  }
  return report;
}

std::optional<int> recompute_lower_bound(const Graph& input, std::string_view name,
                                         std::optional<int> target) {
  if (input.size() == 0) return std::nullopt;
  const InducedSubgraph core = strip_isolated(input);
  const Graph& g = core.graph;
  const int p = g.order();
  if (name == kBoundMinDegree) return p + min_degree(g);
  if (name == kBoundMaxDegree) return max_degree(g) + 2;
  if (name == kBoundEdgeConnectivity) {
    if (!is_connected(g)) return std::nullopt;
    return p + edge_connectivity(g);
  }
  if (name == kBoundIndependence) {
    if (p > kIndependenceCap) return std::nullopt;
    return independence_lower_bound_str(g);
  }
  if (name == kBoundXi) {
    if (p < 2 || p > 64) return std::nullopt;
    XiOptions xi;
    if (target) {
      xi.target = *target - p;
    } else if (p > 16) {
      xi.i_max = 4;
    }
    const auto profile = xi_profile(g, xi);
    if (profile.x.empty()) return std::nullopt;
    return p + profile.xi;
  }
  if (name == kBoundHypercube) {
    const auto n = recognize_hypercube(g);
    if (!n || *n < 2) return std::nullopt;
    return static_cast<int>(hypercube_lower_bound(*n));
  }
  if (name == kBoundExhaustive) {
    if (p > kOracleOrderCap) return std::nullopt;
    if (target) {
      OracleOptions oracle;
      const auto result = feasible_at(g, *target - 1, oracle);
      if (result.status == Feasibility::kInfeasible) return *target;
    }
    const auto result = exact_strength(g);
    if (result.status != OracleStatus::kExact) return std::nullopt;
    return result.value;
  }
  return std::nullopt;
}

}  // namespace strength
