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

// Acceptance run: one PASS/FAIL line per criterion, each under its time
// limit. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "strength/bounds.hpp"
#include "strength/certify.hpp"
#include "strength/constructions.hpp"
#include "strength/delta_sequence.hpp"
#include "strength/errors.hpp"
#include "strength/families.hpp"
#include "strength/fixtures.hpp"
#include "strength/graph_io.hpp"
#include "strength/labeling.hpp"
#include "strength/oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace strength;
using Clock = std::chrono::steady_clock;

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename A, typename B>
void Expect(const A& actual, const B& expected, const std::string& what) {
  if (!(actual == expected)) {
    std::ostringstream out;
    out << what << ": got " << actual << ", expected " << expected;
    throw Failure(out.str());
  }
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// Each sub-check may also carry its own limit.
template <typename F>
void Timed(double limit, const std::string& what, F&& body) {
  const auto start = Clock::now();
  body();
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  if (s >= limit) {
    throw Failure(what + " took " + std::to_string(s) + " s (limit " +
                  std::to_string(limit) + " s)");
  }
}

Graph Family(const std::string& spec) { return generate(parse_family(spec)); }

int Oracle(const Graph& g) {
  const auto r = exact_strength(g);
  Require(r.status == OracleStatus::kExact, "oracle did not finish on " + write_graph6(g));
  return r.value;
}

int Certified(const Graph& g) {
  const auto r = certify_strength(g);
  Require(r.certificate.has_value(), "no construction for " + write_graph6(g));
  Require(verify_certificate(*r.certificate).status == VerdictStatus::kExact,
          "construction not exact for " + write_graph6(g));
  return r.certificate->claimed;
}

std::string ReproduceFamilies() {
  int checked = 0;
  for (int n = 2; n <= 10; ++n) {
    Timed(1.0, "path " + std::to_string(n), [&] {
      Expect(Oracle(path_graph(n)), n + 1, "oracle str(P_" + std::to_string(n) + ")");
      Expect(Certified(path_graph(n)), n + 1, "construction str(P_" + std::to_string(n) + ")");
    });
    ++checked;
  }
  for (int n = 3; n <= 10; ++n) {
    Timed(1.0, "cycle " + std::to_string(n), [&] {
      Expect(Oracle(cycle_graph(n)), n + 2, "oracle str(C_" + std::to_string(n) + ")");
      Expect(Certified(cycle_graph(n)), n + 2, "construction str(C_" + std::to_string(n) + ")");
    });
    ++checked;
  }
  for (int n = 2; n <= 9; ++n) {
    Timed(1.0, "complete " + std::to_string(n), [&] {
      Expect(Oracle(complete_graph(n)), 2 * n - 1, "oracle str(K_" + std::to_string(n) + ")");
      Expect(Certified(complete_graph(n)), 2 * n - 1,
             "construction str(K_" + std::to_string(n) + ")");
    });
    ++checked;
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = std::max(m, 2); n <= 6; ++n) {
      const std::string name = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      Timed(1.0, name, [&] {
        const Graph g = complete_bipartite(m, n);
        Expect(Oracle(g), m + n + m, "oracle str(" + name + ")");
        const auto c = complete_bipartite_with_sequence(m, n);
        Expect(strength_of(c.graph, label_from_sequence(c.graph, c.sequence)), m + n + m,
               "construction str(" + name + ")");
      });
      ++checked;
    }
  }
  Timed(1.0, "C4+C6+C5+C5+C7", [&] {
    const auto spec = TwoRegularSpec::FromCycleLengths({4, 6, 5, 5, 7});
    const Graph g = spec.graph();
    const auto cert = label_two_regular(spec);
    Expect(cert.claimed, 31, "two-regular construction");
    Expect(strength_of(g, Numbering(cert.witness)), 31, "construction witness");
    for (int len : spec.cycle_lengths()) {
      Expect(Oracle(cycle_graph(len)), len + 2, "oracle on component C_" + std::to_string(len));
    }
    Expect(independence_lower_bound_str(g), 31, "independence bound");
    Require(verify_certificate(cert).status == VerdictStatus::kExact, "certificate not exact");
  });
  ++checked;
  return std::to_string(checked) + " families exact; C4+C6+C5+C5+C7 = 31";
}

std::string Hypercubes() {
  for (int n = 2; n <= 4; ++n) {
    const int expected[] = {0, 0, 6, 11, 21};
    const Graph q = hypercube(n);
    const auto xi = xi_profile(q);
    Expect(q.order() + xi.xi, expected[n], "xi lower bound Q" + std::to_string(n));
    const auto doubled = doubled_hypercube(n);
    Expect(strength_of(doubled.graph, doubled.numbering), expected[n],
           "doubling upper bound Q" + std::to_string(n));
    const auto c = hypercube_certificate(n);
    Require(verify_certificate(c).status == VerdictStatus::kExact,
            "Q" + std::to_string(n) + " certificate not exact");
  }
  const Fixture q5 = load_fixture("Q5");
  Expect(strength_of(q5.graph, q5.numbering), 40, "Q5 fixture strength");
  Expect(hypercube_lower_bound(5), 32 + 4 * 5 - 12, "Q5 lower bound formula");
  Expect(hypercube_lower_bound(5), 40, "Q5 lower bound");
  Require(verify_certificate(hypercube_certificate(5)).status == VerdictStatus::kExact,
          "Q5 certificate not exact");
  const Fixture q6 = load_fixture("Q6");
  Expect(strength_of(q6.graph, q6.numbering), 79, "Q6 fixture strength");
  Expect(hypercube_lower_bound(6), 76, "Q6 lower bound formula");
  const auto v6 = verify_certificate(hypercube_certificate(6));
  Require(v6.status == VerdictStatus::kBracket, "Q6 is not a bracket");
  Expect(v6.lower, 76, "Q6 bracket lower");
  Expect(v6.upper, 79, "Q6 bracket upper");
  return "Q2=6 Q3=11 Q4=21 Q5=40 exact; 76 <= str(Q6) <= 79";
}

std::string SequenceEngine() {
  Timed(5.0, "first example", [] {
    const Graph g = load_fixture("example21").graph;
    const auto r = find_delta_sequence(g);
    Require(r.status == SearchStatus::kFound, "no satisfying delta-sequence");
    Expect(strength_of(g, label_from_sequence(g, *r.sequence)), 14, "first example labeling");
  });
  Timed(5.0, "second example", [] {
    const Graph g = load_fixture("example22").graph;
    const auto delta = find_delta_sequence(g);
    Require(delta.status == SearchStatus::kExhausted,
            std::string("min-degree search: ") + to_string(delta.status));
    SequenceSearchOptions any;
    any.mode = SequenceMode::kAnyDegree;
    const auto r = find_delta_sequence(g, any);
    Require(r.status == SearchStatus::kFound, "no d-sequence");
    Expect(strength_of(g, label_from_sequence(g, *r.sequence)), 17, "second example labeling");
  });
  Timed(5.0, "Q4+K_{4,5}", [] {
    const auto e = embed_minimal(hypercube(4));
    Require(e.certificate.has_value(), "no embedding certificate");
    Expect(e.attached_m, 4, "attached m");
    Expect(e.attached_n, 5, "attached n");
    Expect(e.certificate->claimed, 29, "composed strength");
    Require(verify_certificate(*e.certificate).status == VerdictStatus::kExact,
            "composition not exact");
  });
  return "example 1 str 14; example 2 exhausted then 17; Q4+K_{4,5} = 29";
}

void OracleCheck(const Graph& g, int& found) {
  const std::string id = write_graph6(g);
  const int str = Oracle(g);
  const auto report = bounds_report(g);
  for (const auto& e : report.entries) {
    const bool ok = e.kind == BoundKind::kLower ? e.value <= str : e.value >= str;
    Require(ok, id + ": bound " + e.name + " = " + std::to_string(e.value) +
                    " vs str " + std::to_string(str));
  }
  const auto core = strip_isolated(g);
  const Graph& h = core.graph;
  const int p = h.order();
  if (p - 2 < min_degree(h)) return;
  const auto delta = find_delta_sequence(h);
  Require(delta.status != SearchStatus::kBudgetHit, id + ": budget hit");
  if (delta.sequence) {
    ++found;
    Expect(str, p + min_degree(h), id + ": oracle vs p + delta");
    Expect(strength_of(h, label_from_sequence(h, *delta.sequence)), p + delta.sequence->first_degree(),
           id + ": labeling");
  }
  SequenceSearchOptions any;
  any.mode = SequenceMode::kAnyDegree;
  const auto free = find_delta_sequence(h, any);
  if (free.sequence) {
    Expect(strength_of(h, label_from_sequence(h, *free.sequence)),
           p + free.sequence->first_degree(), id + ": d-sequence labeling");
  }
}

std::string OracleEquivalence() {
  const auto corpus = testing::connected_corpus();
  Expect(corpus.size(), std::size_t{994}, "corpus size");
  int found = 0;
  for (const Graph& g : corpus) OracleCheck(g, found);
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    OracleCheck(testing::random_nonempty_graph(2, 9, rng), found);
  }
  return "994 connected + 200 random graphs; " + std::to_string(found) +
         " certified by delta-sequences";
}

std::string Constructions() {
  BipartiteNumbering current = q2_base_numbering();
  std::size_t edges = 0;
  for (int n = 3; n <= 6; ++n) {
    const BipartiteNumbering next = double_bipartite(current);
    const int p = current.graph.order();
    const int m = p / 2;
    const auto in_x = [&](Vertex v) {
      return std::binary_search(current.part_x.begin(), current.part_x.end(), v);
    };
    const Numbering& f = next.numbering;
    for (Vertex v = 0; v < p; ++v) {
      const bool x = in_x(v);
      // New part X holds labels 1..2m, new part Y holds 2m+1..4m.
      Require(x ? f[v] <= m : (f[v] > 3 * m && f[v] <= 4 * m), "copy 0 block");
      Require(x ? (f[p + v] > 2 * m && f[p + v] <= 3 * m) : (f[p + v] > m && f[p + v] <= 2 * m),
              "copy 1 block");
    }
    for (const auto& [u, v] : next.graph.edges()) {
      const int sum = f[u] + f[v];
      if (v == u + p) {
        Expect(sum, in_x(u) ? 3 * m + 1 : 5 * m + 1, "matching edge sum");
      } else {
        Require(sum <= 5 * m, "copy edge sum exceeds 5m");
      }
      ++edges;
    }
    Expect(strength_of(next.graph, f), 5 * m + 1, "doubled strength Q" + std::to_string(n));
    current = next;
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> lengths;
    int total = 0;
    while (true) {
      const int len = std::uniform_int_distribution<int>(3, 12)(rng);
      if (total + len > 40) break;
      lengths.push_back(len);
      total += len;
      if (std::bernoulli_distribution(0.25)(rng)) break;
    }
    const auto spec = TwoRegularSpec::FromCycleLengths(lengths);
    const auto c = label_two_regular(spec);
    Expect(c.claimed, std::max(spec.order() + 2, spec.order() + 1 + spec.odd_count()),
           "two-regular closed form");
  }
  int small = 0;
  std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& prefix) {
    const int used = std::accumulate(prefix.begin(), prefix.end(), 0);
    for (int len = prefix.empty() ? 3 : prefix.back(); used + len <= 12; ++len) {
      prefix.push_back(len);
      const auto spec = TwoRegularSpec::FromCycleLengths(prefix);
      Expect(label_two_regular(spec).claimed, Oracle(spec.graph()), "two-regular vs oracle");
      ++small;
      walk(prefix);
      prefix.pop_back();
    }
  };
  std::vector<int> prefix;
  walk(prefix);
  return std::to_string(edges) + " doubled edges checked; 100 random two-regular specs; " +
         std::to_string(small) + " specs with p <= 12 match the oracle";
}

std::string Forests() {
  std::mt19937_64 rng(1414);
  int oracle_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int p = std::uniform_int_distribution<int>(3, 14)(rng);
    const Graph t = testing::random_forest(p, rng);
    const std::string id = write_graph6(t);
    const auto seq = forest_delta_sequence(t);
    validate_sequence(t, seq);
    for (int z : seq.prefix_sums) Require(z >= 0, id + ": negative prefix sum");
    const auto prof = pendant_profile(t);
    Require(seq.final_prefix() >= static_cast<int>(prof.pendants.size()) -
                                      static_cast<int>(prof.supports.size()),
            id + ": final prefix below |P_T| - |N_T(P_T)|");
    Expect(strength_of(t, label_from_sequence(t, seq)), p + 1, id + ": labeling");
    if (p <= 12) {
      Expect(Oracle(t), p + 1, id + ": oracle");
      ++oracle_checked;
    }
  }
  return "500 forests; " + std::to_string(oracle_checked) + " confirmed by the oracle";
}

std::string NegativeControls() {
  bool rejected = false;
  try {
    load_fixture("Q5", testing::data_dir() / "corrupted_fixtures");
  } catch (const IntegrityError&) {
    rejected = true;
  }
  Require(rejected, "corrupted fixture directory accepted");

  const Fixture q5 = load_fixture("Q5");
  StrengthCertificate c;
  c.graph = q5.graph;
  c.witness = q5.numbering.labels();
  std::swap(c.witness[0], c.witness[1]);
  c.claimed = 40;
  c.lower_bound_name = kBoundHypercube;
  c.lower_bound_value = 40;
  Require(verify_certificate(c).status == VerdictStatus::kInvalid,
          "corrupted Q5 witness accepted");
  c.witness[0] = c.witness[1];
  Require(verify_certificate(c).status == VerdictStatus::kInvalid,
          "non-bijective Q5 witness accepted");

  Require(feasible_at(cycle_graph(4), 5).status == Feasibility::kInfeasible,
          "C4 feasible at 5");

  std::mt19937_64 rng(1);
  const Graph dense = testing::random_graph(12, 45, rng);
  const auto full = exact_strength(dense);
  Require(full.status == OracleStatus::kExact, "dense graph not settled at the default budget");
  OracleOptions tiny;
  tiny.budget = 10;
  const auto hit = feasible_at(dense, full.value - 1, tiny);
  Require(hit.status == Feasibility::kBudgetHit,
          std::string("dense graph with budget 10: ") + to_string(hit.status));
  Require(feasible_at(dense, full.value - 1).status == Feasibility::kInfeasible,
          "dense graph below its strength not refuted");
  Require(exact_strength(dense, tiny).status == OracleStatus::kBracket,
          "dense graph reported exact at budget 10");

  SequenceSearchOptions small;
  small.budget = 10;
  const Graph g22 = load_fixture("example22").graph;
  const auto cut = find_delta_sequence(g22, small);
  const auto whole = find_delta_sequence(g22);
  Require(cut.status == SearchStatus::kBudgetHit, "sequence search with budget 10 not cut");
  Require(whole.status == SearchStatus::kExhausted, "sequence search not exhausted");
  return "corrupted fixtures rejected; C4 infeasible at 5; budget-hit != exhausted";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "published-value reproduction", 30.0, ReproduceFamilies},
      {2, "hypercubes", 10.0, Hypercubes},
      {3, "delta-sequence engine", 15.0, SequenceEngine},
      {4, "oracle equivalence", 600.0, OracleEquivalence},
      {5, "construction certificates", 300.0, Constructions},
      {6, "forest suite", 300.0, Forests},
      {7, "negative controls", 60.0, NegativeControls},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && s >= c.limit_seconds) {
      ok = false;
      detail = "over the " + std::to_string(c.limit_seconds) + " s limit";
    }
    failed += !ok;
    std::printf("criterion %d %-28s %s  %8.3f s  %s\n", c.id, c.title, ok ? "PASS" : "FAIL",
                s, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
