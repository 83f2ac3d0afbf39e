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

#include "strength/repro.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "strength/bounds.hpp"
#include "strength/constructions.hpp"
#include "strength/delta_sequence.hpp"
#include "strength/errors.hpp"
#include "strength/families.hpp"
#include "strength/fixtures.hpp"
#include "strength/labeling.hpp"
#include "strength/oracle.hpp"

namespace strength {
namespace {

struct CheckDef {
  std::string id;
  std::vector<std::string> tags;
  std::string description;
  std::string expected;
  std::function<std::string()> run;
};

template <typename Range>
std::string Join(const Range& values, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

Graph Family(std::string_view text) { return generate(parse_family(text)); }

std::string CertificateSummary(const StrengthCertificate& c) {
  const Verdict v = verify_certificate(c);
  if (v.status == VerdictStatus::kExact) return "exact " + std::to_string(v.upper);
  if (v.status == VerdictStatus::kBracket) {
    return "bracket [" + std::to_string(v.lower) + "," + std::to_string(v.upper) + "]";
  }
  return "invalid: " + v.reason;
}

// "fails" or "satisfies" for each printed sequence, after checking that the
// replayed profile and prefix sums match the printed ones.
std::string ReplayPrinted(const Fixture& fx) {
  std::vector<std::string> verdicts;
  for (const auto& printed : fx.sequences) {
    const auto mode = printed.min_degree ? SequenceMode::kMinDegree : SequenceMode::kAnyDegree;
    const DeltaSequence seq = sequence_from_choices(fx.graph, printed.choices, mode);
    std::vector<std::pair<int, int>> profile;
    for (const auto& step : seq.steps) profile.emplace_back(step.m, step.d);
    if (profile != printed.profile) return "profile mismatch";
    if (seq.prefix_sums != printed.prefix_sums) return "prefix sums mismatch";
    verdicts.push_back(seq.satisfies_condition() ? "satisfies" : "fails");
  }
  return Join(verdicts);
}

std::vector<CheckDef> Checks(const ReproOptions& options) {
  auto fixture = [dir = options.fixture_dir](const char* name) {
    return load_fixture(name, dir);
  };
  std::vector<CheckDef> checks;

  checks.push_back({"union-order", {"graph-core", "two-regular"},
                    "C4+C6+C5+C5+C7 has p = 27", "27", [] {
                      return std::to_string(Family("two-regular:4,6,5,5,7").order());
                    }});
  checks.push_back({"q5-table", {"hypercube", "fixtures"},
                    "the printed Q5 numbering has strength 40", "40",
                    [=] { return std::to_string(fixture("Q5").strength); }});
  checks.push_back({"q5-marginals", {"hypercube", "fixtures"},
                    "printed Q5 row and column maxima agree with the cells", "none", [=] {
                      const auto fx = fixture("Q5");
                      return fx.divergences.empty() ? std::string("none")
                                                    : std::to_string(fx.divergences.size());
                    }});
  checks.push_back({"q6-table", {"hypercube", "fixtures"},
                    "the printed Q6 numbering has strength 79", "79",
                    [=] { return std::to_string(fixture("Q6").strength); }});
  checks.push_back({"example21-labeling", {"delta-seq", "fixtures"},
                    "the example labeling of G1 has strength 14", "14",
                    [=] { return std::to_string(fixture("example21").strength); }});
  checks.push_back({"example22-labeling", {"delta-seq", "fixtures"},
                    "the example labeling of G has strength p + delta = 17", "17",
                    [=] { return std::to_string(fixture("example22").strength); }});
  checks.push_back({"isolated-invariance", {"labeling"},
                    "adding 2 isolated vertices keeps strength 14", "14 on 14 vertices", [=] {
                      const auto fx = fixture("example21");
                      const Numbering f = extend_over_isolated(fx.graph, fx.numbering, 2);
                      std::vector<Graph> parts{fx.graph, Graph(2)};
                      const Graph g = disjoint_union(parts);
                      return std::to_string(strength_of(g, f)) + " on " +
                             std::to_string(g.order()) + " vertices";
                    }});
  checks.push_back({"example21-chains", {"delta-seq"},
                    "the two printed delta-sequences of G1: the first fails, the second "
                    "satisfies the prefix condition",
                    "fails,satisfies", [=] { return ReplayPrinted(fixture("example21")); }});
  checks.push_back({"example21-search", {"delta-seq"},
                    "search finds a satisfying delta-sequence of G1 and labels it with 14",
                    "found 14", [=] {
                      const auto fx = fixture("example21");
                      const auto r = find_delta_sequence(fx.graph);
                      if (r.status != SearchStatus::kFound) return std::string(to_string(r.status));
                      return "found " + std::to_string(
                                            strength_of(fx.graph,
                                                        label_from_sequence(fx.graph, *r.sequence)));
                    }});
  checks.push_back({"example22-chains", {"delta-seq"},
                    "printed sequences of G: both delta-sequences fail, the d-sequence has "
                    "z = 1,0,0",
                    "fails,fails,satisfies", [=] { return ReplayPrinted(fixture("example22")); }});
  checks.push_back({"example22-exhausted", {"delta-seq"},
                    "no delta-sequence of G satisfies the prefix condition", "exhausted", [=] {
                      return std::string(
                          to_string(find_delta_sequence(fixture("example22").graph).status));
                    }});
  checks.push_back({"example22-any-degree", {"delta-seq"},
                    "a d-sequence with d_1 = 2 certifies str(G) = 17", "found 17", [=] {
                      const auto fx = fixture("example22");
                      SequenceSearchOptions o;
                      o.mode = SequenceMode::kAnyDegree;
                      o.first_at_min_degree = true;
                      const auto r = find_delta_sequence(fx.graph, o);
                      if (r.status != SearchStatus::kFound) return std::string(to_string(r.status));
                      return "found " + std::to_string(
                                            strength_of(fx.graph,
                                                        label_from_sequence(fx.graph, *r.sequence)));
                    }});
  checks.push_back({"star-sequence", {"delta-seq", "forest"},
                    "K_{1,k} has the sequence {T, (k-1)K1} with z_2 = k (k = 3..6)",
                    "3,4,5,6", [] {
                      std::vector<int> z;
                      for (int k = 3; k <= 6; ++k) {
                        z.push_back(forest_delta_sequence(star_graph(k)).prefix_sums.front());
                      }
                      return Join(z);
                    }});
  checks.push_back({"forest-corollary", {"delta-seq", "forest"},
                    "forests without isolated vertices have str = p + 1 (exact search)",
                    "5,6,8,9", [] {
                      std::vector<int> values;
                      for (const char* f : {"path:4", "star:4", "forest:7:0-1,1-2,2-3,0-4,4-5,0-6",
                                            "path:3+path:5"}) {
                        values.push_back(exact_strength(Family(f)).value);
                      }
                      return Join(values);
                    }});
  checks.push_back({"one-point-union", {"delta-seq"},
                    "one-point union of C3, C4, C5 (p = 10) has str = p + 2", "12 12", [] {
                      const Graph g = Family("one-point-union:3,4,5");
                      const auto r = find_delta_sequence(g);
                      const int constructed = strength_of(g, label_from_sequence(g, *r.sequence));
                      return std::to_string(constructed) + " " +
                             std::to_string(exact_strength(g).value);
                    }});
  checks.push_back({"wheel-fan", {"delta-seq"},
                    "wheel W_5 and fan F_5 (p = 6) have str = p + delta", "9 9,8 8", [] {
                      std::vector<std::string> out;
                      for (const char* f : {"wheel:5", "fan:5"}) {
                        const Graph g = Family(f);
                        const auto r = find_delta_sequence(g);
                        out.push_back(
                            std::to_string(strength_of(g, label_from_sequence(g, *r.sequence))) +
                            " " + std::to_string(exact_strength(g).value));
                      }
                      return Join(out);
                    }});
  checks.push_back({"q4-plus-k45", {"delta-seq", "hypercube"},
                    "Q4 + K_{4,5}: Z = -1, n = 5, str = 25 + 4 = 29", "Z=-1 n=5 exact 29", [] {
                      const auto r = embed_minimal(hypercube(4));
                      return "Z=" + std::to_string(r.h_min_prefix) +
                             " n=" + std::to_string(r.attached_n) + " " +
                             CertificateSummary(*r.certificate);
                    }});
  checks.push_back({"odd-cycles-plus-k2", {"delta-seq", "two-regular"},
                    "k odd cycles plus K_{2,k+1}: str = |V| + (k+3) + 2 (k = 1..3)",
                    "11,19,25", [] {
                      std::vector<int> values;
                      for (const char* f : {"cycle:5", "two-regular:5,7", "two-regular:5,5,7"}) {
                        const Graph h = Family(f);
                        const int k = two_regular_spec_of(h)->odd_count();
                        SequenceSearchOptions o;
                        o.mode = SequenceMode::kAnyDegree;
                        o.first_at_min_degree = true;
                        const auto best = best_prefix_sequence(h, o);
                        const auto t = complete_bipartite_with_sequence(2, k + 1);
                        const auto joined =
                            compose_h_plus_t(h, *best.sequence, t.graph, t.sequence);
                        values.push_back(strength_of(
                            joined.graph, label_from_sequence(joined.graph, joined.sequence)));
                      }
                      return Join(values);
                    }});
  checks.push_back({"example22-embed", {"delta-seq"},
                    "embedding G needs no extension: str(G) = 17 exactly", "same exact 17", [=] {
                      const auto r = embed_minimal(fixture("example22").graph);
                      return std::string(r.extended ? "extended " : "same ") +
                             CertificateSummary(*r.certificate);
                    }});
  checks.push_back({"two-regular-alpha", {"bounds", "two-regular"},
                    "alpha(C4+C6+C5+C5+C7) = 2+3+2+2+3 = 12", "12", [] {
                      return std::to_string(
                          independence_number(Family("two-regular:4,6,5,5,7")).size);
                    }});
  checks.push_back({"two-regular-independence", {"bounds", "two-regular"},
                    "independence bound on C4+C6+C5+C5+C7 is 31", "31", [] {
                      return std::to_string(
                          independence_lower_bound_str(Family("two-regular:4,6,5,5,7")));
                    }});
  checks.push_back({"two-regular-bound-beats-delta", {"bounds", "two-regular"},
                    "C5+C5+C7: independence 21 beats p + delta = 19", "21>19", [] {
                      const auto r = bounds_report(Family("two-regular:5,5,7"));
                      return std::to_string(*r.value_of(kBoundIndependence)) + ">" +
                             std::to_string(*r.value_of(kBoundMinDegree));
                    }});
  checks.push_back({"two-regular-blocks", {"constructions", "two-regular"},
                    "C4+C6+C5+C5+C7 labeled by the printed blocks, str = 31",
                    "1,27,2,26|3,25,4,24,5,23|6,22,7,21,8|9,20,10,19,11|12,18,13,17,14,16,15 "
                    "exact 31",
                    [] {
                      const auto spec = TwoRegularSpec::FromCycleLengths({4, 6, 5, 5, 7});
                      const auto c = label_two_regular(spec);
                      std::vector<std::string> blocks;
                      std::size_t at = 0;
                      for (int n : spec.cycle_lengths()) {
                        std::vector<int> block(c.witness.begin() + at,
                                               c.witness.begin() + at + n);
                        blocks.push_back(Join(block));
                        at += n;
                      }
                      return Join(blocks, "|") + " " + CertificateSummary(c);
                    }});
  checks.push_back({"q4-xi", {"bounds", "hypercube"},
                    "Q4: x_1..x_4 = 4,6,7,7 and str >= 16 + 5 = 21", "4,6,7,7 -> 21", [] {
                      XiOptions o;
                      o.i_max = 4;
                      const auto profile = xi_profile(hypercube(4), o);
                      std::vector<int> x;
                      for (const auto& e : profile.x) x.push_back(e.value);
                      return Join(x) + " -> " + std::to_string(16 + profile.xi);
                    }});
  checks.push_back({"qn-closed-forms", {"bounds", "hypercube"},
                    "x_i of Q_n equal n, 2n-2, 3n-5, 4n-9 (n = 4, 5)",
                    "4,6,7,7;5,8,10,11", [] {
                      std::vector<std::string> rows;
                      for (int n : {4, 5}) {
                        XiOptions o;
                        o.i_max = 4;
                        std::vector<int> x;
                        for (const auto& e : xi_profile(hypercube(n), o).x) x.push_back(e.value);
                        rows.push_back(Join(x));
                      }
                      return Join(rows, ";");
                    }});
  checks.push_back({"hypercube-lower", {"bounds", "hypercube"},
                    "lower bounds for Q_n, n = 2,3,4,5,6,10,11", "6,11,21,40,76,1053,2082", [] {
                      std::vector<std::int64_t> v;
                      for (int n : {2, 3, 4, 5, 6, 10, 11}) v.push_back(hypercube_lower_bound(n));
                      return Join(v);
                    }});
  checks.push_back({"hypercube-upper", {"bounds", "hypercube"},
                    "2^n + 2^(n-2) + 1 for n = 2, 5, 6", "6,41,81", [] {
                      std::vector<std::int64_t> v;
                      for (int n : {2, 5, 6}) v.push_back(hypercube_upper_bound(n));
                      return Join(v);
                    }});
  checks.push_back({"q4-bounds-report", {"bounds", "hypercube"},
                    "bounds on Q4 meet at 21", "21..21", [] {
                      const auto r = bounds_report(hypercube(4));
                      return std::to_string(r.best_lower) + ".." + std::to_string(r.best_upper);
                    }});
  checks.push_back({"doubling", {"constructions", "hypercube"},
                    "doubling Q2 gives str 11 on Q3 and 21 on Q4", "11,21", [] {
                      const auto q3 = double_bipartite(q2_base_numbering());
                      const auto q4 = double_bipartite(q3);
                      return std::to_string(strength_of(q3.graph, q3.numbering)) + "," +
                             std::to_string(strength_of(q4.graph, q4.numbering));
                    }});
  checks.push_back({"hypercube-certificates", {"constructions", "hypercube"},
                    "str(Q2)=6, str(Q3)=11, str(Q4)=21, str(Q5)=40, 76<=str(Q6)<=79, Q7 in "
                    "[144,161]",
                    "exact 6;exact 11;exact 21;exact 40;bracket [76,79];bracket [144,161]", [] {
                      std::vector<std::string> out;
                      for (int n = 2; n <= 7; ++n) {
                        out.push_back(CertificateSummary(hypercube_certificate(n)));
                      }
                      return Join(out, ";");
                    }});
  checks.push_back({"complete-bipartite", {"oracle"},
                    "str(K_{2,3}) = |V| + m = 7", "7",
                    [] { return std::to_string(exact_strength(complete_bipartite(2, 3)).value); }});
  checks.push_back({"q3-threshold", {"oracle", "hypercube"},
                    "Q3 has no numbering of strength 10 but one of strength 11",
                    "infeasible,feasible", [] {
                      const Graph q3 = hypercube(3);
                      return std::string(to_string(feasible_at(q3, 10).status)) + "," +
                             to_string(feasible_at(q3, 11).status);
                    }});
  return checks;
}

bool Selected(const CheckDef& c, const std::optional<std::string>& filter) {
  if (!filter || filter->empty()) return true;
  if (c.id.find(*filter) != std::string::npos) return true;
  for (const auto& t : c.tags) {
    if (t == *filter) return true;
  }
  return false;
}

}  // namespace

ReproReport run_repro(const ReproOptions& options) {
  ReproReport report;
  for (auto& def : Checks(options)) {
    if (!Selected(def, options.filter)) continue;
    ReproCheck check;
    check.id = def.id;
    check.tags = def.tags;
    check.description = def.description;
    check.expected = def.expected;
    const auto start = std::chrono::steady_clock::now();
    try {
      check.actual = def.run();
      check.passed = check.actual == check.expected;
    } catch (const std::exception& e) {
      check.error = e.what();
      check.actual = "error";
    }
    check.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    (check.passed ? report.passed : report.failed) += 1;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace strength
