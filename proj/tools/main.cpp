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

// strength: command-line front end.
//
//   strength bounds   --family hypercube:4
//   strength label    --fixture example21 --json
//   strength exact    --family complete-bipartite:2,3
//   strength verify   --certificate cert.json
//   strength sequence --graph6 'D?{' --mode any
//   strength embed    --family hypercube:4 --connect
//   strength repro    --filter hypercube
//
// Exit codes: 0 success, 2 invalid input, 3 budget hit or inconclusive,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "strength/bounds.hpp"
#include "strength/certify.hpp"
#include "strength/delta_sequence.hpp"
#include "strength/errors.hpp"
#include "strength/families.hpp"
#include "strength/fixtures.hpp"
#include "strength/graph_io.hpp"
#include "strength/labeling.hpp"
#include "strength/oracle.hpp"
#include "strength/repro.hpp"
#include "strength/serialize.hpp"

namespace {

using Json = nlohmann::json;
using strength::Graph;

enum Exit : int { kOk = 0, kInvalid = 2, kInconclusive = 3, kVerifyFailed = 4 };

struct InputFlags {
  std::string family;
  std::string graph6;
  std::string edges;
  std::string file;
  std::string fixture;
  std::string random;  // "p:q"
};

struct CommonFlags {
  bool json = false;
  std::string dot;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> budget;
  int jobs = 1;
  double time_limit = 0;
  std::string mode = "auto";
};

struct Input {
  Graph graph;
  std::string descriptor;
  std::optional<strength::Fixture> fixture;
};

// What a subcommand produced: the JSON result, a human rendering and the
// exit code.
struct Outcome {
  Json result;
  std::string text;
  int code = kOk;
  std::vector<int> dot_labels;
  std::optional<Graph> dot_graph;
};

Graph RandomGraph(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw strength::ParameterError("--random expects P:Q");
  const int p = std::stoi(spec.substr(0, colon));
  const int q = std::stoi(spec.substr(colon + 1));
  if (p < 1 || q < 0 || q > p * (p - 1) / 2) {
    throw strength::ParameterError("--random: need p >= 1 and 0 <= q <= p(p-1)/2");
  }
  std::vector<strength::Edge> pairs;
  for (int u = 0; u < p; ++u) {
    for (int v = u + 1; v < p; ++v) pairs.emplace_back(u, v);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(q);
  return Graph::FromEdges(p, pairs);
}

Input LoadInput(const InputFlags& in, const CommonFlags& common) {
  const int given = !in.family.empty() + !in.graph6.empty() + !in.edges.empty() +
                    !in.file.empty() + !in.fixture.empty() + !in.random.empty();
  if (given != 1) {
    throw strength::ParameterError(
        "give exactly one of --family, --graph6, --edges, --file, --fixture, --random");
  }
  Input out;
  if (!in.family.empty()) {
    const auto spec = strength::parse_family(in.family);
    out.graph = strength::generate(spec);
    out.descriptor = "family " + strength::to_string(spec);
  } else if (!in.graph6.empty()) {
    out.graph = strength::parse_graph6(in.graph6);
    out.descriptor = "graph6 " + in.graph6;
  } else if (!in.edges.empty()) {
    out.graph = strength::parse_edge_list(strength::read_text_file(in.edges));
    out.descriptor = "edges " + in.edges;
  } else if (!in.file.empty()) {
    out.graph = strength::load_graph_file(in.file);
    out.descriptor = "file " + in.file;
  } else if (!in.fixture.empty()) {
    out.fixture = strength::load_fixture(in.fixture);
    out.graph = out.fixture->graph;
    out.descriptor = "fixture " + in.fixture;
  } else {
    out.graph = RandomGraph(in.random, common.seed);
    out.descriptor = "random " + in.random + " seed " + std::to_string(common.seed);
  }
  return out;
}

void AddInputFlags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--family", in.family, "family spec, e.g. hypercube:4 or cycle:4+cycle:5");
  cmd->add_option("--graph6", in.graph6, "graph6 string");
  cmd->add_option("--edges", in.edges, "edge-list file: 'p q' then one 'u v' per line");
  cmd->add_option("--file", in.file, "graph file; .g6/.graph6 read as graph6, else edge list");
  cmd->add_option("--fixture", in.fixture, "Q5, Q6, example21 or example22");
  cmd->add_option("--random", in.random, "random graph with P vertices and Q edges (P:Q)");
}

void AddCommonFlags(CLI::App* cmd, CommonFlags& c) {
  cmd->add_flag("--json", c.json, "print a JSON run record");
  cmd->add_option("--dot", c.dot, "write the labeled graph as Graphviz DOT");
  cmd->add_option("--seed", c.seed, "seed for --random")->capture_default_str();
  cmd->add_option("--budget", c.budget, "search node budget");
  cmd->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
  cmd->add_option("--time-limit", c.time_limit, "seconds; 0 means none")->capture_default_str();
  cmd->add_option("--mode", c.mode, "sequence mode")
      ->check(CLI::IsMember({"delta", "any", "auto"}))
      ->capture_default_str();
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string GraphLine(const Graph& g) {
  return "p=" + std::to_string(g.order()) + " q=" + std::to_string(g.size()) +
         " min-degree=" + std::to_string(strength::min_degree(g)) +
         " max-degree=" + std::to_string(strength::max_degree(g));
}

std::string CertificateText(const strength::StrengthCertificate& c,
                            const strength::Verdict& v) {
  std::ostringstream out;
  out << "method:      " << c.method << "\n"
      << "strength:    " << c.claimed << " (witness)\n"
      << "lower bound: " << c.lower_bound_value << " (" << c.lower_bound_name << ")\n"
      << "verdict:     " << strength::to_string(v.status);
  if (v.status == strength::VerdictStatus::kBracket) {
    out << " [" << v.lower << ", " << v.upper << "]";
  }
  if (!v.reason.empty()) out << " (" << v.reason << ")";
  out << "\nlabels:      ";
  for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? " " : "") << c.witness[i];
  out << "\n";
  return out.str();
}

Outcome CertificateOutcome(const strength::StrengthCertificate& c) {
  Outcome o;
  const auto verdict = strength::verify_certificate(c);
  o.result = {{"certificate", c}, {"verdict", verdict}};
  o.text = CertificateText(c, verdict);
  o.code = verdict.status == strength::VerdictStatus::kInvalid ? kVerifyFailed : kOk;
  o.dot_graph = c.graph;
  o.dot_labels = c.witness;
  return o;
}

Outcome RunBounds(const Input& input, const CommonFlags& common, int xi_max) {
  strength::BoundsOptions options;
  options.jobs = common.jobs;
  options.xi_i_max = xi_max;
  if (common.budget) options.sequence_budget = *common.budget;
  const auto report = strength::bounds_report(input.graph, options);
  Outcome o;
  o.result = report;
  std::ostringstream out;
  out << GraphLine(input.graph) << "\n";
  if (report.stripped_isolated) {
    out << "(" << report.stripped_isolated << " isolated vertices set aside)\n";
  }
  out << Pad("bound", 26) << Pad("kind", 7) << Pad("value", 8) << "note\n";
  for (const auto& e : report.entries) {
    out << Pad(e.name, 26) << Pad(strength::to_string(e.kind), 7)
        << Pad(std::to_string(e.value), 8) << e.note << "\n";
  }
  for (const auto& a : report.absent) {
    out << Pad(a.name, 26) << Pad("-", 7) << Pad("-", 8) << a.reason << "\n";
  }
  out << "best: " << report.best_lower << " <= str <= " << report.best_upper
      << (report.exact() ? "  (exact)" : "") << "\n";
  o.text = out.str();
  return o;
}

strength::SearchPolicy Policy(const std::string& mode) {
  if (mode == "delta") return strength::SearchPolicy::kDelta;
  if (mode == "any") return strength::SearchPolicy::kAny;
  return strength::SearchPolicy::kAuto;
}

Outcome RunLabel(const Input& input, const CommonFlags& common, bool embed) {
  if (input.fixture) {
    const auto report = strength::bounds_report(input.graph);
    strength::StrengthCertificate c;
    c.graph = input.graph;
    c.witness = input.fixture->numbering.labels();
    c.claimed = input.fixture->strength;
    c.lower_bound_name = report.best_lower_name;
    c.lower_bound_value = static_cast<int>(report.best_lower);
    c.method = "fixture " + input.fixture->name;
    Outcome o = CertificateOutcome(c);
    o.result["route"] = "fixture";
    return o;
  }
  strength::CertifyOptions options;
  options.policy = Policy(common.mode);
  if (common.budget) options.budget = *common.budget;
  const auto r = strength::certify_strength(input.graph, options);
  if (r.certificate) {
    Outcome o = CertificateOutcome(*r.certificate);
    o.result["route"] = r.route;
    if (r.sequence) o.result["sequence"] = *r.sequence;
    o.text = "route:       " + r.route + "\n" + o.text;
    return o;
  }
  if (embed) {
    strength::EmbedOptions eo;
    if (common.budget) eo.budget = *common.budget;
    const auto e = strength::embed_minimal(input.graph, eo);
    if (e.certificate) {
      Outcome o = CertificateOutcome(*e.certificate);
      o.result["route"] = "embed";
      o.result["embed"] = e;
      o.text = "route:       embed (graph extended by K_{" + std::to_string(e.attached_m) +
               "," + std::to_string(e.attached_n) + "})\n" + o.text;
      return o;
    }
  }
  Outcome o;
  o.code = kInconclusive;
  o.result = {{"route", nullptr}, {"search", strength::to_string(r.status)}};
  o.text = std::string("no certificate: sequence search ") + strength::to_string(r.status) +
           (r.status == strength::SearchStatus::kExhausted
                ? " (this does not show str > p + delta; try --embed or exact)\n"
                : " (raise --budget)\n");
  return o;
}

Outcome RunExact(const Input& input, const CommonFlags& common) {
  strength::OracleOptions options;
  if (common.budget) options.budget = *common.budget;
  options.jobs = common.jobs;
  options.time_limit_seconds = common.time_limit;
  const auto r = strength::exact_strength(input.graph, options);
  Outcome o;
  o.result = r;
  std::ostringstream out;
  out << GraphLine(input.graph) << "\n";
  if (r.status == strength::OracleStatus::kExact) {
    out << "str = " << r.value << " (exact, " << r.nodes << " nodes)\n";
  } else {
    out << r.lower << " <= str <= " << r.upper << " (" << r.reason << ")\n";
    o.code = kInconclusive;
  }
  if (r.witness) {
    out << "labels:";
    for (int l : r.witness->labels()) out << " " << l;
    out << "\n";
    o.dot_graph = input.graph;
    o.dot_labels = r.witness->labels();
  }
  o.text = out.str();
  return o;
}

std::vector<int> ReadLabels(const std::string& path) {
  const std::string text = strength::read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    const Json j = Json::parse(text);
    return (j.is_array() ? j : j.at("labels")).get<std::vector<int>>();
  }
  std::vector<int> labels;
  std::istringstream in(text);
  int value = 0;
  while (in >> value) labels.push_back(value);
  if (!in.eof()) throw strength::ParseError("labels: expected integers", 0);
  return labels;
}

struct VerifyFlags {
  std::string certificate;
  std::string labels;
  std::optional<int> claimed;
  std::string bound = std::string(strength::kBoundMinDegree);
  std::optional<int> bound_value;
};

Outcome RunVerify(const InputFlags& in, const CommonFlags& common, const VerifyFlags& v) {
  strength::StrengthCertificate c;
  std::string descriptor;
  if (!v.certificate.empty()) {
    c = Json::parse(strength::read_text_file(v.certificate)).get<strength::StrengthCertificate>();
  } else {
    if (v.labels.empty()) throw strength::ParameterError("give --certificate or --labels");
    const Input input = LoadInput(in, common);
    c.graph = input.graph;
    c.witness = ReadLabels(v.labels);
    c.lower_bound_name = v.bound;
    if (v.claimed) {
      c.claimed = *v.claimed;
    } else if (!strength::Numbering::Defect(c.witness) &&
               static_cast<int>(c.witness.size()) == c.graph.order() && c.graph.size() > 0) {
      c.claimed = strength::strength_of(c.graph, strength::Numbering(c.witness));
    }
    if (v.bound_value) {
      c.lower_bound_value = *v.bound_value;
    } else if (const auto b = strength::recompute_lower_bound(c.graph, v.bound)) {
      c.lower_bound_value = *b;
    }
    c.method = "user supplied";
  }
  return CertificateOutcome(c);
}

Outcome RunSequence(const Input& input, const CommonFlags& common, bool best) {
  strength::SequenceSearchOptions options;
  if (common.budget) options.budget = *common.budget;
  options.mode = common.mode == "delta" ? strength::SequenceMode::kMinDegree
                                        : strength::SequenceMode::kAnyDegree;
  options.first_at_min_degree = common.mode == "auto";
  const auto r = best ? strength::best_prefix_sequence(input.graph, options)
                      : strength::find_delta_sequence(input.graph, options);
  Outcome o;
  o.result = r;
  std::ostringstream out;
  out << GraphLine(input.graph) << "\n"
      << "search: " << strength::to_string(r.status) << " (" << r.nodes << " nodes)\n";
  if (r.sequence) {
    out << render_arrow_chain(*r.sequence) << "\n";
    out << "Z = " << r.sequence->min_prefix() << ", str <= p + d_1 = "
        << input.graph.order() + r.sequence->first_degree()
        << (r.sequence->satisfies_condition() ? "" : " does not follow (Z < 0)") << "\n";
  }
  if (r.status == strength::SearchStatus::kBudgetHit) o.code = kInconclusive;
  o.text = out.str();
  return o;
}

Outcome RunEmbed(const Input& input, const CommonFlags& common, bool connect) {
  strength::EmbedOptions options;
  if (common.budget) options.budget = *common.budget;
  options.connect = connect;
  const auto e = strength::embed_minimal(input.graph, options);
  if (!e.certificate) {
    Outcome o;
    o.result = e;
    o.code = kInconclusive;
    o.text = "inconclusive: sequence search hit the budget\n";
    return o;
  }
  Outcome o = CertificateOutcome(*e.certificate);
  o.result = e;
  std::string head = e.extended ? "extended by K_{" + std::to_string(e.attached_m) + "," +
                                      std::to_string(e.attached_n) + "} (Z = " +
                                      std::to_string(e.h_min_prefix) + "); " +
                                      GraphLine(e.graph) + "\n"
                                : "no extension needed\n";
  o.text = head + o.text;
  return o;
}

Outcome RunRepro(const std::string& filter, const std::string& fixture_dir) {
  strength::ReproOptions options;
  if (!filter.empty()) options.filter = filter;
  if (!fixture_dir.empty()) options.fixture_dir = fixture_dir;
  const auto report = strength::run_repro(options);
  Outcome o;
  Json checks = Json::array();
  std::ostringstream out;
  for (const auto& c : report.checks) {
    Json j{{"id", c.id},         {"tags", c.tags},     {"description", c.description},
           {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed},
           {"seconds", c.seconds}};
    if (!c.error.empty()) j["error"] = c.error;
    checks.push_back(std::move(j));
    out << (c.passed ? "PASS " : "FAIL ") << Pad(c.id, 32) << c.description << "\n";
    if (!c.passed) {
      out << "     expected: " << c.expected << "\n     actual:   " << c.actual << "\n";
      if (!c.error.empty()) out << "     error:    " << c.error << "\n";
    }
  }
  out << report.passed << " passed, " << report.failed << " failed\n";
  o.result = {{"checks", checks}, {"passed", report.passed}, {"failed", report.failed}};
  o.text = out.str();
  o.code = report.ok() ? kOk : kVerifyFailed;
  return o;
}

int Emit(const std::string& operation, const std::string& descriptor, const CommonFlags& c,
         const Json& options, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!c.dot.empty() && o.dot_graph) {
    std::ofstream file(c.dot);
    if (!file) throw strength::ParameterError("cannot write '" + c.dot + "'");
    file << strength::write_dot(*o.dot_graph, o.dot_labels);
  }
  if (c.json) {
    Json record{{"input", descriptor}, {"operation", operation}, {"options", options},
                {"result", o.result},  {"exit_code", o.code},    {"wall_seconds", seconds}};
    std::cout << record.dump(2) << "\n";
  } else {
    std::cout << o.text;
  }
  return o.code;
}

Json OptionsJson(const CommonFlags& c) {
  Json j{{"seed", c.seed}, {"jobs", c.jobs}, {"mode", c.mode}, {"time_limit", c.time_limit}};
  j["budget"] = c.budget ? Json(*c.budget) : Json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strength of graphs: bounds, certified labelings and exact search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "strength 0.1.0");

  InputFlags in;
  CommonFlags common;
  int xi_max = 0;
  bool embed = false;
  bool connect = false;
  bool best = false;
  VerifyFlags verify;
  std::string filter;
  std::string fixture_dir;

  auto* bounds = app.add_subcommand("bounds", "all lower and upper bounds on str(G)");
  auto* label = app.add_subcommand("label", "a certified strength labeling");
  auto* exact = app.add_subcommand("exact", "exact strength by exhaustive search (p <= 14)");
  auto* verify_cmd = app.add_subcommand("verify", "check a strength certificate");
  auto* sequence = app.add_subcommand("sequence", "search for a delta- or d-sequence");
  auto* embed_cmd = app.add_subcommand("embed", "certify p + delta, extending G if needed");
  auto* repro = app.add_subcommand("repro", "re-derive every published value");

  for (auto* cmd : {bounds, label, exact, verify_cmd, sequence, embed_cmd}) {
    AddInputFlags(cmd, in);
    AddCommonFlags(cmd, common);
  }
  bounds->add_option("--xi-max", xi_max, "largest subset size for the neighborhood bound");
  label->add_flag("--embed", embed, "fall back to extending the graph");
  embed_cmd->add_flag("--connect", connect, "join the attached K_{m,n} to G by one edge");
  sequence->add_flag("--best", best, "maximize Z instead of requiring Z >= 0");
  verify_cmd->add_option("--certificate", verify.certificate, "certificate JSON file");
  verify_cmd->add_option("--labels", verify.labels, "labels file (JSON or integers)");
  verify_cmd->add_option("--claimed", verify.claimed, "claimed strength");
  verify_cmd->add_option("--bound", verify.bound, "lower bound name")->capture_default_str();
  verify_cmd->add_option("--bound-value", verify.bound_value, "stated lower bound value");
  repro->add_option("--filter", filter, "check id substring or tag");
  repro->add_option("--fixture-dir", fixture_dir, "read fixtures from this directory");
  repro->add_flag("--json", common.json, "print a JSON run record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const Json options = OptionsJson(common);
    if (*repro) {
      return Emit("repro", "published values", common,
                  Json{{"filter", filter}, {"fixture_dir", fixture_dir}},
                  [&] { return RunRepro(filter, fixture_dir); });
    }
    if (*verify_cmd) {
      const std::string descriptor =
          verify.certificate.empty() ? "labels " + verify.labels
                                     : "certificate " + verify.certificate;
      return Emit("verify", descriptor, common, options,
                  [&] { return RunVerify(in, common, verify); });
    }
    const Input input = LoadInput(in, common);
    if (*bounds) {
      return Emit("bounds", input.descriptor, common, options,
                  [&] { return RunBounds(input, common, xi_max); });
    }
    if (*label) {
      return Emit("label", input.descriptor, common, options,
                  [&] { return RunLabel(input, common, embed); });
    }
    if (*exact) {
      return Emit("exact", input.descriptor, common, options,
                  [&] { return RunExact(input, common); });
    }
    if (*sequence) {
      return Emit("sequence", input.descriptor, common, options,
                  [&] { return RunSequence(input, common, best); });
    }
    if (*embed_cmd) {
      return Emit("embed", input.descriptor, common, options,
                  [&] { return RunEmbed(input, common, connect); });
    }
  } catch (const strength::IntegrityError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const strength::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
