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

#include "strength/serialize.hpp"

#include "strength/errors.hpp"
#include "strength/graph_io.hpp"

namespace strength {

using Json = nlohmann::json;

void to_json(Json& j, const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j = Json{{"p", g.order()}, {"q", g.size()}, {"graph6", write_graph6(g)}, {"edges", edges}};
}

void from_json(const Json& j, Graph& g) {
  if (j.contains("graph6")) {
    g = parse_graph6(j.at("graph6").get<std::string>());
    return;
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  g = Graph::FromEdges(j.at("p").get<int>(), edges);
}

void to_json(Json& j, const Numbering& f) {
  j = Json{{"p", f.order()}, {"labels", f.labels()}};
}

void from_json(const Json& j, Numbering& f) {
  auto labels = j.at("labels").get<std::vector<int>>();
  if (j.contains("p") && j.at("p").get<int>() != static_cast<int>(labels.size())) {
    throw InvalidNumberingError("\"p\" does not match the number of labels");
  }
  f = Numbering(std::move(labels));
}

void to_json(Json& j, const StrengthCertificate& c) {
  j = Json{{"graph", c.graph},
           {"claimed", c.claimed},
           {"witness", {{"p", c.witness.size()}, {"labels", c.witness}}},
           {"lower_bound", {{"name", c.lower_bound_name}, {"value", c.lower_bound_value}}},
           {"exact", c.exact()},
           {"method", c.method}};
}

void from_json(const Json& j, StrengthCertificate& c) {
  c.graph = j.at("graph").get<Graph>();
  c.claimed = j.at("claimed").get<int>();
  const Json& witness = j.at("witness");
  c.witness = (witness.is_array() ? witness : witness.at("labels")).get<std::vector<int>>();
  c.lower_bound_name = j.at("lower_bound").at("name").get<std::string>();
  c.lower_bound_value = j.at("lower_bound").at("value").get<int>();
  c.method = j.value("method", "");
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"status", to_string(v.status)}, {"lower", v.lower}, {"upper", v.upper}};
  if (!v.reason.empty()) j["reason"] = v.reason;
}

void to_json(Json& j, const DeltaStep& s) {
  j = Json{{"m", s.m},
           {"d", s.d},
           {"chosen", s.chosen < 0 ? Json(nullptr) : Json(s.chosen)},
           {"neighbors", s.removed_neighbors},
           {"isolated", s.isolated},
           {"y", s.y}};
}

void to_json(Json& j, const DeltaSequence& s) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    Json step = s.steps[i];
    step["z"] = i == 0 ? Json(nullptr) : Json(s.prefix_sums[i - 1]);
    steps.push_back(std::move(step));
  }
  Json terminal{{"kind", s.terminal == TerminalKind::kClique ? "mK1+Kr" : "mK1"},
                {"m", s.terminal_m}};
  if (s.terminal == TerminalKind::kClique) terminal["r"] = s.terminal_r;
  j = Json{{"mode", s.mode == SequenceMode::kMinDegree ? "delta" : "any"},
           {"first_degree", s.first_degree()},
           {"steps", steps},
           {"terminal", terminal},
           {"prefix_sums", s.prefix_sums},
           {"min_prefix", s.min_prefix()},
           {"satisfies_condition", s.satisfies_condition()},
           {"chain", render_arrow_chain(s)}};
}

void to_json(Json& j, const SequenceSearchResult& r) {
  j = Json{{"status", to_string(r.status)}, {"nodes", r.nodes}};
  j["sequence"] = r.sequence ? Json(*r.sequence) : Json(nullptr);
}

void to_json(Json& j, const EmbedResult& r) {
  j = Json{{"status", to_string(r.status)}, {"extended", r.extended}};
  if (r.extended) {
    j["attached"] = {{"m", r.attached_m}, {"n", r.attached_n}};
    j["h_min_prefix"] = r.h_min_prefix;
  }
  if (!r.sequence.steps.empty()) j["sequence"] = r.sequence;
  j["certificate"] = r.certificate ? Json(*r.certificate) : Json(nullptr);
}

void to_json(Json& j, const BoundsReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json entry{{"name", e.name}, {"value", e.value}, {"kind", to_string(e.kind)},
               {"note", e.note}};
    if (!e.witness.empty()) entry["witness"] = e.witness;
    entries.push_back(std::move(entry));
  }
  Json absent = Json::array();
  for (const auto& a : r.absent) absent.push_back({{"name", a.name}, {"reason", a.reason}});
  j = Json{{"p", r.order},
           {"stripped_isolated", r.stripped_isolated},
           {"entries", entries},
           {"absent", absent},
           {"best_lower", {{"value", r.best_lower}, {"name", r.best_lower_name}}},
           {"best_upper", {{"value", r.best_upper}, {"name", r.best_upper_name}}},
           {"exact", r.exact()}};
}

void to_json(Json& j, const XiProfile& x) {
  Json values = Json::array();
  for (const auto& e : x.x) {
    values.push_back({{"size", e.size}, {"x", e.value}, {"witness", e.witness}});
  }
  j = Json{{"x", values}, {"xi", x.xi}, {"complete", x.complete}};
  if (x.incomplete_at) j["incomplete_at"] = x.incomplete_at;
}

void to_json(Json& j, const OracleResult& r) {
  j = Json{{"status", to_string(r.status)}, {"value", r.value}, {"lower", r.lower},
           {"upper", r.upper}, {"nodes", r.nodes}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
}

void to_json(Json& j, const FeasibilityResult& r) {
  j = Json{{"status", to_string(r.status)}, {"nodes", r.nodes}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
}

void to_json(Json& j, const Fixture& f) {
  Json divergences = Json::array();
  for (const auto& d : f.divergences) {
    divergences.push_back(
        {{"axis", d.axis}, {"bits", d.bits}, {"printed", d.printed}, {"computed", d.computed}});
  }
  j = Json{{"name", f.name},
           {"graph", f.graph},
           {"numbering", f.numbering},
           {"printed_strength", f.printed_strength},
           {"strength", f.strength},
           {"marginal_divergences", divergences},
           {"source", f.source}};
}

}  // namespace strength
