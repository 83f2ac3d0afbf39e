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

#include "strength/certify.hpp"

#include "strength/bounds.hpp"
#include "strength/constructions.hpp"
#include "strength/errors.hpp"

namespace strength {
namespace {

StrengthCertificate FromSequence(const Graph& g, const DeltaSequence& seq) {
  StrengthCertificate c;
  c.graph = g;
  c.witness = label_from_sequence(g, seq).labels();
  c.claimed = g.order() + seq.first_degree();
  c.lower_bound_name = kBoundMinDegree;
  c.lower_bound_value = g.order() + min_degree(g);
  c.method = render_arrow_chain(seq);
  return c;
}

CertifyResult CertifyCore(const Graph& g, const CertifyOptions& options) {
  CertifyResult out;
  const int p = g.order();
  const int delta = min_degree(g);

  if (two_regular_spec_of(g)) {
    out.route = "two-regular";
    out.certificate = label_two_regular_graph(g);
    return out;
  }
  if (is_forest(g) && p >= 3) {
    out.route = "forest";
    out.sequence = forest_delta_sequence(g);
    out.certificate = FromSequence(g, *out.sequence);
    return out;
  }
  std::vector<std::uint32_t> codes;
  if (const auto n = recognize_hypercube(g, &codes); n && *n >= 2 && *n <= 20) {
    out.route = "hypercube";
    StrengthCertificate c = hypercube_certificate(*n);
    std::vector<int> labels(p);
    for (Vertex v = 0; v < p; ++v) labels[v] = c.witness[codes[v]];
    c.graph = g;
    c.witness = std::move(labels);
    out.certificate = std::move(c);
    return out;
  }
  if (delta == p - 1) {
    out.route = "complete";
    StrengthCertificate c;
    c.graph = g;
    for (int l = 1; l <= p; ++l) c.witness.push_back(l);
    c.claimed = 2 * p - 1;
    c.lower_bound_name = kBoundMinDegree;
    c.lower_bound_value = p + delta;
    c.method = "complete graph";
    out.certificate = std::move(c);
    return out;
  }

  SequenceSearchOptions search;
  search.budget = options.budget;
  if (options.policy != SearchPolicy::kAny) {
    const auto r = find_delta_sequence(g, search);
    if (r.status == SearchStatus::kFound) {
      out.route = "delta-sequence";
      out.sequence = *r.sequence;
      out.certificate = FromSequence(g, *r.sequence);
      return out;
    }
    out.status = r.status;
    if (options.policy == SearchPolicy::kDelta) return out;
  }
  search.mode = SequenceMode::kAnyDegree;
  search.first_at_min_degree = true;
  const auto r = find_delta_sequence(g, search);
  if (r.status == SearchStatus::kFound) {
    out.status = SearchStatus::kFound;
    out.route = "d-sequence";
    out.sequence = *r.sequence;
    out.certificate = FromSequence(g, *r.sequence);
    return out;
  }
  // A budget hit anywhere leaves the question open.
  if (r.status == SearchStatus::kBudgetHit) out.status = r.status;
  return out;
}

}  // namespace

CertifyResult certify_strength(const Graph& g, const CertifyOptions& options) {
  if (g.size() == 0) throw UndefinedStrengthError("strength is undefined without edges");
  const InducedSubgraph core = strip_isolated(g);
  CertifyResult out = CertifyCore(core.graph, options);
  if (core.graph.order() == g.order() || !out.certificate) return out;
  StrengthCertificate& c = *out.certificate;
  c.witness = lift_over_isolated(g.order(), core.to_parent, Numbering(c.witness)).labels();
  c.graph = g;
  out.route += " (isolated vertices lifted)";
  return out;
}

}  // namespace strength
