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

#include "strength/labeling.hpp"

#include <algorithm>

#include "strength/bounds.hpp"
#include "strength/errors.hpp"

namespace strength {

Numbering::Numbering(std::vector<int> labels) : labels_(std::move(labels)) {
  if (auto defect = Defect(labels_)) throw InvalidNumberingError(*defect);
}

std::optional<std::string> Numbering::Defect(const std::vector<int>& labels) {
  const int p = static_cast<int>(labels.size());
  std::vector<Vertex> owner(p + 1, -1);
  for (Vertex v = 0; v < p; ++v) {
    const int l = labels[v];
    if (l < 1 || l > p) {
      return "label " + std::to_string(l) + " of vertex " + std::to_string(v) +
             " is outside [1," + std::to_string(p) + "]";
    }
    if (owner[l] != -1) {
      return "label " + std::to_string(l) + " is used by vertices " +
             std::to_string(owner[l]) + " and " + std::to_string(v);
    }
    owner[l] = v;
  }
  return std::nullopt;
}

std::vector<Vertex> Numbering::vertex_of() const {
  std::vector<Vertex> out(labels_.size() + 1, -1);
  for (Vertex v = 0; v < order(); ++v) out[labels_[v]] = v;
  return out;
}

int strength_of(const Graph& g, const Numbering& f) {
  if (f.order() != g.order()) {
    throw ParameterError("numbering has order " + std::to_string(f.order()) +
                         " but the graph has order " + std::to_string(g.order()));
  }
  if (g.size() == 0) throw UndefinedStrengthError("strength of an edgeless graph");
  int best = 0;
  for (auto [u, v] : g.edges()) best = std::max(best, f[u] + f[v]);
  return best;
}

Numbering extend_over_isolated(const Graph& g, const Numbering& f, int m) {
  if (m < 0) throw ParameterError("extend_over_isolated: m must be >= 0");
  if (g.order() == 0 || min_degree(g) < 1) {
    throw PreconditionError("extend_over_isolated needs a graph with min degree >= 1");
  }
  if (f.order() != g.order()) throw ParameterError("numbering/graph order mismatch");
  std::vector<int> labels = f.labels();
  for (int k = 1; k <= m; ++k) labels.push_back(g.order() + k);
  return Numbering(std::move(labels));
}

Numbering lift_over_isolated(int parent_order, const std::vector<Vertex>& to_parent,
                             const Numbering& f) {
  if (static_cast<int>(to_parent.size()) != f.order()) {
    throw ParameterError("lift_over_isolated: map/numbering size mismatch");
  }
  std::vector<int> labels(parent_order, 0);
  for (Vertex v = 0; v < f.order(); ++v) labels[to_parent[v]] = f[v];
  int next = f.order();
  for (int& l : labels) {
    if (l == 0) l = ++next;
  }
  return Numbering(std::move(labels));
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kExact:
      return "exact";
    case VerdictStatus::kBracket:
      return "bracket";
    case VerdictStatus::kInvalid:
      return "invalid";
  }
  return "invalid";
}

Verdict verify_certificate(const StrengthCertificate& c) {
  Verdict verdict;
  auto invalid = [&](std::string reason) {
    verdict.status = VerdictStatus::kInvalid;
    verdict.reason = std::move(reason);
    return verdict;
  };
  if (static_cast<int>(c.witness.size()) != c.graph.order()) {
    return invalid("witness has " + std::to_string(c.witness.size()) +
                   " labels for a graph of order " + std::to_string(c.graph.order()));
  }
  if (auto defect = Numbering::Defect(c.witness)) {
    return invalid("witness is not a numbering: " + *defect);
  }
  if (c.graph.size() == 0) return invalid("strength is undefined for an edgeless graph");
  const int actual = strength_of(c.graph, Numbering(c.witness));
  if (actual != c.claimed) {
    return invalid("claimed strength " + std::to_string(c.claimed) +
                   " but the witness evaluates to " + std::to_string(actual));
  }
  const auto recomputed = recompute_lower_bound(c.graph, c.lower_bound_name, c.lower_bound_value);
  if (!recomputed) {
    return invalid("lower bound '" + c.lower_bound_name +
                   "' is unknown or not applicable to this graph");
  }
  if (*recomputed < c.lower_bound_value) {
    return invalid("lower bound '" + c.lower_bound_name + "' recomputes to " +
                   std::to_string(*recomputed) + ", below the stated " +
                   std::to_string(c.lower_bound_value));
  }
  if (c.lower_bound_value > c.claimed) {
    return invalid("stated lower bound " + std::to_string(c.lower_bound_value) +
                   " exceeds the witness strength " + std::to_string(c.claimed));
  }
  verdict.lower = c.lower_bound_value;
  verdict.upper = c.claimed;
  verdict.status = c.exact() ? VerdictStatus::kExact : VerdictStatus::kBracket;
  verdict.reason = c.exact() ? "witness meets the lower bound"
                             : "witness strength exceeds the lower bound";
  return verdict;
}

}  // namespace strength
