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

#ifndef STRENGTH_LABELING_HPP_
#define STRENGTH_LABELING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "strength/graph.hpp"

namespace strength {

// A bijection from the vertices 0..p-1 onto the labels 1..p.
class Numbering {
 public:
  Numbering() = default;
  // Throws InvalidNumberingError unless `labels` is a permutation of 1..p.
  explicit Numbering(std::vector<int> labels);

  // Why `labels` is not a numbering, or nullopt if it is one.
  static std::optional<std::string> Defect(const std::vector<int>& labels);

  int order() const { return static_cast<int>(labels_.size()); }
  int operator[](Vertex v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }
  // vertex_of()[l] is the vertex carrying label l (index 0 unused).
  std::vector<Vertex> vertex_of() const;

  bool operator==(const Numbering&) const = default;

 private:
  std::vector<int> labels_;
};

// str_f(G) = max over edges uv of f(u) + f(v).
// Throws UndefinedStrengthError if g has no edges and ParameterError if the
// numbering has a different order than g.
int strength_of(const Graph& g, const Numbering& f);

// Appending m isolated vertices and giving them labels p+1..p+m keeps
// the strength. The new vertices are p..p+m-1.
Numbering extend_over_isolated(const Graph& g, const Numbering& f, int m);
// Lifts a numbering of the non-isolated part of a graph (as produced by
// strip_isolated) back to the whole graph; isolated vertices get the top
// labels in vertex order.
Numbering lift_over_isolated(int parent_order, const std::vector<Vertex>& to_parent,
                             const Numbering& f);

// A strength claim with its full witness. `claimed` is the strength of the
// witness, hence an upper bound on str(G); `lower_bound_value` is the value of
// the named lower bound. The claim is exact when the two agree.
//
// The witness is kept as raw labels so that corrupted data can be represented
// and rejected by verify_certificate.
struct StrengthCertificate {
  Graph graph;
  int claimed = 0;
  std::vector<int> witness;
  std::string lower_bound_name;
  int lower_bound_value = 0;
  std::string method;

  bool exact() const { return lower_bound_value == claimed; }
};

enum class VerdictStatus { kExact, kBracket, kInvalid };

struct Verdict {
  VerdictStatus status = VerdictStatus::kInvalid;
  int lower = 0;
  int upper = 0;
  std::string reason;
};

const char* to_string(VerdictStatus status);

// Re-checks everything a certificate asserts: witness bijectivity, the
// witness strength against `claimed`, the named lower bound recomputed from
// the graph (it must reach the stated value), and lower <= claimed.
Verdict verify_certificate(const StrengthCertificate& c);

}  // namespace strength

#endif  // STRENGTH_LABELING_HPP_
