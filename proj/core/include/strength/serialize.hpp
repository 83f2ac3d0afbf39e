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

#ifndef STRENGTH_SERIALIZE_HPP_
#define STRENGTH_SERIALIZE_HPP_

#include <json.hpp>

#include "strength/bounds.hpp"
#include "strength/delta_sequence.hpp"
#include "strength/fixtures.hpp"
#include "strength/graph.hpp"
#include "strength/labeling.hpp"
#include "strength/oracle.hpp"

// nlohmann::json conversions (found by argument-dependent lookup), so that
// `nlohmann::json j = value;` works for every result type.
namespace strength {

// {"p", "q", "graph6", "edges": [[u, v], ...]}. Reading accepts either
// "graph6" or "p" with "edges".
void to_json(nlohmann::json& j, const Graph& g);
void from_json(const nlohmann::json& j, Graph& g);

// {"p", "labels"}.
void to_json(nlohmann::json& j, const Numbering& f);
void from_json(const nlohmann::json& j, Numbering& f);

// {"graph", "claimed", "witness": {"p", "labels"}, "lower_bound": {"name",
// "value"}, "exact", "method"}. Reading keeps the raw labels so that a
// corrupted witness reaches verify_certificate.
void to_json(nlohmann::json& j, const StrengthCertificate& c);
void from_json(const nlohmann::json& j, StrengthCertificate& c);

void to_json(nlohmann::json& j, const Verdict& v);
void to_json(nlohmann::json& j, const DeltaStep& s);
// Steps carry {m, d, chosen, neighbors, isolated, y, z}; z is null on step 1.
void to_json(nlohmann::json& j, const DeltaSequence& s);
void to_json(nlohmann::json& j, const SequenceSearchResult& r);
void to_json(nlohmann::json& j, const EmbedResult& r);
void to_json(nlohmann::json& j, const BoundsReport& r);
void to_json(nlohmann::json& j, const XiProfile& x);
void to_json(nlohmann::json& j, const OracleResult& r);
void to_json(nlohmann::json& j, const FeasibilityResult& r);
void to_json(nlohmann::json& j, const Fixture& f);

}  // namespace strength

#endif  // STRENGTH_SERIALIZE_HPP_
