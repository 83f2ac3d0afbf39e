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

#ifndef STRENGTH_CERTIFY_HPP_
#define STRENGTH_CERTIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "strength/delta_sequence.hpp"
#include "strength/graph.hpp"
#include "strength/labeling.hpp"

namespace strength {

enum class SearchPolicy {
  kDelta,  // delta-sequences only
  kAny,    // d-sequences (first choice of minimum degree)
  kAuto,   // delta-sequences, then d-sequences
};

struct CertifyOptions {
  SearchPolicy policy = SearchPolicy::kAuto;
  std::int64_t budget = 1'000'000;
};

struct CertifyResult {
  // kFound with a certificate, or the status of the failed search.
  SearchStatus status = SearchStatus::kFound;
  std::string route;  // which construction produced the certificate
  std::optional<StrengthCertificate> certificate;
  std::optional<DeltaSequence> sequence;  // when a sequence was used
};

// Picks a construction for g: a 2-regular graph gets the interleaved cycle
// labeling, a forest the pendant-first sequence, a hypercube the doubling or
// printed tables, a complete graph any numbering; other graphs go through
// the sequence search. Isolated vertices are set aside and get the top
// labels. Throws UndefinedStrengthError when g has no edges.
CertifyResult certify_strength(const Graph& g, const CertifyOptions& options = {});

}  // namespace strength

#endif  // STRENGTH_CERTIFY_HPP_
