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

#ifndef STRENGTH_FIXTURES_HPP_
#define STRENGTH_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strength/graph.hpp"
#include "strength/labeling.hpp"

namespace strength {

// A printed row or column maximum that disagrees with the maximum edge sum
// recomputed from the cell labels. Cell labels are authoritative.
struct MarginalDivergence {
  std::string axis;  // "row" or "column"
  std::string bits;  // header bitstring of the row or column
  int printed = 0;
  int computed = 0;
};

// A sequence printed alongside an example graph, stored as the chosen
// vertices plus the printed (m, d) profile and prefix sums.
struct RecordedSequence {
  bool min_degree = true;
  std::vector<Vertex> choices;
  std::vector<std::pair<int, int>> profile;  // (m_i, d_i) per step
  std::vector<int> prefix_sums;
};

struct Fixture {
  std::string name;
  Graph graph;
  Numbering numbering;
  int printed_strength = 0;
  int strength = 0;
  std::vector<MarginalDivergence> divergences;
  std::vector<RecordedSequence> sequences;
  std::string source;  // "embedded" or the file path
};

// Q5, Q6, example21, example22.
const std::vector<std::string>& fixture_names();

// Loads a fixture from the copy compiled into the library, or from
// `dir`/<name>.json checked against `dir`/CHECKSUMS when a directory is given.
// Throws ParameterError for an unknown name and IntegrityError when the
// checksum, the numbering or the recomputed strength disagrees with the data.
Fixture load_fixture(std::string_view name,
                     const std::optional<std::filesystem::path>& dir = std::nullopt);

// Parses fixture JSON without any checksum test (same integrity checks
// otherwise).
Fixture parse_fixture(std::string_view name, std::string_view json_text);

// 64-bit FNV-1a, the checksum used by the CHECKSUMS file.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace strength

#endif  // STRENGTH_FIXTURES_HPP_
