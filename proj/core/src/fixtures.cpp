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

#include "strength/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <sstream>

#include "fixture_data.hpp"
#include "strength/errors.hpp"
#include "strength/graph_io.hpp"

namespace strength {
namespace {

using Json = nlohmann::json;

std::map<std::string, std::uint64_t, std::less<>> ParseChecksums(std::string_view text) {
  std::map<std::string, std::uint64_t, std::less<>> out;
  std::istringstream in{std::string(text)};
  std::string hex;
  std::string file;
  while (in >> hex >> file) out[file] = std::stoull(hex, nullptr, 16);
  return out;
}

void CheckKnown(std::string_view name) {
  const auto& names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    throw ParameterError("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
  }
}

Vertex VertexOfBits(const std::string& bits) {
  Vertex v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v |= Vertex{1} << i;
  }
  return v;
}

// Largest edge sum among edges with both ends in `members`.
int MaxInside(const Graph& g, const Numbering& f, const std::vector<Vertex>& members) {
  int best = 0;
  for (Vertex u : members) {
    for (Vertex v : members) {
      if (u < v && g.adjacent(u, v)) best = std::max(best, f[u] + f[v]);
    }
  }
  return best;
}

void CompareMarginals(const Json& doc, Fixture& fx) {
  if (!doc.contains("table")) return;
  const Json& table = doc.at("table");
  const auto columns = table.at("column_bits").get<std::vector<std::string>>();
  const auto rows = table.at("row_bits").get<std::vector<std::string>>();
  const auto cells = table.at("cells").get<std::vector<std::vector<Vertex>>>();
  const auto row_max = doc.at("printed_row_max").get<std::vector<int>>();
  const auto column_max = doc.at("printed_column_max").get<std::vector<int>>();
  if (cells.size() != rows.size() || row_max.size() != rows.size() ||
      column_max.size() != columns.size()) {
    throw IntegrityError("fixture " + fx.name + ": table shape is inconsistent");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (cells[r].size() != columns.size()) {
      throw IntegrityError("fixture " + fx.name + ": table row has the wrong length");
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (cells[r][c] != VertexOfBits(columns[c] + rows[r])) {
        throw IntegrityError("fixture " + fx.name + ": cell does not match its headers");
      }
    }
    const int computed = MaxInside(fx.graph, fx.numbering, cells[r]);
    if (computed != row_max[r]) {
      fx.divergences.push_back({"row", rows[r], row_max[r], computed});
    }
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    std::vector<Vertex> members;
    for (const auto& row : cells) members.push_back(row[c]);
    const int computed = MaxInside(fx.graph, fx.numbering, members);
    if (computed != column_max[c]) {
      fx.divergences.push_back({"column", columns[c], column_max[c], computed});
    }
  }
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> kNames{"Q5", "Q6", "example21", "example22"};
  return kNames;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Fixture parse_fixture(std::string_view name, std::string_view json_text) {
  Fixture fx;
  fx.name = std::string(name);
  Json doc;
  try {
    doc = Json::parse(json_text);
    fx.graph = parse_graph6(doc.at("graph6").get<std::string>());
    const auto labels = doc.at("labels").get<std::vector<int>>();
    if (static_cast<int>(labels.size()) != fx.graph.order()) {
      throw IntegrityError("fixture " + fx.name + ": " + std::to_string(labels.size()) +
                           " labels for " + std::to_string(fx.graph.order()) + " vertices");
    }
    if (const auto defect = Numbering::Defect(labels)) {
      throw IntegrityError("fixture " + fx.name + ": labels are not a numbering: " + *defect);
    }
    fx.numbering = Numbering(labels);
    fx.printed_strength = doc.at("printed_strength").get<int>();
    for (const auto& entry : doc.value("sequences", Json::array())) {
      RecordedSequence seq;
      seq.min_degree = entry.at("mode").get<std::string>() == "delta";
      seq.choices = entry.at("choices").get<std::vector<Vertex>>();
      seq.profile = entry.at("profile").get<std::vector<std::pair<int, int>>>();
      seq.prefix_sums = entry.at("prefix_sums").get<std::vector<int>>();
      fx.sequences.push_back(std::move(seq));
    }
  } catch (const Json::exception& e) {
    throw IntegrityError("fixture " + fx.name + ": malformed JSON: " + e.what());
  } catch (const ParseError& e) {
    throw IntegrityError("fixture " + fx.name + ": bad graph6: " + e.what());
  }
  fx.strength = strength_of(fx.graph, fx.numbering);
  if (fx.strength != fx.printed_strength) {
    throw IntegrityError("fixture " + fx.name + ": labels give strength " +
                         std::to_string(fx.strength) + ", printed value is " +
                         std::to_string(fx.printed_strength));
  }
  try {
    CompareMarginals(doc, fx);
  } catch (const Json::exception& e) {
    throw IntegrityError("fixture " + fx.name + ": malformed table: " + e.what());
  }
  return fx;
}

Fixture load_fixture(std::string_view name, const std::optional<std::filesystem::path>& dir) {
  CheckKnown(name);
  const std::string file = std::string(name) + ".json";
  std::string text;
  std::string checksums;
  std::string source = "embedded";
  if (dir) {
    const auto path = *dir / file;
    text = read_text_file(path);
    checksums = read_text_file(*dir / "CHECKSUMS");
    source = path.string();
  } else {
    for (const auto& entry : detail::embedded_fixtures()) {
      if (entry.name == name) text = std::string(entry.json);
    }
    checksums = std::string(detail::embedded_checksums());
  }
  const auto expected = ParseChecksums(checksums);
  const auto it = expected.find(file);
  if (it == expected.end()) {
    throw IntegrityError("fixture " + std::string(name) + ": no checksum recorded");
  }
  const std::uint64_t actual = fnv1a64(text);
  if (actual != it->second) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(actual));
    throw IntegrityError("fixture " + std::string(name) + ": checksum mismatch (file " +
                         buffer + ")");
  }
  Fixture fx = parse_fixture(name, text);
  fx.source = source;
  return fx;
}

}  // namespace strength
