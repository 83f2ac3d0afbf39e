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

#ifndef STRENGTH_GRAPH_IO_HPP_
#define STRENGTH_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "strength/graph.hpp"

namespace strength {

// graph6 as used by nauty and the common graph catalogs. The optional
// ">>graph6<<" header and one trailing newline are accepted. Padding bits must
// be zero. Errors carry the byte offset of the offending byte.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Every non-empty line of a graph6 corpus file.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// Edge-list text: "p q" on the first line, then q lines "u v". Lines starting
// with '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Picks the format by extension: .g6 / .graph6 -> graph6 (first graph in the
// file); anything else -> edge list.
Graph load_graph_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

// Graphviz rendering; when `labels` is non-empty each vertex is annotated
// with its label and each edge with the induced sum.
std::string write_dot(const Graph& g, const std::vector<int>& labels = {});

}  // namespace strength

#endif  // STRENGTH_GRAPH_IO_HPP_
