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

#include "strength/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "strength/errors.hpp"

namespace strength {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr long kMaxGraph6Order = 68719476735L;

int Sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    pos = kGraph6Header.size();
  }
  std::size_t end = text.size();
  if (end > pos && text[end - 1] == '\n') --end;
  if (end > pos && text[end - 1] == '\r') --end;
  text = text.substr(0, end);
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  long n = 0;
  if (Sextet(text, pos) != 63) {
    n = Sextet(text, pos++);
  } else {
    ++pos;
    int groups = 3;
    if (pos < text.size() && Sextet(text, pos) == 63) {
      ++pos;
      groups = 6;
    }
    const std::size_t prefix_start = pos;
    for (int k = 0; k < groups; ++k) n = (n << 6) | Sextet(text, pos++);
    if ((groups == 3 && n < 63) || (groups == 6 && n < 258048)) {
      throw ParseError("graph6: non-canonical length prefix", prefix_start);
    }
    if (n > kMaxGraph6Order || n > (1L << 20)) {
      throw ParseError("graph6: order too large", prefix_start);
    }
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < bytes) {
    throw ParseError("graph6: truncated adjacency data", text.size());
  }
  if (text.size() - pos > bytes) {
    throw ParseError("graph6: trailing bytes after adjacency data", pos + bytes);
  }
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = Sextet(text, pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k % 6 != 0; ++k) {
    if ((Sextet(text, pos + k / 6) >> (5 - k % 6)) & 1) {
      throw ParseError("graph6: nonzero padding bits", pos + k / 6);
    }
  }
  for (std::size_t b = pos; b < pos + bytes; ++b) Sextet(text, b);
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const long n = g.order();
  if (n < 1) throw ParameterError("write_graph6 needs p >= 1");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(word + 63);
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((word << (6 - filled)) + 63);
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in corpus line",
                         start + e.offset());
      }
    }
    start = stop + 1;
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<long long> numbers;
  std::size_t offset = 0;
  std::vector<std::size_t> offsets;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError("edge list: '" + token + "' is not an integer",
                         line_start + line.find(token));
      }
      numbers.push_back(value);
      offsets.push_back(line_start + line.find(token));
    }
  }
  if (numbers.size() < 2) throw ParseError("edge list: missing 'p q' header", 0);
  const long long p = numbers[0];
  const long long q = numbers[1];
  if (p < 0 || p > (1 << 20)) throw ParseError("edge list: bad order", offsets[0]);
  if (q < 0 || static_cast<std::size_t>(2 * q + 2) != numbers.size()) {
    throw ParseError("edge list: expected " + std::to_string(q) +
                         " edges, found " +
                         std::to_string((numbers.size() - 2) / 2.0),
                     offsets[1]);
  }
  std::vector<Edge> edges;
  for (long long k = 0; k < q; ++k) {
    const auto u = numbers[2 + 2 * k];
    const auto v = numbers[3 + 2 * k];
    if (u < 0 || v < 0 || u >= p || v >= p) {
      throw ParseError("edge list: endpoint out of range", offsets[2 + 2 * k]);
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return Graph::FromEdges(static_cast<int>(p), edges);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0);
  }
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto ext = path.extension().string();
  if (ext == ".g6" || ext == ".graph6") {
    auto graphs = parse_graph6_lines(text);
    if (graphs.empty()) throw ParseError("graph6 file has no graphs", 0);
    return graphs.front();
  }
  return parse_edge_list(text);
}

std::string write_dot(const Graph& g, const std::vector<int>& labels) {
  const bool labeled = !labels.empty();
  if (labeled && static_cast<int>(labels.size()) != g.order()) {
    throw ParameterError("write_dot: one label per vertex required");
  }
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (labeled) {
      out += " [label=\"" + std::to_string(labels[v]) + "\", xlabel=\"v" +
             std::to_string(v) + "\"]";
    }
    out += ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    if (labeled) out += " [label=\"" + std::to_string(labels[u] + labels[v]) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace strength
