// Copyright 2026 The Graphent Authors
//
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

#include "graphent/graph_io.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"

namespace graphent {

namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  if (c < 63 || c > 126) throw ParseError(std::string("graph6: invalid character '") + c + "'");
  return c - kOffset;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: order exceeds 64 vertices");
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(decode_char(text[k]));
    if (n < 63) throw ParseError("graph6: non-minimal size header");
    pos = 4;
  } else {
    n = static_cast<std::size_t>(decode_char(text[0]));
    pos = 1;
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6: order exceeds 64 vertices");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    throw ParseError("graph6: expected " + std::to_string(chars) + " data characters, found " +
                     std::to_string(text.size() - pos));
  }

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = decode_char(text[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) g.set_edge(i, j, true);
    }
  }
  for (; k < chars * 6; ++k) {
    const int chunk = decode_char(text[pos + k / 6]);
    if ((chunk >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | static_cast<int>((g.rows()[i] >> j) & 1u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kOffset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string to_adjacency_json(const Graph& g) {
  nlohmann::json adjacency = nlohmann::json::array();
  for (Vertex a = 0; a < g.order(); ++a) adjacency.push_back(g.neighbors(a).members());
  return nlohmann::json{{"n", g.order()}, {"adjacency", adjacency}}.dump();
}

Graph from_adjacency_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("adjacency json: ") + e.what());
  }
  const std::size_t n = j.at("n").get<std::size_t>();
  const auto& adjacency = j.at("adjacency");
  if (adjacency.size() != n) throw ParseError("adjacency json: list length differs from n");
  if (n > Graph::kMaxVertices) throw ParseError("adjacency json: order exceeds 64 vertices");
  std::vector<std::uint64_t> listed(n, 0);
  for (Vertex a = 0; a < n; ++a) {
    for (const auto& b : adjacency[a]) {
      const auto v = b.get<Vertex>();
      if (v >= n || v == a) throw ParseError("adjacency json: invalid neighbor");
      listed[a] |= std::uint64_t{1} << v;
    }
  }
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const bool ab = (listed[a] >> b) & 1u;
      if (ab != (((listed[b] >> a) & 1u) != 0)) throw ParseError("adjacency json: asymmetric lists");
      if (ab) g.set_edge(a, b, true);
    }
  }
  return g;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex a = 0; a < g.order(); ++a) out << "  " << a + 1 << ";\n";
  for (auto [a, b] : g.edges()) out << "  " << a + 1 << " -- " << b + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace graphent
