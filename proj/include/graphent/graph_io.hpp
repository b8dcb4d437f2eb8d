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

#ifndef GRAPHENT_GRAPH_IO_HPP
#define GRAPHENT_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6: size header N(n), then the upper triangle in column-major order
/// packed into 6-bit groups offset by 63. An optional ">>graph6<<" prefix is
/// accepted. Throws ParseError on malformed input.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// {"n": 3, "adjacency": [[1], [0, 2], [1]]}
std::string to_adjacency_json(const Graph& g);
Graph from_adjacency_json(std::string_view text);

/// Undirected DOT with 1-based vertex labels, matching figure conventions.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace graphent

#endif  // GRAPHENT_GRAPH_IO_HPP
