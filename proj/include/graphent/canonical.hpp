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

#ifndef GRAPHENT_CANONICAL_HPP
#define GRAPHENT_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

/// Upper-triangle adjacency bits in graph6 order (column-major: for each
/// column j, rows 0..j-1), packed so the first bit is the most significant.
/// Lexicographic order of the bit strings is numeric order of the codes.
using AdjacencyCode = std::uint64_t;

/// Largest order whose code fits in one word (11 * 10 / 2 = 55 bits).
inline constexpr std::size_t kMaxCodeOrder = 11;
inline constexpr std::size_t kDefaultCanonicalCap = 10;

AdjacencyCode adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, AdjacencyCode code);

struct CanonicalForm {
  Graph graph;
  AdjacencyCode code = 0;
  /// relabel(input, permutation) == graph.
  std::vector<Vertex> permutation;
};

/// Lexicographically minimal adjacency code over all vertex permutations.
/// Branch and bound on code prefixes; interchangeable twin vertices are
/// only branched on once.
CanonicalForm canonical_form(const Graph& g, std::size_t cap = kDefaultCanonicalCap);
AdjacencyCode canonical_code(const Graph& g, std::size_t cap = kDefaultCanonicalCap);
bool is_isomorphic(const Graph& g, const Graph& h, std::size_t cap = kDefaultCanonicalCap);

/// True iff no relabeling has a smaller code, i.e. g is its own canonical form.
/// Stops at the first smaller prefix, which makes it much cheaper than
/// canonical_form on non-canonical inputs.
bool is_canonical(const Graph& g);

/// Every isomorphism class of connected graphs on n vertices, one canonical
/// representative each, in ascending code order. Scans all labeled graphs
/// and keeps the connected ones that are canonical. Parallel over the
/// labeled-graph range; output is identical to the serial reference.
std::vector<Graph> enumerate_connected(std::size_t n, std::size_t cap = 7);
std::vector<Graph> enumerate_connected_serial(std::size_t n, std::size_t cap = 7);

/// Connected graphs for every order in [2, n_max], concatenated by order.
std::vector<Graph> enumerate_connected_upto(std::size_t n_max, std::size_t cap = 7);

}  // namespace graphent

#endif  // GRAPHENT_CANONICAL_HPP
