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

#ifndef GRAPHENT_GRAPH_HPP
#define GRAPHENT_GRAPH_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graphent/gf2.hpp"

namespace graphent {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an input exceeds a configured search or size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of {0, ..., 63}. Graphs are limited to 64 vertices, so a vertex set
/// is a single machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (auto v : vs) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1u); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex min() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  void insert(Vertex v) { bits_ |= bit(v); }
  void erase(Vertex v) { bits_ &= ~bit(v); }

  std::vector<Vertex> members() const;

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Visits members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
  }

 private:
  static std::uint64_t bit(Vertex v) {
    if (v >= 64) throw std::out_of_range("vertex index out of range");
    return std::uint64_t{1} << v;
  }
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency word
/// per vertex. The matrix is kept symmetric with a zero diagonal.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::initializer_list<Edge> edges);
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);
  /// Builds from a symmetric matrix; the diagonal must be zero.
  static Graph from_adjacency(const BitMatrix& adj);

  std::size_t order() const { return n_; }
  std::size_t size() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_edge(Vertex a, Vertex b) const;
  VertexSet neighbors(Vertex a) const;
  std::size_t degree(Vertex a) const { return neighbors(a).size(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  /// Adjacency rows as words; row a has bit b set iff {a,b} is an edge.
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  BitMatrix adjacency() const;

  // In-place edits for kernels that walk many graphs. The free functions
  // below are the value-returning interface.
  void set_edge(Vertex a, Vertex b, bool present);
  void toggle(Vertex a, Vertex b);
  /// XORs the complete pair set [A,B] = {{u,v} : u in A, v in B, u != v}.
  void toggle_pairs(VertexSet a, VertexSet b);
  /// Detaches a from every neighbor without renumbering.
  void isolate(Vertex a);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex a) const {
    if (a >= n_) throw std::out_of_range("vertex index out of range");
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

// Edits. All return new graphs.

VertexSet neighborhood(const Graph& g, Vertex a);
Graph toggle_edge(const Graph& g, Vertex a, Vertex b);
/// Removes a and compacts the remaining labels, preserving their order.
Graph delete_vertex(const Graph& g, Vertex a);
Graph delete_vertices(const Graph& g, VertexSet removed);
/// Keeps vertices of keep, relabeled in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
/// E becomes E xor F. Loops in F are rejected.
Graph sym_diff_edges(const Graph& g, const std::vector<Edge>& f);
/// Existing edges {a,b} with a in A, b in B, a != b, each listed once as (min, max).
std::vector<Edge> edges_between(const Graph& g, VertexSet a, VertexSet b);
/// Complements the subgraph induced on the neighborhood of a.
Graph local_complement(const Graph& g, Vertex a);
/// Applies the permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);
/// Proper 2-coloring (color 0/1 per vertex) when the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_two_colorable(const Graph& g);
/// Vertices of some odd cycle, in cycle order; empty when bipartite.
std::vector<Vertex> find_odd_cycle(const Graph& g);

/// Exact minimum vertex cover by branch and bound.
VertexSet min_vertex_cover(const Graph& g);
bool is_vertex_cover(const Graph& g, VertexSet cover);

// Named families used throughout the tests and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Vertex 0 is the center.
Graph star_graph(std::size_t n);
/// rows x cols lattice, vertex r * cols + c.
Graph grid_graph(std::size_t rows, std::size_t cols);
/// Outer cycle 0..4, spokes i -- i+5, inner pentagram 5-7-9-6-8.
Graph petersen_graph();

}  // namespace graphent

#endif  // GRAPHENT_GRAPH_HPP
