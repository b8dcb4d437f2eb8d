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

#include "graphent/graph.hpp"

#include <algorithm>
#include <deque>

namespace graphent {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(std::size_t n) : n_(n), rows_(n, 0) {
  if (n > kMaxVertices) throw CapExceeded("graphs are limited to 64 vertices");
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n) {
  for (auto [a, b] : edges) set_edge(a, b, true);
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.set_edge(a, b, true);
  return g;
}

Graph Graph::from_adjacency(const BitMatrix& adj) {
  if (adj.rows() != adj.cols()) throw std::invalid_argument("adjacency matrix must be square");
  Graph g(adj.rows());
  for (std::size_t a = 0; a < adj.rows(); ++a) {
    if (adj.get(a, a)) throw std::invalid_argument("adjacency matrix has a loop");
    for (std::size_t b = a + 1; b < adj.cols(); ++b) {
      if (adj.get(a, b) != adj.get(b, a)) throw std::invalid_argument("adjacency matrix is not symmetric");
      if (adj.get(a, b)) g.set_edge(a, b, true);
    }
  }
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  check(a);
  check(b);
  return (rows_[a] >> b) & 1u;
}

VertexSet Graph::neighbors(Vertex a) const {
  check(a);
  return VertexSet(rows_[a]);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n_; ++a) {
    VertexSet(rows_[a] & ~((std::uint64_t{2} << a) - 1)).for_each([&](Vertex b) { out.emplace_back(a, b); });
  }
  return out;
}

BitMatrix Graph::adjacency() const {
  BitMatrix m(n_, n_);
  for (Vertex a = 0; a < n_; ++a) {
    VertexSet(rows_[a]).for_each([&](Vertex b) { m.set(a, b, true); });
  }
  return m;
}

void Graph::set_edge(Vertex a, Vertex b, bool present) {
  check(a);
  check(b);
  if (a == b) throw std::invalid_argument("loops are not allowed");
  const std::uint64_t ba = std::uint64_t{1} << b;
  const std::uint64_t ab = std::uint64_t{1} << a;
  if (present) {
    rows_[a] |= ba;
    rows_[b] |= ab;
  } else {
    rows_[a] &= ~ba;
    rows_[b] &= ~ab;
  }
}

void Graph::toggle(Vertex a, Vertex b) {
  check(a);
  check(b);
  if (a == b) throw std::invalid_argument("loops are not allowed");
  rows_[a] ^= std::uint64_t{1} << b;
  rows_[b] ^= std::uint64_t{1} << a;
}

void Graph::toggle_pairs(VertexSet a, VertexSet b) {
  const std::uint64_t all = VertexSet::range(n_).bits();
  if (((a.bits() | b.bits()) & ~all) != 0) throw std::out_of_range("vertex set exceeds graph");
  for (Vertex u = 0; u < n_; ++u) {
    std::uint64_t mask = 0;
    if (a.contains(u)) mask |= b.bits();
    if (b.contains(u)) mask |= a.bits();
    rows_[u] ^= mask & ~(std::uint64_t{1} << u);
  }
}

void Graph::isolate(Vertex a) {
  check(a);
  const std::uint64_t clear = ~(std::uint64_t{1} << a);
  VertexSet(rows_[a]).for_each([&](Vertex b) { rows_[b] &= clear; });
  rows_[a] = 0;
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ g.order();
  for (auto r : g.rows()) {
    h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

VertexSet neighborhood(const Graph& g, Vertex a) { return g.neighbors(a); }

Graph toggle_edge(const Graph& g, Vertex a, Vertex b) {
  Graph out = g;
  out.toggle(a, b);
  return out;
}

Graph delete_vertices(const Graph& g, VertexSet removed) {
  return induced_subgraph(g, g.vertices() - removed);
}

Graph delete_vertex(const Graph& g, Vertex a) {
  if (a >= g.order()) throw std::out_of_range("vertex index out of range");
  return delete_vertices(g, VertexSet{a});
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if ((keep - g.vertices()).bits() != 0) throw std::out_of_range("vertex set exceeds graph");
  const auto kept = keep.members();
  Graph out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (g.has_edge(kept[i], kept[j])) out.set_edge(i, j, true);
    }
  }
  return out;
}

Graph sym_diff_edges(const Graph& g, const std::vector<Edge>& f) {
  Graph out = g;
  for (auto [a, b] : f) {
    if (a == b) throw std::invalid_argument("edge set contains a loop");
    out.toggle(a, b);
  }
  return out;
}

std::vector<Edge> edges_between(const Graph& g, VertexSet a, VertexSet b) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if ((a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))) out.emplace_back(u, v);
  }
  return out;
}

Graph local_complement(const Graph& g, Vertex a) {
  Graph out = g;
  const VertexSet na = g.neighbors(a);
  out.toggle_pairs(na, na);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  Graph out(g.order());
  for (auto [a, b] : g.edges()) out.set_edge(perm[a], perm[b], true);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    VertexSet(frontier).for_each([&](Vertex v) { next |= g.rows()[v]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices().bits();
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(u).for_each([&](Vertex v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  return color;
}

bool is_two_colorable(const Graph& g) { return two_coloring(g).has_value(); }

std::vector<Vertex> find_odd_cycle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, n);
  for (Vertex s = 0; s < n; ++s) {
    if (depth[s] != -1) continue;
    depth[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u).members()) {
        if (depth[v] == -1) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (depth[v] == depth[u]) {
          // Walk both BFS branches up to their meeting point.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{v};
          while (left.back() != right.back()) {
            left.push_back(parent[left.back()]);
            right.push_back(parent[right.back()]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
      }
    }
  }
  return {};
}

bool is_vertex_cover(const Graph& g, VertexSet cover) {
  for (Vertex a = 0; a < g.order(); ++a) {
    if (!cover.contains(a) && (g.rows()[a] & ~cover.bits()) != 0) return false;
  }
  return true;
}

namespace {

struct CoverSearch {
  const Graph& g;
  std::uint64_t best_cover = 0;
  std::size_t best_size = 0;

  // Maximal matching size is a lower bound on any cover.
  std::size_t matching_bound(std::uint64_t alive) const {
    std::size_t m = 0;
    std::uint64_t free = alive;
    for (std::uint64_t b = alive; b != 0; b &= b - 1) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(b));
      if (!((free >> u) & 1u)) continue;
      const std::uint64_t cand = g.rows()[u] & free;
      if (cand == 0) continue;
      const Vertex v = static_cast<Vertex>(std::countr_zero(cand));
      free &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      ++m;
    }
    return m;
  }

  void run(std::uint64_t alive, std::uint64_t chosen, std::size_t size) {
    if (size + matching_bound(alive) >= best_size) return;
    Vertex pick = 0;
    int best_deg = 0;
    VertexSet(alive).for_each([&](Vertex v) {
      const int d = std::popcount(g.rows()[v] & alive);
      if (d > best_deg) {
        best_deg = d;
        pick = v;
      }
    });
    if (best_deg == 0) {
      best_size = size;
      best_cover = chosen;
      return;
    }
    const std::uint64_t pick_bit = std::uint64_t{1} << pick;
    const std::uint64_t nbrs = g.rows()[pick] & alive;
    run(alive & ~pick_bit, chosen | pick_bit, size + 1);
    run(alive & ~pick_bit & ~nbrs, chosen | nbrs, size + static_cast<std::size_t>(std::popcount(nbrs)));
  }
};

}  // namespace

VertexSet min_vertex_cover(const Graph& g) {
  CoverSearch search{g};
  const std::uint64_t all = g.vertices().bits();
  search.best_size = g.order() + 1;
  // Seed the incumbent with the greedy cover so pruning starts tight.
  {
    std::uint64_t alive = all;
    std::uint64_t chosen = 0;
    for (;;) {
      Vertex pick = 0;
      int best_deg = 0;
      VertexSet(alive).for_each([&](Vertex v) {
        const int d = std::popcount(g.rows()[v] & alive);
        if (d > best_deg) {
          best_deg = d;
          pick = v;
        }
      });
      if (best_deg == 0) break;
      alive &= ~(std::uint64_t{1} << pick);
      chosen |= std::uint64_t{1} << pick;
    }
    search.best_cover = chosen;
    search.best_size = static_cast<std::size_t>(std::popcount(chosen));
  }
  search.run(all, 0, 0);
  return VertexSet(search.best_cover);
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.set_edge(v, v + 1, true);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  Graph g = path_graph(n);
  g.set_edge(n - 1, 0, true);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) g.set_edge(a, b, true);
  }
  return g;
}

Graph star_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.set_edge(0, v, true);
  return g;
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  Graph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) g.set_edge(v, v + 1, true);
      if (r + 1 < rows) g.set_edge(v, v + cols, true);
    }
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.set_edge(i, (i + 1) % 5, true);
    g.set_edge(i, i + 5, true);
    g.set_edge(5 + i, 5 + (i + 2) % 5, true);
  }
  return g;
}

}  // namespace graphent
