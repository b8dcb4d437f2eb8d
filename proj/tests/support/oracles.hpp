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

// Brute-force reference computations and random generators shared by the
// test binaries. Nothing here calls the algorithm it is used to check.

#ifndef GRAPHENT_TESTS_ORACLES_HPP
#define GRAPHENT_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent::testing {

using Matrix01 = std::vector<std::vector<int>>;

inline Matrix01 dense_adjacency(const Graph& g) {
  const std::size_t n = g.order();
  Matrix01 m(n, std::vector<int>(n, 0));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) m[a][b] = g.has_edge(a, b) ? 1 : 0;
  }
  return m;
}

/// Textbook Gaussian elimination on a 0/1 matrix.
inline int brute_rank_f2(Matrix01 m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m[i][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Rank of the block of rows in A and columns outside A.
inline int brute_cut_rank(const Graph& g, std::uint64_t a_mask) {
  Matrix01 block;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (!((a_mask >> a) & 1u)) continue;
    std::vector<int> row;
    for (Vertex b = 0; b < g.order(); ++b) {
      if (!((a_mask >> b) & 1u)) row.push_back(g.has_edge(a, b) ? 1 : 0);
    }
    block.push_back(row);
  }
  if (block.empty() || block[0].empty()) return 0;
  return brute_rank_f2(block);
}

/// Upper triangle read column by column, first pair most significant.
inline std::uint64_t brute_code(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  const std::size_t n = g.order();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(order[i], order[j]) ? 1u : 0u);
  }
  return code;
}

/// Minimum code over all n! vertex orders.
inline std::uint64_t brute_canonical_code(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, brute_code(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool brute_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<int> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < n; ++v) {
      if (g.has_edge(u, v) && !seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

/// Set of brute canonical codes of connected graphs on n vertices.
inline std::set<std::uint64_t> brute_connected_classes(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) g.set_edge(pairs[k].first, pairs[k].second, true);
    }
    if (brute_connected(g)) out.insert(brute_canonical_code(g));
  }
  return out;
}

inline std::size_t brute_vertex_cover_size(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool covers = true;
    for (Vertex a = 0; a < n && covers; ++a) {
      for (Vertex b = a + 1; b < n && covers; ++b) {
        if (g.has_edge(a, b) && !((mask >> a) & 1u) && !((mask >> b) & 1u)) covers = false;
      }
    }
    if (covers) best = std::min(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

/// Odd cycle check by exhaustive 2-coloring.
inline bool brute_two_colorable(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (Vertex a = 0; a < n && ok; ++a) {
      for (Vertex b = a + 1; b < n && ok; ++b) {
        if (g.has_edge(a, b) && ((mask >> a) & 1u) == ((mask >> b) & 1u)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Number of S subset of V with S union odd-neighborhood(S) = A.
inline std::size_t brute_support_count(const Graph& g, std::uint64_t a_mask) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::uint64_t z = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!((s >> v) & 1u)) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (g.has_edge(v, w)) z ^= std::uint64_t{1} << w;
      }
    }
    if ((s | z) == a_mask) ++count;
  }
  return count;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) g.set_edge(a, b, true);
    }
  }
  return g;
}

inline Graph random_connected_graph(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.25, 0.8);
  while (true) {
    Graph g = random_graph(n, density(rng), rng);
    if (brute_connected(g)) return g;
  }
}

/// Each vertex after the first attaches to a uniformly chosen earlier one,
/// then labels are shuffled.
inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    g.set_edge(label[v], label[pick(rng)], true);
  }
  return g;
}

}  // namespace graphent::testing

#endif  // GRAPHENT_TESTS_ORACLES_HPP
