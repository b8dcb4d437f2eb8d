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

#include "graphent/canonical.hpp"

#include <algorithm>
#include <array>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graphent {

namespace {

std::size_t code_length(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > kMaxCodeOrder) {
    throw CapExceeded("graph order " + std::to_string(n) + " exceeds canonical-form cap " +
                      std::to_string(std::min(cap, kMaxCodeOrder)));
  }
}

class PrefixSearch {
 public:
  enum class Mode { minimize, find_smaller };

  PrefixSearch(const Graph& g, Mode mode) : n_(g.order()), mode_(mode), length_(code_length(n_)) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = g.rows()[v];
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (u == v) continue;
        const std::uint64_t ru = rows_[u] & ~(std::uint64_t{1} << v);
        const std::uint64_t rv = rows_[v] & ~(std::uint64_t{1} << u);
        if (ru == rv) twins_[v] |= std::uint64_t{1} << u;
      }
    }
    if (mode_ == Mode::find_smaller) {
      best_ = adjacency_code(g);
      have_best_ = true;
    }
  }

  void run() {
    std::array<std::uint32_t, kMaxCodeOrder> cols{};
    descend(0, 0, 0, cols);
  }

  AdjacencyCode best() const { return best_; }
  const std::array<Vertex, kMaxCodeOrder>& best_order() const { return best_order_; }
  bool found_smaller() const { return found_smaller_; }

 private:
  // Returns true to abort the whole search.
  bool descend(std::size_t k, AdjacencyCode prefix, std::uint64_t placed,
               const std::array<std::uint32_t, kMaxCodeOrder>& cols) {
    if (k == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return false;
    }
    std::array<std::pair<std::uint32_t, Vertex>, kMaxCodeOrder> cand{};
    std::size_t count = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if ((placed >> v) & 1u) continue;
      // Swapping two unplaced twins is an automorphism fixing the prefix.
      const std::uint64_t lower_unplaced = ~placed & ((std::uint64_t{1} << v) - 1);
      if (twins_[v] & lower_unplaced) continue;
      cand[count++] = {cols[v], v};
    }
    std::sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(count));
    const std::size_t len = k * (k + 1) / 2;
    for (std::size_t c = 0; c < count; ++c) {
      const auto [col, v] = cand[c];
      const AdjacencyCode next = (prefix << k) | col;
      if (have_best_) {
        const AdjacencyCode bound = best_ >> (length_ - len);
        if (next > bound) break;
        if (next < bound && mode_ == Mode::find_smaller) {
          found_smaller_ = true;
          return true;
        }
      }
      order_[k] = v;
      std::array<std::uint32_t, kMaxCodeOrder> next_cols;
      for (Vertex u = 0; u < n_; ++u) next_cols[u] = (cols[u] << 1) | ((rows_[v] >> u) & 1u);
      if (descend(k + 1, next, placed | (std::uint64_t{1} << v), next_cols)) return true;
    }
    return false;
  }

  std::size_t n_;
  Mode mode_;
  std::size_t length_;
  std::array<std::uint64_t, kMaxCodeOrder> rows_{};
  std::array<std::uint64_t, kMaxCodeOrder> twins_{};
  std::array<Vertex, kMaxCodeOrder> order_{};
  std::array<Vertex, kMaxCodeOrder> best_order_{};
  AdjacencyCode best_ = 0;
  bool have_best_ = false;
  bool found_smaller_ = false;
};

bool connected_and_canonical(std::size_t n, AdjacencyCode code) {
  const Graph g = graph_from_code(n, code);
  return is_connected(g) && is_canonical(g);
}

}  // namespace

AdjacencyCode adjacency_code(const Graph& g) {
  if (g.order() > kMaxCodeOrder) throw CapExceeded("graph too large for a one-word adjacency code");
  AdjacencyCode code = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | ((g.rows()[i] >> j) & 1u);
  }
  return code;
}

Graph graph_from_code(std::size_t n, AdjacencyCode code) {
  if (n > kMaxCodeOrder) throw CapExceeded("graph too large for a one-word adjacency code");
  Graph g(n);
  std::size_t bit = code_length(n);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1u) g.set_edge(i, j, true);
    }
  }
  return g;
}

CanonicalForm canonical_form(const Graph& g, std::size_t cap) {
  check_cap(g.order(), cap);
  PrefixSearch search(g, PrefixSearch::Mode::minimize);
  search.run();
  CanonicalForm out;
  out.code = search.best();
  out.graph = graph_from_code(g.order(), out.code);
  out.permutation.assign(g.order(), 0);
  for (std::size_t pos = 0; pos < g.order(); ++pos) out.permutation[search.best_order()[pos]] = pos;
  return out;
}

AdjacencyCode canonical_code(const Graph& g, std::size_t cap) {
  check_cap(g.order(), cap);
  PrefixSearch search(g, PrefixSearch::Mode::minimize);
  search.run();
  return search.best();
}

bool is_isomorphic(const Graph& g, const Graph& h, std::size_t cap) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_code(g, cap) == canonical_code(h, cap);
}

bool is_canonical(const Graph& g) {
  check_cap(g.order(), kMaxCodeOrder);
  PrefixSearch search(g, PrefixSearch::Mode::find_smaller);
  search.run();
  return !search.found_smaller();
}

std::vector<Graph> enumerate_connected_serial(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  std::vector<Graph> out;
  const AdjacencyCode total = AdjacencyCode{1} << code_length(n);
  for (AdjacencyCode code = 0; code < total; ++code) {
    if (connected_and_canonical(n, code)) out.push_back(graph_from_code(n, code));
  }
  return out;
}

std::vector<Graph> enumerate_connected(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  const AdjacencyCode total = AdjacencyCode{1} << code_length(n);
  // Fixed chunking keeps the merge order independent of the thread count.
  const std::int64_t chunks = total < 4096 ? 1 : 256;
  const AdjacencyCode chunk_size = (total + static_cast<AdjacencyCode>(chunks) - 1) / static_cast<AdjacencyCode>(chunks);
  std::vector<std::vector<AdjacencyCode>> found(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const AdjacencyCode begin = static_cast<AdjacencyCode>(c) * chunk_size;
    const AdjacencyCode end = std::min(total, begin + chunk_size);
    auto& local = found[static_cast<std::size_t>(c)];
    for (AdjacencyCode code = begin; code < end; ++code) {
      if (connected_and_canonical(n, code)) local.push_back(code);
    }
  }

  std::vector<Graph> out;
  for (const auto& chunk : found) {
    for (auto code : chunk) out.push_back(graph_from_code(n, code));
  }
  return out;
}

std::vector<Graph> enumerate_connected_upto(std::size_t n_max, std::size_t cap) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto level = enumerate_connected(n, cap);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace graphent
