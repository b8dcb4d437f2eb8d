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

#include "graphent/entanglement.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "graphent/gf2.hpp"
#include "graphent/measurement.hpp"

namespace graphent {

Bipartition::Bipartition(std::size_t n, VertexSet a) : n_(n), a_(a) {
  if ((a - VertexSet::range(n)).bits() != 0) throw std::out_of_range("bipartition side exceeds vertex set");
  if (a.empty() || a.size() == n) throw std::invalid_argument("bipartition sides must be nonempty");
}

int cut_rank(const Graph& g, VertexSet a) {
  const std::uint64_t b = g.vertices().bits() & ~a.bits();
  std::array<std::uint64_t, 64> rows{};
  std::size_t count = 0;
  a.for_each([&](Vertex v) { rows[count++] = g.rows()[v] & b; });
  return rank_f2_words(std::span<const std::uint64_t>(rows.data(), count));
}

int schmidt_rank(const Graph& g, const Bipartition& split) {
  if (split.order() != g.order()) throw std::invalid_argument("bipartition is for a different vertex count");
  // The rank is symmetric; eliminate over the shorter side.
  return cut_rank(g, split.smaller());
}

namespace {

void check_bipartition_cap(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("bipartition scan over " + std::to_string(g.order()) + " vertices exceeds cap " +
                      std::to_string(cap));
  }
}

}  // namespace

std::vector<std::uint8_t> rank_list_serial(const Graph& g) {
  check_bipartition_cap(g, kDefaultBipartitionCap);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  std::vector<std::uint8_t> out(total, 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) out[mask] = static_cast<std::uint8_t>(cut_rank(g, VertexSet(mask)));
  return out;
}

std::vector<std::uint8_t> rank_list(const Graph& g) {
  check_bipartition_cap(g, kDefaultBipartitionCap);
  const std::int64_t total = std::int64_t{1} << g.order();
  std::vector<std::uint8_t> out(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t mask = 0; mask < total; ++mask) {
    out[static_cast<std::size_t>(mask)] =
        static_cast<std::uint8_t>(cut_rank(g, VertexSet(static_cast<std::uint64_t>(mask))));
  }
  return out;
}

std::size_t RankIndex::total() const { return std::accumulate(counts.begin(), counts.end(), zero_rank); }

std::string RankIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? "," : "") << counts[i];
  out << ')';
  return out.str();
}

RankIndex rank_index(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k == 0 || 2 * k > n) {
    throw std::invalid_argument("rank index needs 1 <= k <= n/2 (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  check_bipartition_cap(g, kDefaultBipartitionCap);
  RankIndex ri;
  ri.k = k;
  ri.counts.assign(k, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    // Equal halves: keep the side holding vertex 0.
    if (2 * k == n && !(mask & 1u)) continue;
    const int r = cut_rank(g, VertexSet(mask));
    if (r == 0) {
      ++ri.zero_rank;
    } else {
      ++ri.counts[k - static_cast<std::size_t>(r)];
    }
  }
  return ri;
}

int lower_bound_max_rank_serial(const Graph& g, std::size_t cap) {
  check_bipartition_cap(g, cap);
  const std::size_t n = g.order();
  if (n < 2) return 0;
  const int ceiling = static_cast<int>(n / 2);
  // Sides that avoid the last vertex enumerate each split exactly once.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  int best = 0;
  for (std::uint64_t mask = 1; mask < total && best < ceiling; ++mask) {
    best = std::max(best, cut_rank(g, VertexSet(mask)));
  }
  return best;
}

int lower_bound_max_rank(const Graph& g, std::size_t cap) {
  check_bipartition_cap(g, cap);
  const std::size_t n = g.order();
  if (n < 2) return 0;
  // Small graphs are cheaper serially than the fork/join.
  if (n < 12) return lower_bound_max_rank_serial(g, cap);
  const int ceiling = static_cast<int>(n / 2);
  const std::int64_t total = std::int64_t{1} << (n - 1);
  std::atomic<int> best{0};
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t mask = 1; mask < total; ++mask) {
    if (best.load(std::memory_order_relaxed) >= ceiling) continue;
    const int r = cut_rank(g, VertexSet(static_cast<std::uint64_t>(mask)));
    int cur = best.load(std::memory_order_relaxed);
    while (r > cur && !best.compare_exchange_weak(cur, r)) {
    }
  }
  return best.load();
}

namespace {

class PersistencySearch {
 public:
  explicit PersistencySearch(const PersistencyOptions& options) : options_(options) {}

  int run(const Graph& g) {
    if (g.order() > options_.max_vertices) {
      throw CapExceeded("persistency search over " + std::to_string(g.order()) + " vertices exceeds cap " +
                        std::to_string(options_.max_vertices));
    }
    const int lower = lower_bound_max_rank_serial(g, Graph::kMaxVertices);
    const int cover = static_cast<int>(min_vertex_cover(g).size());
    if (lower >= cover) return cover;
    for (int depth = lower; depth < cover; ++depth) {
      if (options_.depth_limit && static_cast<std::size_t>(depth) > *options_.depth_limit) {
        throw CapExceeded("persistency search exceeded depth limit " + std::to_string(*options_.depth_limit));
      }
      if (solvable(g, depth)) return depth;
    }
    return cover;
  }

 private:
  bool solvable(const Graph& g, int depth) {
    std::uint64_t active = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.rows()[v] != 0) active |= std::uint64_t{1} << v;
    }
    if (active == 0) return true;
    if (depth == 0) return false;

    const auto it = failed_.find(g);
    if (it != failed_.end() && it->second >= depth) return false;
    if (lower_bound_max_rank_serial(g, Graph::kMaxVertices) > depth) {
      failed_[g] = std::max(depth, it == failed_.end() ? 0 : it->second);
      return false;
    }

    std::array<std::pair<int, Vertex>, 64> order{};
    std::size_t count = 0;
    VertexSet(active).for_each([&](Vertex v) { order[count++] = {-static_cast<int>(g.degree(v)), v}; });
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));

    for (Axis basis : {Axis::z, Axis::y, Axis::x}) {
      for (std::size_t i = 0; i < count; ++i) {
        Graph next = g;
        apply_measurement_rule(next, order[i].second, basis);
        if (solvable(next, depth - 1)) return true;
      }
    }
    int& known = failed_[g];
    known = std::max(known, depth);
    return false;
  }

  PersistencyOptions options_;
  std::unordered_map<Graph, int, GraphHash> failed_;
};

}  // namespace

int pauli_persistency(const Graph& g, const PersistencyOptions& options) {
  PersistencySearch search(options);
  return search.run(g);
}

std::vector<int> pauli_persistency_batch_serial(std::span<const Graph> graphs, const PersistencyOptions& options) {
  std::vector<int> out(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = pauli_persistency(graphs[i], options);
  return out;
}

std::vector<int> pauli_persistency_batch(std::span<const Graph> graphs, const PersistencyOptions& options) {
  for (const auto& g : graphs) {
    if (g.order() > options.max_vertices) {
      throw CapExceeded("persistency search over " + std::to_string(g.order()) + " vertices exceeds cap " +
                        std::to_string(options.max_vertices));
    }
  }
  std::vector<int> out(graphs.size());
  const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = pauli_persistency(graphs[static_cast<std::size_t>(i)], options);
  }
  return out;
}

BoundsReport bounds(const Graph& g, const PersistencyOptions& options) {
  BoundsReport r;
  r.lower = lower_bound_max_rank(g);
  r.cover_size = static_cast<int>(min_vertex_cover(g).size());
  if (r.lower >= r.cover_size) {
    // The sandwich closes without any search.
    r.upper = r.cover_size;
  } else {
    r.upper = pauli_persistency(g, options);
  }
  r.tight = r.lower == r.upper;
  return r;
}

namespace {

bool criterion_for_side(const Graph& g, VertexSet side, VertexSet other) {
  const std::size_t n = g.order();
  // Crossing-edge forest: union-find over all vertices.
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  bool acyclic = true;
  side.for_each([&](Vertex u) {
    (g.neighbors(u) & other).for_each([&](Vertex v) {
      const Vertex ru = find(u);
      const Vertex rv = find(v);
      if (ru == rv) {
        acyclic = false;
      } else {
        parent[ru] = rv;
      }
    });
  });
  if (!acyclic) return false;

  std::vector<int> leaves(n, 0);
  bool ok = true;
  side.for_each([&](Vertex u) {
    const std::size_t deg = (g.neighbors(u) & other).size();
    if (deg == 0) ok = false;
    if (deg == 1 && ++leaves[find(u)] > 1) ok = false;
  });
  return ok;
}

}  // namespace

bool max_rank_criterion(const Graph& g, const Bipartition& split) {
  if (split.order() != g.order()) throw std::invalid_argument("bipartition is for a different vertex count");
  const VertexSet a = split.a();
  const VertexSet b = split.b();
  if (a.size() < b.size()) return criterion_for_side(g, a, b);
  if (b.size() < a.size()) return criterion_for_side(g, b, a);
  return criterion_for_side(g, a, b) || criterion_for_side(g, b, a);
}

TwoColorBounds two_colorable_bounds(const Graph& g) {
  const auto coloring = two_coloring(g);
  if (!coloring) throw NotTwoColorable("graph is not 2-colorable (odd cycle)", find_odd_cycle(g));

  // Per component, the smaller color class can be chosen independently.
  std::vector<int> comp(g.order(), -1);
  int upper = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    std::array<int, 2> sizes{0, 0};
    std::vector<Vertex> stack{s};
    comp[s] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      ++sizes[static_cast<std::size_t>((*coloring)[u])];
      g.neighbors(u).for_each([&](Vertex v) {
        if (comp[v] == -1) {
          comp[v] = 1;
          stack.push_back(v);
        }
      });
    }
    upper += std::min(sizes[0], sizes[1]);
  }
  const int rank = rank_f2_words(g.rows());
  return TwoColorBounds{(rank + 1) / 2, upper};
}

}  // namespace graphent
