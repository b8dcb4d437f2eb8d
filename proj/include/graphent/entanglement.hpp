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

#ifndef GRAPHENT_ENTANGLEMENT_HPP
#define GRAPHENT_ENTANGLEMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

/// (A, V - A) with A nonempty and proper. (A, B) and (B, A) are the same split.
class Bipartition {
 public:
  Bipartition(std::size_t n, VertexSet a);

  std::size_t order() const { return n_; }
  VertexSet a() const { return a_; }
  VertexSet b() const { return VertexSet::range(n_) - a_; }
  VertexSet smaller() const { return a_.size() <= b().size() ? a_ : b(); }

 private:
  std::size_t n_;
  VertexSet a_;
};

class NotTwoColorable : public std::invalid_argument {
 public:
  NotTwoColorable(const std::string& what, std::vector<Vertex> odd_cycle)
      : std::invalid_argument(what), odd_cycle_(std::move(odd_cycle)) {}
  const std::vector<Vertex>& odd_cycle() const { return odd_cycle_; }

 private:
  std::vector<Vertex> odd_cycle_;
};

/// log2 of the Schmidt rank across (A, B): rank over GF(2) of the A x B
/// block of the adjacency matrix.
int schmidt_rank(const Graph& g, const Bipartition& split);
/// Same, for any subset A (empty or full gives 0).
int cut_rank(const Graph& g, VertexSet a);

/// Rank of cut_rank(A) for every A, indexed by the bit mask of A.
/// Parallel over masks; rank_list_serial is the reference.
std::vector<std::uint8_t> rank_list(const Graph& g);
std::vector<std::uint8_t> rank_list_serial(const Graph& g);

/// Histogram of split ranks over all unordered bipartitions whose smaller
/// side has exactly k vertices. counts[0] is the number of splits with rank
/// k, counts[1] with rank k-1, ..., counts[k-1] with rank 1; zero_rank holds
/// splits with rank 0, which only disconnected graphs have.
struct RankIndex {
  std::size_t k = 0;
  std::vector<std::size_t> counts;
  std::size_t zero_rank = 0;

  std::size_t total() const;
  /// "(20,12,3)"
  std::string to_string() const;
  friend bool operator==(const RankIndex&, const RankIndex&) = default;
};

/// Requires 1 <= k <= n / 2. For n == 2k each split is counted once.
RankIndex rank_index(const Graph& g, std::size_t k);

inline constexpr std::size_t kDefaultBipartitionCap = 20;

/// Maximum split rank over all bipartitions: a lower bound on the Schmidt
/// measure. Parallel over bipartitions; the serial variant is the reference.
int lower_bound_max_rank(const Graph& g, std::size_t cap = kDefaultBipartitionCap);
int lower_bound_max_rank_serial(const Graph& g, std::size_t cap = kDefaultBipartitionCap);

struct PersistencyOptions {
  std::size_t max_vertices = 7;
  /// Largest sequence length the search may try before giving up with
  /// CapExceeded. Unset means no limit beyond the vertex-cover bound.
  std::optional<std::size_t> depth_limit;
};

/// Minimal number of single-vertex Pauli measurements (graph rules, default
/// special neighbor) that leaves no edges. Iterative deepening from the
/// max-rank lower bound up to the minimum vertex cover, memoized on the
/// labeled graph per remaining depth.
int pauli_persistency(const Graph& g, const PersistencyOptions& options = {});

/// Persistency of many graphs; parallel over graphs.
std::vector<int> pauli_persistency_batch(std::span<const Graph> graphs, const PersistencyOptions& options = {});
std::vector<int> pauli_persistency_batch_serial(std::span<const Graph> graphs,
                                                const PersistencyOptions& options = {});

struct BoundsReport {
  int lower = 0;
  int upper = 0;
  int cover_size = 0;
  bool tight = false;
};

/// lower = max split rank, upper = Pauli persistency, cover = minimum vertex
/// cover. When tight the Schmidt measure equals the common value; otherwise
/// only the interval is known.
BoundsReport bounds(const Graph& g, const PersistencyOptions& options = {});

/// Sufficient condition for the split to have rank min(|A|, |B|): the edges
/// across the split form a forest, no vertex of the smaller side is without
/// a crossing edge, and every tree has at most one leaf on the smaller side.
/// With |A| == |B| either side may play the smaller one.
bool max_rank_criterion(const Graph& g, const Bipartition& split);

struct TwoColorBounds {
  int lower = 0;  // ceil(rank(adjacency) / 2)
  int upper = 0;  // size of the smaller color class
};

/// Throws NotTwoColorable, carrying an odd cycle, for non-bipartite graphs.
TwoColorBounds two_colorable_bounds(const Graph& g);

}  // namespace graphent

#endif  // GRAPHENT_ENTANGLEMENT_HPP
