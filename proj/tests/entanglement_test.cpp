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

#include <random>

#include <gtest/gtest.h>

#include "graphent/canonical.hpp"
#include "graphent/measurement.hpp"
#include "support/oracles.hpp"

namespace graphent {
namespace {

TEST(Bipartition, Validation) {
  EXPECT_THROW(Bipartition(4, {}), std::invalid_argument);
  EXPECT_THROW(Bipartition(4, VertexSet::range(4)), std::invalid_argument);
  EXPECT_THROW(Bipartition(4, VertexSet{5}), std::out_of_range);
  const Bipartition split(5, VertexSet{0, 1, 2});
  EXPECT_EQ(split.b(), (VertexSet{3, 4}));
  EXPECT_EQ(split.smaller(), (VertexSet{3, 4}));
}

TEST(SchmidtRank, Examples) {
  // Even ring of 18, A = {1,2,5,7,...,17} in 1-based labels.
  VertexSet a{0, 1};
  for (Vertex v = 4; v < 18; v += 2) a.insert(v);
  EXPECT_EQ(schmidt_rank(cycle_graph(18), Bipartition(18, a)), 9);
  const Graph star = star_graph(7);
  for (std::uint64_t mask = 1; mask < 127; ++mask) EXPECT_EQ(schmidt_rank(star, Bipartition(7, VertexSet(mask))), 1);
  EXPECT_EQ(schmidt_rank(cycle_graph(5), Bipartition(5, VertexSet{2})), 1);
  EXPECT_THROW(schmidt_rank(cycle_graph(5), Bipartition(6, VertexSet{2})), std::invalid_argument);
}

TEST(SchmidtRank, MatchesDenseEliminationAndIsSymmetric) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(10, 0.4, rng);
    const std::uint64_t mask = 1 + rng() % 1022;
    const int r = schmidt_rank(g, Bipartition(10, VertexSet(mask)));
    EXPECT_EQ(r, testing::brute_cut_rank(g, mask));
    EXPECT_EQ(r, schmidt_rank(g, Bipartition(10, VertexSet(~mask & 1023))));
  }
}

TEST(RankList, ParallelMatchesSerial) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_graph(12, 0.5, rng);
    EXPECT_EQ(rank_list(g), rank_list_serial(g));
  }
  EXPECT_THROW(rank_list(Graph(21)), CapExceeded);
}

TEST(RankIndex, Examples) {
  EXPECT_EQ(rank_index(star_graph(7), 3).to_string(), "(0,0,35)");
  EXPECT_EQ(rank_index(star_graph(7), 2).total(), 21u);
  // Four-vertex path splits into three unordered halves.
  EXPECT_EQ(rank_index(path_graph(4), 2).to_string(), "(2,1)");
  EXPECT_EQ(rank_index(cycle_graph(6), 3).total(), 10u);
  EXPECT_THROW(rank_index(cycle_graph(5), 3), std::invalid_argument);
  EXPECT_THROW(rank_index(cycle_graph(5), 0), std::invalid_argument);
}

TEST(RankIndex, CountsZeroRankSplitsSeparately) {
  const RankIndex ri = rank_index(Graph(4, {{0, 1}, {2, 3}}), 2);
  EXPECT_EQ(ri.zero_rank, 1u);
  EXPECT_EQ(ri.total(), 3u);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound_max_rank(complete_graph(2)), 1);
  EXPECT_EQ(lower_bound_max_rank(cycle_graph(6)), 3);
  EXPECT_EQ(lower_bound_max_rank(path_graph(4)), 2);
  EXPECT_EQ(lower_bound_max_rank(Graph(3)), 0);
  EXPECT_THROW(lower_bound_max_rank(Graph(21)), CapExceeded);
}

TEST(LowerBound, ParallelMatchesSerial) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_graph(14, 0.15, rng);
    EXPECT_EQ(lower_bound_max_rank(g), lower_bound_max_rank_serial(g));
  }
}

TEST(Persistency, Examples) {
  EXPECT_EQ(pauli_persistency(star_graph(6)), 1);
  EXPECT_EQ(pauli_persistency(cycle_graph(6)), 3);
  EXPECT_EQ(pauli_persistency(cycle_graph(5)), 3);
  EXPECT_EQ(lower_bound_max_rank(cycle_graph(5)), 2);
  EXPECT_EQ(pauli_persistency(Graph(4)), 0);
  EXPECT_THROW(pauli_persistency(path_graph(8)), CapExceeded);
}

TEST(Persistency, DepthLimitIsEnforced) {
  PersistencyOptions options;
  options.depth_limit = 1;
  // C5 needs a search at depth 2 before settling on 3.
  EXPECT_THROW(pauli_persistency(cycle_graph(5), options), CapExceeded);
}

TEST(Persistency, BatchMatchesSerial) {
  const auto graphs = enumerate_connected(6);
  EXPECT_EQ(pauli_persistency_batch(graphs), pauli_persistency_batch_serial(graphs));
}

// Exhaustive search over all measurement sequences without pruning.
int brute_persistency(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  int best = static_cast<int>(g.order());
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) == 0) continue;
    for (Axis basis : {Axis::x, Axis::y, Axis::z}) {
      Graph next = g;
      apply_measurement_rule(next, a, basis);
      best = std::min(best, 1 + brute_persistency(next));
    }
  }
  return best;
}

TEST(Persistency, MatchesUnprunedSearchOnSmallGraphs) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : enumerate_connected(n)) EXPECT_EQ(pauli_persistency(g), brute_persistency(g));
  }
}

TEST(Bounds, Examples) {
  const BoundsReport c5 = bounds(cycle_graph(5));
  EXPECT_EQ(c5.lower, 2);
  EXPECT_EQ(c5.upper, 3);
  EXPECT_FALSE(c5.tight);
  const BoundsReport grid = bounds(grid_graph(2, 3));
  EXPECT_TRUE(grid.tight);
  EXPECT_EQ(grid.upper, 3);
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph tree = testing::random_tree(10, rng);
    const BoundsReport r = bounds(tree);
    EXPECT_TRUE(r.tight);
    EXPECT_EQ(static_cast<std::size_t>(r.upper), testing::brute_vertex_cover_size(tree));
  }
}

TEST(Bounds, SandwichOverAllSmallGraphs) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const BoundsReport r = bounds(g);
      ASSERT_LE(r.lower, r.upper);
      ASSERT_LE(r.upper, r.cover_size);
    }
  }
}

TEST(MaxRankCriterion, Examples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_TRUE(max_rank_criterion(c6, Bipartition(6, VertexSet{0, 1, 4})));
  EXPECT_EQ(schmidt_rank(c6, Bipartition(6, VertexSet{0, 1, 4})), 3);
  EXPECT_FALSE(max_rank_criterion(c6, Bipartition(6, VertexSet{0, 2, 4})));
  EXPECT_EQ(schmidt_rank(c6, Bipartition(6, VertexSet{0, 2, 4})), 2);
  EXPECT_TRUE(max_rank_criterion(complete_graph(2), Bipartition(2, VertexSet{0})));
}

TEST(MaxRankCriterion, ImpliesFullRankExhaustively) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        const Bipartition split(n, VertexSet(mask));
        if (max_rank_criterion(g, split)) {
          ASSERT_EQ(static_cast<std::size_t>(schmidt_rank(g, split)), split.smaller().size());
        }
      }
    }
  }
}

TEST(TwoColorableBounds, Examples) {
  const TwoColorBounds star = two_colorable_bounds(star_graph(6));
  EXPECT_EQ(star.lower, 1);
  EXPECT_EQ(star.upper, 1);
  const TwoColorBounds c6 = two_colorable_bounds(cycle_graph(6));
  EXPECT_EQ(c6.lower, 2);
  EXPECT_EQ(c6.upper, 3);
  try {
    two_colorable_bounds(cycle_graph(5));
    FAIL() << "expected NotTwoColorable";
  } catch (const NotTwoColorable& e) {
    EXPECT_EQ(e.odd_cycle().size(), 5u);
  }
}

TEST(TwoColorableBounds, LowerNeverExceedsMaxRank) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      if (!is_two_colorable(g)) continue;
      const TwoColorBounds b = two_colorable_bounds(g);
      EXPECT_LE(b.lower, lower_bound_max_rank(g));
      EXPECT_GE(b.upper, pauli_persistency(g));
    }
  }
}

TEST(RankProperties, EdgeToggleAndLocalComplement) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(8, 0.5, rng);
    const Vertex a = rng() % 8;
    Vertex b = rng() % 8;
    if (b == a) b = (a + 1) % 8;
    const Graph toggled = toggle_edge(g, a, b);
    const Graph lc = local_complement(g, a);
    for (std::uint64_t mask = 1; mask < 255; ++mask) {
      const int r = cut_rank(g, VertexSet(mask));
      EXPECT_LE(std::abs(cut_rank(toggled, VertexSet(mask)) - r), 1);
      EXPECT_EQ(cut_rank(lc, VertexSet(mask)), r);
    }
    EXPECT_LE(std::abs(lower_bound_max_rank(toggled) - lower_bound_max_rank(g)), 1);
  }
}

TEST(RankProperties, VertexDeletion) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_connected_graph(7, rng);
    const Vertex a = rng() % 7;
    const Graph h = delete_vertex(g, a);
    EXPECT_LE(lower_bound_max_rank(h), lower_bound_max_rank(g));
    EXPECT_LE(pauli_persistency(g), pauli_persistency(h) + 1);
  }
}

}  // namespace
}  // namespace graphent
