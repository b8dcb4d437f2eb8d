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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace graphent {
namespace {

TEST(AdjacencyCode, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(9, 0.5, rng);
    EXPECT_EQ(graph_from_code(9, adjacency_code(g)), g);
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  const Graph p3 = path_graph(3);
  std::vector<Vertex> perm{0, 1, 2};
  do {
    EXPECT_EQ(canonical_code(relabel(p3, perm)), canonical_code(p3));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_FALSE(is_isomorphic(path_graph(4), star_graph(4)));
}

TEST(CanonicalForm, MatchesExhaustiveMinimum) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(size(rng), 0.45, rng);
    const CanonicalForm form = canonical_form(g);
    EXPECT_EQ(form.code, testing::brute_canonical_code(g));
    EXPECT_EQ(relabel(g, form.permutation), form.graph);
    EXPECT_EQ(is_canonical(g), adjacency_code(g) == form.code);
  }
}

TEST(CanonicalForm, HandlesRegularGraphsAtTheCap) {
  const Graph p = petersen_graph();
  std::vector<Vertex> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
  const CanonicalForm a = canonical_form(p);
  const CanonicalForm b = canonical_form(relabel(p, perm));
  EXPECT_EQ(a.code, b.code);
  EXPECT_TRUE(is_isomorphic(cycle_graph(10), relabel(cycle_graph(10), perm)));
  EXPECT_THROW(canonical_form(Graph(11)), CapExceeded);
}

TEST(Enumeration, CountsPerOrder) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 6, 21, 112, 853};
  std::size_t total = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto graphs = enumerate_connected(n);
    EXPECT_EQ(graphs.size(), expected[n]) << "n=" << n;
    total += graphs.size();
  }
  EXPECT_EQ(total, 995u);
  EXPECT_EQ(enumerate_connected_upto(7).size(), 995u);
}

TEST(Enumeration, MatchesBruteForceClassesUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> got;
    for (const auto& g : enumerate_connected(n)) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(got.insert(adjacency_code(g)).second) << "duplicate";
    }
    EXPECT_EQ(got, testing::brute_connected_classes(n)) << "n=" << n;
  }
}

TEST(Enumeration, FourVertexGraphsAreTheKnownSix) {
  const auto graphs = enumerate_connected(4);
  std::set<AdjacencyCode> codes;
  for (const auto& g : graphs) codes.insert(adjacency_code(g));
  const Graph paw(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  const Graph diamond(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  for (const Graph& g : {path_graph(4), star_graph(4), cycle_graph(4), complete_graph(4), paw, diamond}) {
    EXPECT_TRUE(codes.contains(canonical_code(g)));
  }
}

TEST(Enumeration, OutputIsInCanonicalOrder) {
  const auto graphs = enumerate_connected(6);
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    EXPECT_LT(adjacency_code(graphs[i - 1]), adjacency_code(graphs[i]));
  }
}

TEST(Enumeration, ParallelMatchesSerial) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(enumerate_connected(n), enumerate_connected_serial(n));
}

TEST(Enumeration, CapIsEnforced) {
  EXPECT_THROW(enumerate_connected(8), CapExceeded);
  EXPECT_THROW(enumerate_connected(12, 12), CapExceeded);
}

}  // namespace
}  // namespace graphent
