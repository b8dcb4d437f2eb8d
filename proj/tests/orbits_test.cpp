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

#include "graphent/orbits.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "graphent/graph_io.hpp"
#include "graphent/measurement.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

namespace graphent {
namespace {

TEST(LcOrbit, Examples) {
  EXPECT_EQ(lc_orbit_labeled(complete_graph(2)), std::vector<Graph>{complete_graph(2)});
  for (std::size_t m = 3; m <= 8; ++m) {
    const auto orbit = lc_orbit_labeled(star_graph(m));
    EXPECT_EQ(orbit.size(), m + 1) << "m=" << m;
    EXPECT_TRUE(std::find(orbit.begin(), orbit.end(), complete_graph(m)) != orbit.end());
  }
}

TEST(LcOrbit, IsClosedAndContainsSeed) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(6, rng);
    const auto orbit = lc_orbit_labeled(g);
    const std::set<std::vector<std::uint64_t>> rows = [&] {
      std::set<std::vector<std::uint64_t>> s;
      for (const auto& h : orbit) s.insert(h.rows());
      return s;
    }();
    EXPECT_TRUE(rows.contains(g.rows()));
    for (const auto& h : orbit) {
      for (Vertex a = 0; a < h.order(); ++a) EXPECT_TRUE(rows.contains(local_complement(h, a).rows()));
    }
  }
}

TEST(LcOrbit, LimitsAreEnforced) {
  OrbitOptions tight;
  tight.orbit_limit = 10;
  EXPECT_THROW(lc_orbit_labeled(cycle_graph(6), tight), CapExceeded);
  EXPECT_THROW(lc_orbit_labeled(Graph(13)), CapExceeded);
}

TEST(LcIsoClosure, FiveCycleClass) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(lc_iso_closure_size(c5), 132u);
  std::set<AdjacencyCode> classes;
  bool any_bipartite = false;
  for (const auto& g : lc_orbit_labeled(c5)) {
    classes.insert(canonical_code(g));
    any_bipartite = any_bipartite || is_two_colorable(g);
  }
  EXPECT_EQ(classes.size(), 3u);
  EXPECT_FALSE(any_bipartite);
}

TEST(LcEquivalent, Examples) {
  EXPECT_TRUE(lc_equivalent(star_graph(6), complete_graph(6)));
  EXPECT_FALSE(lc_equivalent(path_graph(4), star_graph(4)));
  const Graph c6 = cycle_graph(6);
  EXPECT_TRUE(lc_equivalent(c6, c6));
  EXPECT_THROW(lc_equivalent(c6, cycle_graph(5)), std::invalid_argument);
}

TEST(LcEquivalent, SymmetricOnRandomPairs) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_connected_graph(6, rng);
    Graph h = g;
    for (int k = 0; k < 4; ++k) h = local_complement(h, rng() % 6);
    EXPECT_TRUE(lc_equivalent(g, h));
    EXPECT_TRUE(lc_equivalent(h, g));
    const Graph other = testing::random_connected_graph(6, rng);
    EXPECT_EQ(lc_equivalent(g, other), lc_equivalent(other, g));
  }
}

TEST(LocalComplementUnitary, Shape) {
  const LocalClifford u = local_complement_unitary(star_graph(4), 0);
  EXPECT_EQ(u[0], Clifford1::sqrt_minus_i(Axis::x));
  for (Vertex v = 1; v < 4; ++v) EXPECT_EQ(u[v], Clifford1::sqrt_plus_i(Axis::z));
  EXPECT_TRUE(local_complement_unitary(star_graph(4), 1)[2].is_identity());
}

TEST(RankListFingerprint, ConstantOnOrbits) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const auto fp = rank_list_fingerprint(g);
      for (const auto& h : lc_orbit_labeled(g)) ASSERT_EQ(rank_list_fingerprint(h), fp);
    }
  }
}

TEST(RankListFingerprint, SeparatesThePathAndStarClasses) {
  EXPECT_NE(rank_list_fingerprint(path_graph(4)), rank_list_fingerprint(star_graph(4)));
  EXPECT_NE(rank_list_fingerprint(path_graph(5)), rank_list_fingerprint(cycle_graph(5)));
}

TEST(Petersen, SpokeSwapIsNotLocallyEquivalent) {
  const Graph p = petersen_graph();
  std::vector<Vertex> swap(10);
  for (Vertex v = 0; v < 10; ++v) swap[v] = (v + 5) % 10;
  const Graph q = relabel(p, swap);
  EXPECT_NE(p, q);
  EXPECT_EQ(rank_list(p), rank_list(q));
  EXPECT_EQ(rank_list_fingerprint(p), rank_list_fingerprint(q));
  EXPECT_FALSE(lc_equivalent(p, q));
}

TEST(Classify, SmallOrders) {
  EXPECT_EQ(classify(2).size(), 1u);
  const auto six = classify(6);
  EXPECT_EQ(six.size(), 19u);
  std::size_t members = 0;
  for (const auto& c : six) members += c.member_count;
  EXPECT_EQ(members, 1u + 2 + 6 + 21 + 112);
  EXPECT_THROW(classify(8), CapExceeded);
}

TEST(Classify, RecordsAreConsistent) {
  const auto classes = classify(6);
  std::set<std::pair<std::size_t, AdjacencyCode>> seen;
  for (const auto& c : classes) {
    ASSERT_EQ(c.members.size(), c.member_count);
    ASSERT_GE(c.member_count, 1u);
    EXPECT_LE(c.lower, c.upper);
    EXPECT_TRUE(is_canonical(c.representative));
    bool bipartite = false;
    std::size_t min_edges = 64;
    for (const auto& m : c.members) {
      EXPECT_TRUE(seen.insert({m.order(), adjacency_code(m)}).second);
      EXPECT_EQ(lower_bound_max_rank(m), c.lower);
      EXPECT_GE(pauli_persistency(m), c.upper);
      bipartite = bipartite || testing::brute_two_colorable(m);
      min_edges = std::min(min_edges, m.edge_count());
      EXPECT_EQ(rank_list_fingerprint(m), rank_list_fingerprint(c.representative));
    }
    EXPECT_EQ(c.two_colorable, bipartite);
    EXPECT_EQ(c.n_edges, min_edges);
  }
}

TEST(Classify, ParallelMatchesSerial) {
  ClassifyOptions serial;
  serial.parallel = false;
  const auto a = classify(6);
  const auto b = classify(6, serial);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].representative, b[i].representative);
    EXPECT_EQ(a[i].upper, b[i].upper);
    EXPECT_EQ(a[i].member_count, b[i].member_count);
  }
  EXPECT_EQ(classes_csv(a), classes_csv(b));
}

TEST(Classify, OutputFormats) {
  const auto classes = classify(4);
  const std::string csv = classes_csv(classes);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "no,class_size,n_vertices,n_edges,lower,upper,RI_3,RI_2,two_colorable,representative");
  EXPECT_NE(csv.find("4,4,4,3,2,2,,\"(2,1)\",yes,"), std::string::npos);
  const auto json = nlohmann::json::parse(classes_json(classes));
  ASSERT_EQ(json.size(), classes.size());
  EXPECT_EQ(json[0]["class_size"], 1);
  EXPECT_TRUE(json[0]["RI_2"].is_null());
  EXPECT_EQ(parse_graph6(json[3]["representative"].get<std::string>()), classes[3].representative);
  EXPECT_NE(classes_dot(classes).find("graph class_4"), std::string::npos);
}

}  // namespace
}  // namespace graphent
