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

#ifndef GRAPHENT_ORBITS_HPP
#define GRAPHENT_ORBITS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphent/canonical.hpp"
#include "graphent/clifford.hpp"
#include "graphent/entanglement.hpp"
#include "graphent/graph.hpp"

namespace graphent {

struct OrbitOptions {
  std::size_t max_vertices = 12;
  std::size_t orbit_limit = 1'000'000;
};

/// Local Clifford U with U|G> = |tau_a(G)> up to global phase:
/// sqrt(-iX) on a and sqrt(+iZ) on every neighbor of a.
LocalClifford local_complement_unitary(const Graph& g, Vertex a);

/// Closure of {G} under local complementation at every vertex, as labeled
/// graphs (no relabeling). Sorted by adjacency rows. Throws CapExceeded when
/// the order or the orbit size passes the limits.
std::vector<Graph> lc_orbit_labeled(const Graph& g, const OrbitOptions& options = {});

/// Number of labeled graphs in the closure of {G} under local
/// complementation and vertex relabeling.
std::size_t lc_iso_closure_size(const Graph& g, const OrbitOptions& options = {});

/// H is reachable from G by a sequence of local complementations. This
/// certifies equivalence under local Clifford operations.
bool lc_equivalent(const Graph& g, const Graph& h, const OrbitOptions& options = {});

/// Sorted multiset of (|A|, rank) over every nonempty proper subset A.
/// Invariant under local complementation and under relabeling.
std::vector<std::pair<std::uint8_t, std::uint8_t>> rank_list_fingerprint(const Graph& g);

/// One row of the classification of connected graphs into classes under
/// local complementation plus graph isomorphism.
struct ClassRecord {
  std::size_t class_id = 0;
  Graph representative;  // canonical form of a member with fewest edges
  std::size_t member_count = 0;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;  // minimum over members
  int lower = 0;            // max split rank, the same for every member
  int upper = 0;            // minimum persistency over members
  std::optional<RankIndex> ri2;
  std::optional<RankIndex> ri3;
  bool two_colorable = false;  // some member is 2-colorable
  std::vector<Graph> members;  // canonical forms, ascending code

  bool tight() const { return lower == upper; }
};

struct ClassifyOptions {
  std::size_t max_vertices = 7;  // 8 works but is slow
  bool parallel = true;
};

/// Partitions all connected graphs with 2 <= n <= n_max into classes and
/// returns one record per class sorted by (n, edges, representative code).
/// Classes are found by walking canonical forms under local complementation,
/// which is enough because relabeling commutes with it.
std::vector<ClassRecord> classify(std::size_t n_max, const ClassifyOptions& options = {});

/// Table-style CSV: no,class_size,n_vertices,n_edges,lower,upper,RI_3,RI_2,two_colorable,representative
std::string classes_csv(const std::vector<ClassRecord>& classes);
std::string classes_json(const std::vector<ClassRecord>& classes);
std::string classes_dot(const std::vector<ClassRecord>& classes);

}  // namespace graphent

#endif  // GRAPHENT_ORBITS_HPP
