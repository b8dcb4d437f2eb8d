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

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "graphent/graph_io.hpp"
#include "json.hpp"

namespace graphent {

namespace {

void check_orbit_cap(const Graph& g, const OrbitOptions& options) {
  if (g.order() > options.max_vertices) {
    throw CapExceeded("orbit search over " + std::to_string(g.order()) + " vertices exceeds cap " +
                      std::to_string(options.max_vertices));
  }
}

// Breadth-first closure; stops early when stop(graph) returns true.
template <typename Stop>
std::unordered_set<Graph, GraphHash> lc_closure(const Graph& g, const OrbitOptions& options, bool with_relabeling,
                                                Stop stop, bool* stopped) {
  check_orbit_cap(g, options);
  std::unordered_set<Graph, GraphHash> seen{g};
  std::deque<Graph> queue{g};
  *stopped = stop(g);
  const std::size_t n = g.order();
  while (!queue.empty() && !*stopped) {
    const Graph cur = std::move(queue.front());
    queue.pop_front();
    auto visit = [&](Graph next) {
      if (*stopped || seen.contains(next)) return;
      if (seen.size() >= options.orbit_limit) {
        throw CapExceeded("orbit exceeds limit of " + std::to_string(options.orbit_limit) + " graphs");
      }
      *stopped = stop(next);
      seen.insert(next);
      queue.push_back(std::move(next));
    };
    for (Vertex a = 0; a < n; ++a) {
      if (cur.degree(a) >= 2) visit(local_complement(cur, a));
    }
    if (with_relabeling) {
      std::vector<Vertex> perm(n);
      for (Vertex i = 0; i + 1 < n; ++i) {
        for (Vertex k = 0; k < n; ++k) perm[k] = k;
        std::swap(perm[i], perm[i + 1]);
        visit(relabel(cur, perm));
      }
      if (n > 2) {
        for (Vertex k = 0; k < n; ++k) perm[k] = (k + 1) % n;
        visit(relabel(cur, perm));
      }
    }
  }
  return seen;
}

bool rows_less(const Graph& a, const Graph& b) { return a.rows() < b.rows(); }

}  // namespace

LocalClifford local_complement_unitary(const Graph& g, Vertex a) {
  if (a >= g.order()) throw std::out_of_range("vertex index out of range");
  LocalClifford u(g.order());
  u.set(a, Clifford1::sqrt_minus_i(Axis::x));
  g.neighbors(a).for_each([&](Vertex b) { u.set(b, Clifford1::sqrt_plus_i(Axis::z)); });
  return u;
}

std::vector<Graph> lc_orbit_labeled(const Graph& g, const OrbitOptions& options) {
  bool stopped = false;
  auto set = lc_closure(g, options, false, [](const Graph&) { return false; }, &stopped);
  std::vector<Graph> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), rows_less);
  return out;
}

std::size_t lc_iso_closure_size(const Graph& g, const OrbitOptions& options) {
  bool stopped = false;
  return lc_closure(g, options, true, [](const Graph&) { return false; }, &stopped).size();
}

bool lc_equivalent(const Graph& g, const Graph& h, const OrbitOptions& options) {
  if (g.order() != h.order()) throw std::invalid_argument("lc_equivalent: graphs have different orders");
  if (g == h) return true;
  // Cut-rank of every split is invariant, so a mismatch settles it early.
  if (g.order() <= kDefaultBipartitionCap && rank_list(g) != rank_list(h)) return false;
  bool found = false;
  lc_closure(g, options, false, [&](const Graph& x) { return x == h; }, &found);
  return found;
}

std::vector<std::pair<std::uint8_t, std::uint8_t>> rank_list_fingerprint(const Graph& g) {
  const auto ranks = rank_list(g);
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    out.emplace_back(static_cast<std::uint8_t>(std::popcount(mask)), ranks[mask]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassRecord> classify(std::size_t n_max, const ClassifyOptions& options) {
  if (n_max > options.max_vertices) {
    throw CapExceeded("classification up to " + std::to_string(n_max) + " vertices exceeds cap " +
                      std::to_string(options.max_vertices));
  }
  std::vector<ClassRecord> records;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::vector<Graph> graphs = options.parallel ? enumerate_connected(n, options.max_vertices)
                                                       : enumerate_connected_serial(n, options.max_vertices);
    std::unordered_map<AdjacencyCode, std::size_t> index_of;
    std::vector<AdjacencyCode> codes(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      codes[i] = adjacency_code(graphs[i]);
      index_of.emplace(codes[i], i);
    }

    PersistencyOptions popts;
    popts.max_vertices = n_max;
    const std::vector<int> persistency = options.parallel ? pauli_persistency_batch(graphs, popts)
                                                          : pauli_persistency_batch_serial(graphs, popts);

    std::vector<int> class_of(graphs.size(), -1);
    int next_class = 0;
    for (std::size_t seed = 0; seed < graphs.size(); ++seed) {
      if (class_of[seed] != -1) continue;
      std::vector<std::size_t> members{seed};
      class_of[seed] = next_class;
      for (std::size_t head = 0; head < members.size(); ++head) {
        const Graph& cur = graphs[members[head]];
        for (Vertex a = 0; a < n; ++a) {
          if (cur.degree(a) < 2) continue;
          const auto it = index_of.find(canonical_code(local_complement(cur, a), options.max_vertices));
          if (it == index_of.end()) throw std::logic_error("local complement left the connected graphs");
          if (class_of[it->second] == -1) {
            class_of[it->second] = next_class;
            members.push_back(it->second);
          }
        }
      }
      ++next_class;

      std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) { return codes[x] < codes[y]; });
      ClassRecord rec;
      rec.member_count = members.size();
      rec.n_vertices = n;
      std::size_t rep = members.front();
      for (auto m : members) {
        rec.members.push_back(graphs[m]);
        if (graphs[m].edge_count() < graphs[rep].edge_count()) rep = m;
        rec.two_colorable = rec.two_colorable || is_two_colorable(graphs[m]);
      }
      rec.representative = graphs[rep];
      rec.n_edges = graphs[rep].edge_count();
      rec.lower = lower_bound_max_rank(graphs[rep]);
      rec.upper = persistency[members.front()];
      for (auto m : members) rec.upper = std::min(rec.upper, persistency[m]);
      if (n >= 4) rec.ri2 = rank_index(graphs[rep], 2);
      if (n >= 6) rec.ri3 = rank_index(graphs[rep], 3);
      records.push_back(std::move(rec));
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const ClassRecord& x, const ClassRecord& y) {
    if (x.n_vertices != y.n_vertices) return x.n_vertices < y.n_vertices;
    if (x.n_edges != y.n_edges) return x.n_edges < y.n_edges;
    return adjacency_code(x.representative) < adjacency_code(y.representative);
  });
  for (std::size_t i = 0; i < records.size(); ++i) records[i].class_id = i + 1;
  return records;
}

std::string classes_csv(const std::vector<ClassRecord>& classes) {
  std::ostringstream out;
  out << "no,class_size,n_vertices,n_edges,lower,upper,RI_3,RI_2,two_colorable,representative\n";
  for (const auto& c : classes) {
    out << c.class_id << ',' << c.member_count << ',' << c.n_vertices << ',' << c.n_edges << ',' << c.lower << ','
        << c.upper << ',';
    out << (c.ri3 ? '"' + c.ri3->to_string() + '"' : std::string()) << ',';
    out << (c.ri2 ? '"' + c.ri2->to_string() + '"' : std::string()) << ',';
    out << (c.two_colorable ? "yes" : "no") << ',' << to_graph6(c.representative) << '\n';
  }
  return out.str();
}

std::string classes_json(const std::vector<ClassRecord>& classes) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : c.members) members.push_back(to_graph6(m));
    rows.push_back({
        {"no", c.class_id},
        {"class_size", c.member_count},
        {"n_vertices", c.n_vertices},
        {"n_edges", c.n_edges},
        {"lower", c.lower},
        {"upper", c.upper},
        {"tight", c.tight()},
        {"RI_3", c.ri3 ? nlohmann::json(c.ri3->counts) : nlohmann::json(nullptr)},
        {"RI_2", c.ri2 ? nlohmann::json(c.ri2->counts) : nlohmann::json(nullptr)},
        {"two_colorable", c.two_colorable},
        {"representative", to_graph6(c.representative)},
        {"members", members},
    });
  }
  return rows.dump(2);
}

std::string classes_dot(const std::vector<ClassRecord>& classes) {
  std::ostringstream out;
  for (const auto& c : classes) out << to_dot(c.representative, "class_" + std::to_string(c.class_id));
  return out.str();
}

}  // namespace graphent
