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

#ifndef GRAPHENT_MEASUREMENT_HPP
#define GRAPHENT_MEASUREMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphent/clifford.hpp"
#include "graphent/graph.hpp"

namespace graphent {

/// Outcome probabilities of Pauli measurements on graph states are 0, 1/2^k
/// or 1, so they are kept exact.
struct Probability {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;

  static Probability one() { return {1, 1}; }
  static Probability half() { return {1, 2}; }
  static Probability zero() { return {0, 1}; }

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  Probability operator*(Probability o) const;
  std::string to_string() const;
  friend bool operator==(const Probability&, const Probability&) = default;
};

/// Result of measuring sigma_basis on one vertex of |G>.
///
/// For outcome s the post-measurement state is |basis,s> on the measured
/// qubit times byproduct(s)|graph_after> on the rest. graph_after and the
/// byproducts use the compacted labels of G - {vertex}.
struct MeasurementOutcome {
  Vertex vertex = 0;
  Axis basis = Axis::z;
  Graph graph_after;
  LocalClifford byproduct_plus;
  LocalClifford byproduct_minus;
  Probability prob_plus = Probability::half();
  /// Special neighbor used by the x rule, labeled as in the input graph;
  /// empty for y/z and isolated x.
  std::optional<Vertex> chosen_b0;

  const LocalClifford& byproduct(Sign s) const { return s == Sign::plus ? byproduct_plus : byproduct_minus; }
  Probability probability(Sign s) const;
};

/// Graph rewrite and byproducts for a single Pauli measurement.
///   z: G - a
///   y: G xor [N_a, N_a] - a
///   x: G xor [N_b0, N_a] xor [N_b0 & N_a, N_b0 & N_a] xor [{b0}, N_a - b0] - a
/// where [A,B] is the set of all vertex pairs between A and B. For x, b0
/// defaults to the smallest neighbor of a and must be a neighbor when given.
/// An x measurement of an isolated vertex yields + with certainty and leaves
/// the remaining qubits untouched.
MeasurementOutcome measure_pauli(const Graph& g, Vertex a, Axis basis, std::optional<Vertex> b0 = std::nullopt);

/// Same graph as measure_pauli, built from local complementations:
///   z: G - a,  y: tau_a(G) - a,  x: tau_b0(tau_a(tau_b0(G)) - a)
Graph measure_via_lc(const Graph& g, Vertex a, Axis basis, std::optional<Vertex> b0 = std::nullopt);

/// Graph rewrite only, keeping the vertex count: the measured vertex is left
/// isolated instead of removed. Used by searches that hash labeled graphs.
void apply_measurement_rule(Graph& g, Vertex a, Axis basis, std::optional<Vertex> b0 = std::nullopt);

struct MeasurementStep {
  Vertex vertex = 0;  // label in the original graph
  Axis basis = Axis::z;
  Sign outcome = Sign::plus;
};

struct StepRecord {
  MeasurementStep step;
  /// Basis and sign actually applied to the graph state after moving the
  /// accumulated byproduct through the projector.
  Axis effective_basis = Axis::z;
  Sign effective_sign = Sign::plus;
  Graph graph_after;
  LocalClifford byproduct_after;
  std::vector<Vertex> survivors_after;
};

struct SequenceResult {
  Graph graph;
  LocalClifford byproduct;
  Probability probability = Probability::one();
  /// Original labels of the remaining vertices; graph vertex k is survivors[k].
  std::vector<Vertex> survivors;
  std::vector<StepRecord> transcript;
};

/// Applies measurements in order. Each step's basis and sign are pulled
/// through the byproduct accumulated so far, so the steps describe what is
/// measured on the physical state. Throws std::invalid_argument on a vertex
/// that is out of range or already measured, and on a zero-probability
/// outcome.
SequenceResult apply_sequence(const Graph& g, const std::vector<MeasurementStep>& steps);

/// JSON transcript: [{vertex, basis, outcome, graph6_after, byproduct}, ...]
std::string transcript_json(const SequenceResult& result);

}  // namespace graphent

#endif  // GRAPHENT_MEASUREMENT_HPP
