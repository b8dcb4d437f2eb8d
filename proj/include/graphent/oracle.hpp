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

#ifndef GRAPHENT_ORACLE_HPP
#define GRAPHENT_ORACLE_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "graphent/clifford.hpp"
#include "graphent/graph.hpp"
#include "graphent/stabilizer.hpp"

// Dense state-vector reference used to check the symbolic rules against
// actual quantum states. Qubit v of an n-qubit register is bit (n - 1 - v) of
// the amplitude index, i.e. vertex 0 is the most significant bit.
namespace graphent::oracle {

inline constexpr std::size_t kMaxQubits = 12;
inline constexpr double kStateTolerance = 1e-9;
inline constexpr double kRankThreshold = 1e-8;

using Amplitude = std::complex<double>;

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t n_qubits);  // |0...0>
  StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes);

  std::size_t qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

  /// Applies a 2x2 matrix to one qubit.
  void apply(Vertex q, const Matrix2& m);
  void apply_cz(Vertex a, Vertex b);
  void apply_pauli(const PauliOp& p);

 private:
  std::size_t n_ = 0;
  std::vector<Amplitude> amps_;
};

/// CZ on every edge applied to |+>^n, edges in the order given (default:
/// Graph::edges()).
StateVector graph_state(const Graph& g);
StateVector graph_state(const Graph& g, std::span<const Edge> edge_order);

/// Single-qubit eigenvector of sigma_axis with eigenvalue sign.
std::array<Amplitude, 2> eigenstate(Axis axis, Sign sign);

struct Projection {
  double probability = 0.0;
  /// Normalized post-measurement state; empty when the branch has zero
  /// probability.
  std::optional<StateVector> state;
};

/// Applies (1 + s sigma_axis)/2 on qubit a.
Projection apply_projector(const StateVector& state, Vertex a, Axis basis, Sign sign);

StateVector apply_local_clifford(const StateVector& state, const LocalClifford& u);

/// |<s|t>| for normalized states.
double overlap(const StateVector& s, const StateVector& t);
bool equal_up_to_global_phase(const StateVector& s, const StateVector& t, double tol = kStateTolerance);

/// Inserts a qubit in the given single-qubit state at position a of the
/// register: the result has rest.qubits() + 1 qubits.
StateVector insert_qubit(const StateVector& rest, Vertex a, const std::array<Amplitude, 2>& qubit);

/// Reduced density operator on the qubits of keep (ascending order).
Eigen::MatrixXcd reduced_density(const StateVector& state, VertexSet keep);

/// Numeric rank of the reduced density operator of A (equivalently of its
/// complement), counting eigenvalues above kRankThreshold.
std::size_t reduced_rank(const StateVector& state, VertexSet a);
/// von Neumann entropy of the reduction to A, in bits.
double reduced_entropy(const StateVector& state, VertexSet a);

/// Max-norm distance between the reduction of |G> to V - A and the uniform
/// mixture of U(z)|G - A> over z in F_2^A, U(z) = prod_{a in A} (prod_{b in
/// N_a - A} Z_b)^{z_a}.
double partial_trace_deviation(const Graph& g, VertexSet a);
bool verify_partial_trace_form(const Graph& g, VertexSet a, double tol = kRankThreshold);

}  // namespace graphent::oracle

#endif  // GRAPHENT_ORACLE_HPP
