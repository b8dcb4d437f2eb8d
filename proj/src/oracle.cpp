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

#include "graphent/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace graphent::oracle {

namespace {

void check_qubits(std::size_t n) {
  if (n > kMaxQubits) {
    throw CapExceeded("state vector over " + std::to_string(n) + " qubits exceeds cap " + std::to_string(kMaxQubits));
  }
}

std::size_t qubit_bit(std::size_t n, Vertex q) { return std::size_t{1} << (n - 1 - q); }

// Index into the subsystem built from the bits of the listed qubits.
std::size_t gather(std::size_t n, std::size_t index, const std::vector<Vertex>& qubits) {
  std::size_t out = 0;
  for (Vertex q : qubits) out = (out << 1) | ((index & qubit_bit(n, q)) ? 1u : 0u);
  return out;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_(n_qubits) {
  check_qubits(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Amplitude(0));
  amps_[0] = 1;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubits(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) throw std::invalid_argument("amplitude count != 2^n");
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0) throw std::invalid_argument("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nrm;
}

void StateVector::apply(Vertex q, const Matrix2& m) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  const std::size_t bit = qubit_bit(n_, q);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | bit];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_cz(Vertex a, Vertex b) {
  if (a >= n_ || b >= n_) throw std::out_of_range("qubit index out of range");
  const std::size_t mask = qubit_bit(n_, a) | qubit_bit(n_, b);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & mask) == mask) amps_[i] = -amps_[i];
  }
}

void StateVector::apply_pauli(const PauliOp& p) {
  if (p.n != n_) throw std::invalid_argument("Pauli operator size mismatch");
  static const Matrix2 x{Amplitude(0), Amplitude(1), Amplitude(1), Amplitude(0)};
  static const Matrix2 y{Amplitude(0), Amplitude(0, -1), Amplitude(0, 1), Amplitude(0)};
  static const Matrix2 z{Amplitude(1), Amplitude(0), Amplitude(0), Amplitude(-1)};
  p.support().for_each([&](Vertex v) {
    const bool xv = p.x.contains(v);
    const bool zv = p.z.contains(v);
    apply(v, xv && zv ? y : xv ? x : z);
  });
  static const Amplitude phases[4] = {Amplitude(1), Amplitude(0, 1), Amplitude(-1), Amplitude(0, -1)};
  for (auto& a : amps_) a *= phases[p.phase % 4];
}

StateVector graph_state(const Graph& g) {
  const auto edges = g.edges();
  return graph_state(g, edges);
}

StateVector graph_state(const Graph& g, std::span<const Edge> edge_order) {
  const std::size_t n = g.order();
  check_qubits(n);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  StateVector s(n, std::vector<Amplitude>(std::size_t{1} << n, Amplitude(amp)));
  for (auto [a, b] : edge_order) {
    if (!g.has_edge(a, b)) throw std::invalid_argument("edge order lists a non-edge");
    s.apply_cz(a, b);
  }
  return s;
}

std::array<Amplitude, 2> eigenstate(Axis axis, Sign sign) {
  const double r = 1.0 / std::sqrt(2.0);
  const double s = sign == Sign::plus ? 1.0 : -1.0;
  switch (axis) {
    case Axis::x:
      return {Amplitude(r), Amplitude(s * r)};
    case Axis::y:
      return {Amplitude(r), Amplitude(0, s * r)};
    case Axis::z:
      return sign == Sign::plus ? std::array<Amplitude, 2>{Amplitude(1), Amplitude(0)}
                                : std::array<Amplitude, 2>{Amplitude(0), Amplitude(1)};
  }
  throw std::logic_error("unreachable");
}

Projection apply_projector(const StateVector& state, Vertex a, Axis basis, Sign sign) {
  const auto e = eigenstate(basis, sign);
  // |e><e| as a matrix.
  const Matrix2 proj{e[0] * std::conj(e[0]), e[0] * std::conj(e[1]), e[1] * std::conj(e[0]), e[1] * std::conj(e[1])};
  StateVector out = state;
  out.apply(a, proj);
  const double nrm = out.norm();
  Projection p;
  p.probability = nrm * nrm;
  if (p.probability > 1e-15) {
    out.normalize();
    p.state = std::move(out);
  } else {
    p.probability = 0.0;
  }
  return p;
}

StateVector apply_local_clifford(const StateVector& state, const LocalClifford& u) {
  if (u.size() != state.qubits()) throw std::invalid_argument("LocalClifford size mismatch");
  StateVector out = state;
  for (Vertex v = 0; v < u.size(); ++v) {
    if (!u[v].is_identity()) out.apply(v, u[v].matrix());
  }
  return out;
}

double overlap(const StateVector& s, const StateVector& t) {
  if (s.qubits() != t.qubits()) throw std::invalid_argument("state size mismatch");
  Amplitude acc = 0;
  for (std::size_t i = 0; i < s.dimension(); ++i) acc += std::conj(s[i]) * t[i];
  return std::abs(acc) / (s.norm() * t.norm());
}

bool equal_up_to_global_phase(const StateVector& s, const StateVector& t, double tol) {
  return overlap(s, t) >= 1.0 - tol;
}

StateVector insert_qubit(const StateVector& rest, Vertex a, const std::array<Amplitude, 2>& qubit) {
  const std::size_t m = rest.qubits();
  if (a > m) throw std::out_of_range("insert position out of range");
  const std::size_t n = m + 1;
  check_qubits(n);
  std::vector<Amplitude> amps(std::size_t{1} << n);
  const std::size_t low_bits = n - 1 - a;  // qubits after a
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const std::size_t bit = (i >> low_bits) & 1u;
    const std::size_t high = i >> (low_bits + 1);
    const std::size_t low = i & ((std::size_t{1} << low_bits) - 1);
    amps[i] = qubit[bit] * rest[(high << low_bits) | low];
  }
  return StateVector(n, std::move(amps));
}

Eigen::MatrixXcd reduced_density(const StateVector& state, VertexSet keep) {
  const std::size_t n = state.qubits();
  if ((keep - VertexSet::range(n)).bits() != 0) throw std::out_of_range("subsystem exceeds register");
  const auto kept = keep.members();
  const auto traced = (VertexSet::range(n) - keep).members();
  // Amplitude matrix M[kept index, traced index]; rho = M M^dagger.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(std::size_t{1} << kept.size(), std::size_t{1} << traced.size());
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    m(static_cast<Eigen::Index>(gather(n, i, kept)), static_cast<Eigen::Index>(gather(n, i, traced))) = state[i];
  }
  return m * m.adjoint();
}

namespace {

Eigen::VectorXd reduced_spectrum(const StateVector& state, VertexSet a) {
  const VertexSet all = VertexSet::range(state.qubits());
  const VertexSet b = all - a;
  // Both reductions share their nonzero spectrum; diagonalize the smaller.
  const VertexSet keep = a.size() <= b.size() ? a : b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced_density(state, keep), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

std::size_t reduced_rank(const StateVector& state, VertexSet a) {
  const Eigen::VectorXd ev = reduced_spectrum(state, a);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > kRankThreshold) ++rank;
  }
  return rank;
}

double reduced_entropy(const StateVector& state, VertexSet a) {
  const Eigen::VectorXd ev = reduced_spectrum(state, a);
  double h = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > 1e-15) h -= ev[i] * std::log2(ev[i]);
  }
  return h;
}

double partial_trace_deviation(const Graph& g, VertexSet a) {
  if (g.order() > 10) throw CapExceeded("partial-trace check is limited to 10 vertices");
  const VertexSet all = g.vertices();
  const VertexSet b = all - a;
  const Eigen::MatrixXcd reduced = reduced_density(graph_state(g), b);

  const Graph rest = induced_subgraph(g, b);
  const StateVector base = graph_state(rest);
  const auto kept = b.members();
  const auto sources = a.members();
  Eigen::MatrixXcd mixture = Eigen::MatrixXcd::Zero(reduced.rows(), reduced.cols());
  const std::uint64_t terms = std::uint64_t{1} << sources.size();
  for (std::uint64_t zmask = 0; zmask < terms; ++zmask) {
    // Z on vertex k of G - A flips with every selected source adjacent to it.
    std::uint64_t flips = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if ((zmask >> i) & 1u) flips ^= g.rows()[sources[i]];
    }
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(base.dimension()));
    for (std::size_t idx = 0; idx < base.dimension(); ++idx) {
      int parity = 0;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (((flips >> kept[k]) & 1u) && (idx & qubit_bit(kept.size(), k))) parity ^= 1;
      }
      psi[static_cast<Eigen::Index>(idx)] = parity ? -base[idx] : base[idx];
    }
    mixture += psi * psi.adjoint();
  }
  mixture /= static_cast<double>(terms);
  return (mixture - reduced).cwiseAbs().maxCoeff();
}

bool verify_partial_trace_form(const Graph& g, VertexSet a, double tol) {
  return partial_trace_deviation(g, a) <= tol;
}

}  // namespace graphent::oracle
