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

#ifndef GRAPHENT_STABILIZER_HPP
#define GRAPHENT_STABILIZER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "graphent/clifford.hpp"
#include "graphent/graph.hpp"

namespace graphent {

/// n-qubit Pauli operator i^phase * (x) sigma(x_v, z_v) in symplectic form,
/// where sigma(1,0) = X, sigma(0,1) = Z and sigma(1,1) = Y (not XZ).
struct PauliOp {
  std::size_t n = 0;
  VertexSet x;
  VertexSet z;
  std::uint8_t phase = 0;  // power of i, mod 4

  static PauliOp identity(std::size_t n) { return PauliOp{n, {}, {}, 0}; }
  /// Parses "+XZZI", "-iYY", "ZX" (leading sign optional).
  static PauliOp parse(std::string_view text);

  /// Vertices where the operator is not the identity.
  VertexSet support() const { return x | z; }
  bool is_identity_up_to_phase() const { return x.empty() && z.empty(); }

  /// "+XZZI", "-iYY", ...
  std::string to_string() const;

  friend bool operator==(const PauliOp&, const PauliOp&) = default;
};

PauliOp pauli_product(const PauliOp& p, const PauliOp& q);
/// True iff the operators commute (symplectic form vanishes).
bool commutes(const PauliOp& p, const PauliOp& q);

/// K_G^(a) = X_a * prod_{b in N_a} Z_b
PauliOp generator(const Graph& g, Vertex a);

/// Product of generators over S in ascending vertex order.
PauliOp stabilizer_element(const Graph& g, VertexSet s);

inline constexpr std::size_t kDefaultSupportCountCap = 16;

/// Number of stabilizer elements whose support is exactly A. Only S within A
/// can contribute, so the scan is over the 2^|A| subsets of A.
std::size_t exact_support_count(const Graph& g, VertexSet a, std::size_t cap = kDefaultSupportCountCap);

/// U p U^dagger for a tensor product of single-qubit Cliffords.
PauliOp clifford_conjugate_pauli(const LocalClifford& u, const PauliOp& p);

}  // namespace graphent

#endif  // GRAPHENT_STABILIZER_HPP
