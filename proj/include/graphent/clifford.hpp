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

#ifndef GRAPHENT_CLIFFORD_HPP
#define GRAPHENT_CLIFFORD_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

/// Measurement outcome / eigenvalue sign.
enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

char axis_char(Axis a);
Axis parse_axis(char c);
char sign_char(Sign s);

struct SignedAxis {
  Axis axis;
  Sign sign;
  friend bool operator==(const SignedAxis&, const SignedAxis&) = default;
};

using Matrix2 = std::array<std::complex<double>, 4>;  // row-major

/// Element of the 24-element single-qubit Clifford group modulo phase.
///
/// The group is built once by closing {H, S} under multiplication with
/// phase-normalized 2x2 matrices. After that, composition, inversion and the
/// Pauli action are table lookups; no floating point is involved.
class Clifford1 {
 public:
  static constexpr std::size_t kOrder = 24;

  constexpr Clifford1() = default;
  static Clifford1 from_index(std::uint8_t index);
  /// Element equal to the matrix up to a global phase; throws if none.
  static Clifford1 from_matrix(const Matrix2& m);

  static Clifford1 identity() { return Clifford1(); }
  static Clifford1 pauli(Axis a);
  static Clifford1 hadamard();
  /// Principal square roots (+-i sigma_axis)^(1/2) = (1 +- i sigma_axis) / sqrt(2).
  static Clifford1 sqrt_plus_i(Axis a);
  static Clifford1 sqrt_minus_i(Axis a);

  std::uint8_t index() const { return index_; }
  bool is_identity() const { return index_ == 0; }

  /// Matrix product: (u * v) applies v first.
  Clifford1 operator*(Clifford1 other) const;
  Clifford1 inverse() const;

  /// u sigma_a u^dagger = sign * sigma_b
  SignedAxis conjugate(Axis a) const;
  SignedAxis conjugate(SignedAxis a) const;

  /// Phase-normalized representative (first nonzero entry real positive).
  const Matrix2& matrix() const;
  std::string_view name() const;

  friend bool operator==(const Clifford1&, const Clifford1&) = default;

 private:
  constexpr explicit Clifford1(std::uint8_t index) : index_(index) {}
  std::uint8_t index_ = 0;
};

/// Projector basis change through a Clifford: P_{a,s} u = u P_{a',s'}.
/// The pair (a', s') is the preimage of (a, s) under conjugation by u.
SignedAxis conjugate_basis(Clifford1 u, Axis basis, Sign sign);

/// Tensor product of single-qubit Cliffords, one per vertex.
class LocalClifford {
 public:
  LocalClifford() = default;
  explicit LocalClifford(std::size_t n) : sites_(n) {}

  static LocalClifford identity(std::size_t n) { return LocalClifford(n); }

  std::size_t size() const { return sites_.size(); }
  Clifford1 operator[](Vertex v) const { return sites_.at(v); }
  void set(Vertex v, Clifford1 c) { sites_.at(v) = c; }
  /// sites[v] = c * sites[v]  (c applied after the current element)
  void apply_after(Vertex v, Clifford1 c) { sites_.at(v) = c * sites_.at(v); }
  bool is_identity() const;

  /// Drops site a; higher sites shift down by one.
  LocalClifford without_site(Vertex a) const;

  /// "I" for the identity, otherwise "v:NAME" per non-identity site.
  std::string to_string() const;

  friend bool operator==(const LocalClifford&, const LocalClifford&) = default;

 private:
  std::vector<Clifford1> sites_;
};

/// Site-wise product u * v (v applied first). Sizes must match.
LocalClifford clifford_compose(const LocalClifford& u, const LocalClifford& v);

}  // namespace graphent

#endif  // GRAPHENT_CLIFFORD_HPP
