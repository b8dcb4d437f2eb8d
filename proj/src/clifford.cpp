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

#include "graphent/clifford.hpp"

#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace graphent {

namespace {

using cd = std::complex<double>;
constexpr double kTol = 1e-9;

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Matrix2 adjoint(const Matrix2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

Matrix2 normalize_phase(Matrix2 m) {
  for (const auto& z : m) {
    if (std::abs(z) > kTol) {
      const cd phase = std::conj(z) / std::abs(z);
      for (auto& w : m) w *= phase;
      return m;
    }
  }
  throw std::invalid_argument("zero matrix");
}

bool near(const Matrix2& a, const Matrix2& b) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(a[k] - b[k]) > kTol) return false;
  }
  return true;
}

const Matrix2 kPauli[3] = {
    {cd(0), cd(1), cd(1), cd(0)},
    {cd(0), cd(0, -1), cd(0, 1), cd(0)},
    {cd(1), cd(0), cd(0), cd(-1)},
};

struct Tables {
  std::array<Matrix2, Clifford1::kOrder> matrices{};
  std::array<std::string, Clifford1::kOrder> names{};
  std::array<std::array<std::uint8_t, Clifford1::kOrder>, Clifford1::kOrder> product{};
  std::array<std::uint8_t, Clifford1::kOrder> inverse{};
  std::array<std::array<SignedAxis, 3>, Clifford1::kOrder> action{};

  std::uint8_t find(const Matrix2& m) const {
    const Matrix2 n = normalize_phase(m);
    for (std::size_t k = 0; k < Clifford1::kOrder; ++k) {
      if (near(matrices[k], n)) return static_cast<std::uint8_t>(k);
    }
    throw std::invalid_argument("matrix is not a single-qubit Clifford element");
  }

  Tables() {
    const double r = 1.0 / std::sqrt(2.0);
    const Matrix2 h = {cd(r), cd(r), cd(r), cd(-r)};
    const Matrix2 s = {cd(1), cd(0), cd(0), cd(0, 1)};

    // Breadth-first closure gives each element a shortest word in H and S.
    std::size_t count = 0;
    matrices[count] = normalize_phase({cd(1), cd(0), cd(0), cd(1)});
    names[count++] = "I";
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (int g = 0; g < 2; ++g) {
        const Matrix2 next = normalize_phase(mul(g == 0 ? h : s, matrices[cur]));
        bool seen = false;
        for (std::size_t k = 0; k < count; ++k) seen = seen || near(matrices[k], next);
        if (seen) continue;
        if (count == Clifford1::kOrder) throw std::logic_error("Clifford closure exceeded 24 elements");
        matrices[count] = next;
        names[count] = std::string(g == 0 ? "H" : "S") + (cur == 0 ? "" : names[cur]);
        queue.push_back(count++);
      }
    }
    if (count != Clifford1::kOrder) throw std::logic_error("Clifford closure has wrong order");

    for (std::size_t a = 0; a < Clifford1::kOrder; ++a) {
      for (std::size_t b = 0; b < Clifford1::kOrder; ++b) product[a][b] = find(mul(matrices[a], matrices[b]));
      inverse[a] = find(adjoint(matrices[a]));
      for (int p = 0; p < 3; ++p) {
        const Matrix2 image = mul(mul(matrices[a], kPauli[p]), adjoint(matrices[a]));
        bool matched = false;
        for (int q = 0; q < 3 && !matched; ++q) {
          for (double sign : {1.0, -1.0}) {
            Matrix2 target = kPauli[q];
            for (auto& z : target) z *= sign;
            if (near(image, target)) {
              action[a][p] = {static_cast<Axis>(q), sign > 0 ? Sign::plus : Sign::minus};
              matched = true;
              break;
            }
          }
        }
        if (!matched) throw std::logic_error("Clifford element does not normalize the Pauli group");
      }
    }

    // Algebraic names for the elements that appear as measurement byproducts.
    auto rename = [&](const Matrix2& m, const char* name) { names[find(m)] = name; };
    rename(kPauli[0], "X");
    rename(kPauli[1], "Y");
    rename(kPauli[2], "Z");
    for (int p = 0; p < 3; ++p) {
      static const char* plus_names[3] = {"sqrt(+iX)", "sqrt(+iY)", "sqrt(+iZ)"};
      static const char* minus_names[3] = {"sqrt(-iX)", "sqrt(-iY)", "sqrt(-iZ)"};
      Matrix2 plus{cd(r), cd(0), cd(0), cd(r)};
      Matrix2 minus = plus;
      for (int k = 0; k < 4; ++k) {
        plus[k] += cd(0, r) * kPauli[p][k];
        minus[k] -= cd(0, r) * kPauli[p][k];
      }
      rename(plus, plus_names[p]);
      rename(minus, minus_names[p]);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

Matrix2 principal_sqrt(Axis a, double sign) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2 m{cd(r), cd(0), cd(0), cd(r)};
  for (int k = 0; k < 4; ++k) m[k] += sign * cd(0, r) * kPauli[static_cast<int>(a)][k];
  return m;
}

}  // namespace

char axis_char(Axis a) { return "xyz"[static_cast<int>(a)]; }

Axis parse_axis(char c) {
  switch (c) {
    case 'x':
    case 'X':
      return Axis::x;
    case 'y':
    case 'Y':
      return Axis::y;
    case 'z':
    case 'Z':
      return Axis::z;
    default:
      throw std::invalid_argument(std::string("unknown Pauli basis '") + c + "'");
  }
}

char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

Clifford1 Clifford1::from_index(std::uint8_t index) {
  if (index >= kOrder) throw std::out_of_range("Clifford index out of range");
  return Clifford1(index);
}

Clifford1 Clifford1::from_matrix(const Matrix2& m) { return Clifford1(tables().find(m)); }

Clifford1 Clifford1::pauli(Axis a) { return from_matrix(kPauli[static_cast<int>(a)]); }

Clifford1 Clifford1::hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  return from_matrix({cd(r), cd(r), cd(r), cd(-r)});
}

Clifford1 Clifford1::sqrt_plus_i(Axis a) { return from_matrix(principal_sqrt(a, 1.0)); }

Clifford1 Clifford1::sqrt_minus_i(Axis a) { return from_matrix(principal_sqrt(a, -1.0)); }

Clifford1 Clifford1::operator*(Clifford1 other) const { return Clifford1(tables().product[index_][other.index_]); }

Clifford1 Clifford1::inverse() const { return Clifford1(tables().inverse[index_]); }

SignedAxis Clifford1::conjugate(Axis a) const { return tables().action[index_][static_cast<int>(a)]; }

SignedAxis Clifford1::conjugate(SignedAxis a) const {
  SignedAxis image = conjugate(a.axis);
  image.sign = image.sign * a.sign;
  return image;
}

const Matrix2& Clifford1::matrix() const { return tables().matrices[index_]; }

std::string_view Clifford1::name() const { return tables().names[index_]; }

SignedAxis conjugate_basis(Clifford1 u, Axis basis, Sign sign) { return u.inverse().conjugate(SignedAxis{basis, sign}); }

bool LocalClifford::is_identity() const {
  for (auto c : sites_) {
    if (!c.is_identity()) return false;
  }
  return true;
}

LocalClifford LocalClifford::without_site(Vertex a) const {
  if (a >= sites_.size()) throw std::out_of_range("site index out of range");
  LocalClifford out;
  out.sites_ = sites_;
  out.sites_.erase(out.sites_.begin() + static_cast<std::ptrdiff_t>(a));
  return out;
}

std::string LocalClifford::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t v = 0; v < sites_.size(); ++v) {
    if (sites_[v].is_identity()) continue;
    if (!first) out << ' ';
    out << v << ':' << sites_[v].name();
    first = false;
  }
  return first ? "I" : out.str();
}

LocalClifford clifford_compose(const LocalClifford& u, const LocalClifford& v) {
  if (u.size() != v.size()) throw std::invalid_argument("LocalClifford size mismatch");
  LocalClifford out(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) out.set(k, u[k] * v[k]);
  return out;
}

}  // namespace graphent
