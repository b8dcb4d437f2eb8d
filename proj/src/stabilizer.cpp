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

#include "graphent/stabilizer.hpp"

#include <bit>
#include <stdexcept>

namespace graphent {

namespace {

void require_same_size(const PauliOp& p, const PauliOp& q) {
  if (p.n != q.n) throw std::invalid_argument("Pauli operators act on different qubit counts");
}

// Power of i picked up by sigma(x1,z1) * sigma(x2,z2) with Y = sigma(1,1).
int site_phase(bool x1, bool z1, bool x2, bool z2) {
  if (x1 && z1) return int(z2) - int(x2);
  if (x1) return int(z2) * (2 * int(x2) - 1);
  if (z1) return int(x2) * (1 - 2 * int(z2));
  return 0;
}

}  // namespace

PauliOp PauliOp::parse(std::string_view text) {
  PauliOp p;
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase += 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase += 1;
    text.remove_prefix(1);
  }
  if (text.size() > Graph::kMaxVertices) throw std::invalid_argument("Pauli string longer than 64 sites");
  p.n = text.size();
  for (std::size_t v = 0; v < text.size(); ++v) {
    switch (text[v]) {
      case 'I':
        break;
      case 'X':
        p.x.insert(v);
        break;
      case 'Y':
        p.x.insert(v);
        p.z.insert(v);
        break;
      case 'Z':
        p.z.insert(v);
        break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli character '") + text[v] + "'");
    }
  }
  p.phase = static_cast<std::uint8_t>(phase % 4);
  return p;
}

std::string PauliOp::to_string() const {
  static const char* prefixes[4] = {"+", "+i", "-", "-i"};
  std::string out = prefixes[phase % 4];
  for (Vertex v = 0; v < n; ++v) {
    const bool xv = x.contains(v);
    const bool zv = z.contains(v);
    out.push_back(xv && zv ? 'Y' : xv ? 'X' : zv ? 'Z' : 'I');
  }
  return out;
}

PauliOp pauli_product(const PauliOp& p, const PauliOp& q) {
  require_same_size(p, q);
  int phase = p.phase + q.phase;
  (p.support() | q.support()).for_each([&](Vertex v) {
    phase += site_phase(p.x.contains(v), p.z.contains(v), q.x.contains(v), q.z.contains(v));
  });
  PauliOp out{p.n, p.x ^ q.x, p.z ^ q.z, 0};
  out.phase = static_cast<std::uint8_t>(((phase % 4) + 4) % 4);
  return out;
}

bool commutes(const PauliOp& p, const PauliOp& q) {
  require_same_size(p, q);
  const int form = std::popcount((p.x & q.z).bits()) + std::popcount((p.z & q.x).bits());
  return form % 2 == 0;
}

PauliOp generator(const Graph& g, Vertex a) {
  return PauliOp{g.order(), VertexSet{a}, g.neighbors(a), 0};
}

PauliOp stabilizer_element(const Graph& g, VertexSet s) {
  if ((s - g.vertices()).bits() != 0) throw std::out_of_range("vertex set exceeds graph");
  PauliOp acc = PauliOp::identity(g.order());
  s.for_each([&](Vertex a) { acc = pauli_product(acc, generator(g, a)); });
  return acc;
}

std::size_t exact_support_count(const Graph& g, VertexSet a, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("exact_support_count: graph order exceeds cap");
  if ((a - g.vertices()).bits() != 0) throw std::out_of_range("vertex set exceeds graph");
  // Support of the element for S is S | (odd-degree set of S).
  const auto members = a.members();
  const std::size_t k = members.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::uint64_t s = 0;
    std::uint64_t zs = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) {
        s |= std::uint64_t{1} << members[i];
        zs ^= g.rows()[members[i]];
      }
    }
    if ((s | zs) == a.bits()) ++count;
  }
  return count;
}

PauliOp clifford_conjugate_pauli(const LocalClifford& u, const PauliOp& p) {
  if (u.size() != p.n) throw std::invalid_argument("LocalClifford and Pauli sizes differ");
  PauliOp out{p.n, {}, {}, p.phase};
  p.support().for_each([&](Vertex v) {
    const bool xv = p.x.contains(v);
    const bool zv = p.z.contains(v);
    const Axis axis = xv && zv ? Axis::y : xv ? Axis::x : Axis::z;
    const SignedAxis image = u[v].conjugate(axis);
    if (image.sign == Sign::minus) out.phase = static_cast<std::uint8_t>((out.phase + 2) % 4);
    if (image.axis != Axis::z) out.x.insert(v);
    if (image.axis != Axis::x) out.z.insert(v);
  });
  return out;
}

}  // namespace graphent
