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

#ifndef GRAPHENT_GF2_HPP
#define GRAPHENT_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace graphent {

/// Packed bit vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  bool any() const;
  std::size_t popcount() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first_set() const;

  /// Parity of the bitwise AND, i.e. the dot product over GF(2).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// "0110..." with bit 0 first.
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense row-major bit matrix; each row is a packed BitVector.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }

  /// Matrix-vector product over GF(2).
  BitVector multiply(const BitVector& v) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Row rank over GF(2). Works on a copy.
std::size_t rank_f2(const BitMatrix& m);

/// Basis of the right null space {v : M v = 0}.
std::vector<BitVector> kernel_basis_f2(const BitMatrix& m);

/// Rank of up to 64-column rows given as single words. This is the hot
/// path for bipartition ranks; the input is not modified.
int rank_f2_words(std::span<const std::uint64_t> rows);

}  // namespace graphent

#endif  // GRAPHENT_GF2_HPP
