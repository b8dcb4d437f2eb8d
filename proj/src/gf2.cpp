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

#include "graphent/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace graphent {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t length) : size_(length), words_(word_count(length), 0) {}

bool BitVector::get(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= size_) throw std::out_of_range("BitVector index out of range");
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return size_;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(v)) out.set(r, true);
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in row order.
std::vector<std::size_t> row_reduce(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(m.row(pivot), m.row(next_row));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next_row && m.get(r, col)) m.row(r) ^= m.row(next_row);
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t rank_f2(const BitMatrix& m) {
  BitMatrix work = m;
  return row_reduce(work).size();
}

std::vector<BitVector> kernel_basis_f2(const BitMatrix& m) {
  BitMatrix work = m;
  const auto pivots = row_reduce(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free, true);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (work.get(r, free)) v.set(pivots[r], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_f2_words(std::span<const std::uint64_t> rows) {
  std::array<std::uint64_t, 64> basis{};
  int rank = 0;
  for (std::uint64_t r : rows) {
    while (r != 0) {
      const int top = 63 - std::countl_zero(r);
      if (basis[top] == 0) {
        basis[top] = r;
        ++rank;
        break;
      }
      r ^= basis[top];
    }
  }
  return rank;
}

}  // namespace graphent
