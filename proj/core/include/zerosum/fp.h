// Copyright 2026 The zerosum Authors
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

// Arithmetic in F_p and dense linear algebra over F_p for small p.

#ifndef ZEROSUM_FP_H_
#define ZEROSUM_FP_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zerosum {

// Largest supported modulus. Products of two residues fit in 32 bits.
inline constexpr std::uint32_t kMaxPrime = 65521;

// Widest supported vector; 0-1 rows round-trip with 64-bit support sets.
inline constexpr std::size_t kMaxWidth = 64;

// An odd prime modulus. Construction rejects composites, p < 3 and
// p > kMaxPrime with ErrorCode::kInvalidArgument.
class Prime {
 public:
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

// An element of F_p, always stored reduced into [0, p).
class Residue {
 public:
  // Reduces any signed integer into [0, p).
  Residue(std::int64_t value, Prime p);

  std::uint32_t value() const noexcept { return value_; }
  Prime prime() const noexcept { return Prime(p_); }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Residue operator-() const;
  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  friend bool operator==(Residue a, Residue b) = default;

 private:
  std::uint32_t value_;
  std::uint32_t p_;
};

// Multiplicative inverse; throws kZeroInverse for 0.
Residue inverse(Residue a);

// Raw helpers for hot loops. Arguments must already be reduced.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b,
                             std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b,
                             std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b,
                             std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

// Dense matrix over F_p. All rows share one width in [1, kMaxWidth].
class FpMatrix {
 public:
  using Row = std::vector<std::uint32_t>;

  FpMatrix(Prime p, std::size_t width);
  FpMatrix(Prime p, std::vector<Row> rows);

  // Entries are reduced mod p. Throws kLengthMismatch on a width mismatch.
  void add_row(std::span<const std::int64_t> row);
  void add_row(Row row);
  // Adds the 0-1 indicator vector of a bit mask (bit i -> column i).
  void add_indicator_row(std::uint64_t mask);

  Prime prime() const noexcept { return p_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const Row& row(std::size_t i) const { return rows_.at(i); }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  Prime p_;
  std::size_t width_;
  std::vector<Row> rows_;
};

// Rank of m over F_p; m is not modified.
std::size_t row_rank(const FpMatrix& m);

// A basis of {v : m v^T = 0}, with width(m) - rank(m) rows.
FpMatrix nullspace_basis(const FpMatrix& m);

// Echelon accumulator: insert vectors one at a time and learn whether the
// span grew. Single owner; not thread safe.
class IncrementalRank {
 public:
  IncrementalRank(Prime p, std::size_t width);

  // Returns true iff v was independent of everything inserted before.
  bool insert(std::span<const std::uint32_t> v);
  // 0-1 indicator of mask.
  bool insert_indicator(std::uint64_t mask);
  // Indicator of `mask` minus indicator of `base` (entries in {-1,0,1}).
  bool insert_difference(std::uint64_t mask, std::uint64_t base);

  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t width() const noexcept { return width_; }

 private:
  bool insert_reduced(std::array<std::uint32_t, kMaxWidth>& v);

  std::uint32_t p_;
  std::size_t width_;
  std::vector<std::array<std::uint32_t, kMaxWidth>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace zerosum

#endif  // ZEROSUM_FP_H_
