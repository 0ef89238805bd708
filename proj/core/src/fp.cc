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

#include "zerosum/fp.h"

#include <algorithm>
#include <string>
#include <utility>

#include "zerosum/error.h"

namespace zerosum {

namespace {

bool IsPrime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t Reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void CheckWidth(std::size_t width) {
  if (width == 0 || width > kMaxWidth) {
    throw Error(ErrorCode::kInvalidArgument,
                "matrix width must be in [1, 64], got " +
                    std::to_string(width));
  }
}

}  // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must be an odd prime, got " + std::to_string(p));
  }
  if (p > kMaxPrime) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus too large: " + std::to_string(p));
  }
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus is not prime: " + std::to_string(p));
  }
}

Residue::Residue(std::int64_t value, Prime p)
    : value_(Reduce(value, p.value())), p_(p.value()) {}

Residue Residue::operator-() const {
  Residue r = *this;
  r.value_ = value_ == 0 ? 0 : p_ - value_;
  return r;
}

Residue operator+(Residue a, Residue b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::kInvalidArgument, "modulus mismatch");
  a.value_ = add_mod(a.value_, b.value_, a.p_);
  return a;
}

Residue operator-(Residue a, Residue b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::kInvalidArgument, "modulus mismatch");
  a.value_ = sub_mod(a.value_, b.value_, a.p_);
  return a;
}

Residue operator*(Residue a, Residue b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::kInvalidArgument, "modulus mismatch");
  a.value_ = mul_mod(a.value_, b.value_, a.p_);
  return a;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) {
    throw Error(ErrorCode::kZeroInverse, "0 has no inverse mod " +
                                             std::to_string(p));
  }
  // Extended Euclid on (a, p).
  std::int64_t old_r = a % p, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return Reduce(old_s, p);
}

Residue inverse(Residue a) {
  return Residue(inverse_mod(a.value(), a.modulus()), a.prime());
}

FpMatrix::FpMatrix(Prime p, std::size_t width) : p_(p), width_(width) {
  CheckWidth(width);
}

FpMatrix::FpMatrix(Prime p, std::vector<Row> rows)
    : p_(p), width_(rows.empty() ? 0 : rows.front().size()) {
  CheckWidth(width_);
  for (Row& r : rows) add_row(std::move(r));
}

void FpMatrix::add_row(std::span<const std::int64_t> row) {
  Row reduced(row.size());
  std::transform(row.begin(), row.end(), reduced.begin(),
                 [this](std::int64_t v) { return Reduce(v, p_.value()); });
  add_row(std::move(reduced));
}

void FpMatrix::add_row(Row row) {
  if (row.size() != width_) {
    throw Error(ErrorCode::kLengthMismatch,
                "row of width " + std::to_string(row.size()) +
                    " added to matrix of width " + std::to_string(width_));
  }
  for (auto& v : row) v %= p_.value();
  rows_.push_back(std::move(row));
}

void FpMatrix::add_indicator_row(std::uint64_t mask) {
  Row row(width_, 0);
  for (std::size_t i = 0; i < width_; ++i) row[i] = (mask >> i) & 1u;
  rows_.push_back(std::move(row));
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> Rref(std::vector<FpMatrix::Row>& rows,
                              std::size_t width, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    auto& pr = rows[next];
    const std::uint32_t inv = inverse_mod(pr[col], p);
    for (auto& v : pr) v = mul_mod(v, inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      const std::uint32_t f = rows[r][col];
      for (std::size_t c = col; c < width; ++c) {
        rows[r][c] = sub_mod(rows[r][c], mul_mod(f, pr[c], p), p);
      }
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace

std::size_t row_rank(const FpMatrix& m) {
  std::vector<FpMatrix::Row> work = m.rows();
  return Rref(work, m.width(), m.prime().value()).size();
}

FpMatrix nullspace_basis(const FpMatrix& m) {
  const std::uint32_t p = m.prime().value();
  const std::size_t width = m.width();
  std::vector<FpMatrix::Row> work = m.rows();
  const std::vector<std::size_t> pivots = Rref(work, width, p);

  std::vector<bool> is_pivot(width, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  FpMatrix basis(m.prime(), width);
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    FpMatrix::Row v(width, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = work[i][free] == 0 ? 0 : p - work[i][free];
    }
    for (const auto& row : m.rows()) {
      std::uint32_t dot = 0;
      for (std::size_t c = 0; c < width; ++c) {
        dot = add_mod(dot, mul_mod(row[c], v[c], p), p);
      }
      if (dot != 0) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "nullspace vector failed verification");
      }
    }
    basis.add_row(std::move(v));
  }
  return basis;
}

IncrementalRank::IncrementalRank(Prime p, std::size_t width)
    : p_(p.value()), width_(width) {
  CheckWidth(width);
}

bool IncrementalRank::insert(std::span<const std::uint32_t> v) {
  if (v.size() != width_) {
    throw Error(ErrorCode::kLengthMismatch, "vector width mismatch");
  }
  std::array<std::uint32_t, kMaxWidth> work{};
  for (std::size_t i = 0; i < width_; ++i) work[i] = v[i] % p_;
  return insert_reduced(work);
}

bool IncrementalRank::insert_indicator(std::uint64_t mask) {
  std::array<std::uint32_t, kMaxWidth> work{};
  for (std::size_t i = 0; i < width_; ++i) work[i] = (mask >> i) & 1u;
  return insert_reduced(work);
}

bool IncrementalRank::insert_difference(std::uint64_t mask,
                                        std::uint64_t base) {
  std::array<std::uint32_t, kMaxWidth> work{};
  for (std::size_t i = 0; i < width_; ++i) {
    const bool in_mask = (mask >> i) & 1u;
    const bool in_base = (base >> i) & 1u;
    if (in_mask && !in_base) work[i] = 1;
    if (!in_mask && in_base) work[i] = p_ - 1;
  }
  return insert_reduced(work);
}

bool IncrementalRank::insert_reduced(std::array<std::uint32_t, kMaxWidth>& v) {
  if (rank() == width_) return false;
  // Stored rows are normalized to 1 at their pivot and zero at the pivots
  // of every earlier row, so one forward pass fully reduces v.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t f = v[pivots_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t c = pivots_[k]; c < width_; ++c) {
      if (row[c] != 0) v[c] = sub_mod(v[c], mul_mod(f, row[c], p_), p_);
    }
  }
  std::size_t lead = 0;
  while (lead < width_ && v[lead] == 0) ++lead;
  if (lead == width_) return false;
  const std::uint32_t inv = inverse_mod(v[lead], p_);
  for (std::size_t c = lead; c < width_; ++c) v[c] = mul_mod(v[c], inv, p_);
  rows_.push_back(v);
  pivots_.push_back(lead);
  return true;
}

}  // namespace zerosum
