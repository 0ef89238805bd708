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

// 0-1 solution sets S_A and S_A^alpha, their spans, minimal elements and
// the affine reduction.

#ifndef ZEROSUM_SOLUTIONS_H_
#define ZEROSUM_SOLUTIONS_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerosum/fp.h"
#include "zerosum/sequence.h"

namespace zerosum {

inline constexpr std::size_t kMaxDirectLength = 32;
inline constexpr std::size_t kMaxMeetInMiddleLength = 40;
// Cap on the number of members a SolutionSet may materialize.
inline constexpr std::size_t kMaxMaterialized = std::size_t{1} << 24;

// A subset of [1, l] (bit i <-> index i+1).
class SupportSet {
 public:
  SupportSet(std::uint64_t bits, std::size_t length);

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  bool empty() const noexcept { return bits_ == 0; }
  // 1-based position i.
  bool contains(std::size_t i) const noexcept {
    return i >= 1 && i <= length_ && ((bits_ >> (i - 1)) & 1u);
  }
  bool is_subset_of(const SupportSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  // 1-based indices in increasing order.
  std::vector<std::size_t> indices() const;

  friend bool operator==(SupportSet, SupportSet) = default;

 private:
  std::uint64_t bits_;
  std::size_t length_;
};

// Orders by cardinality, then colex (numeric order of the bit mask).
bool CardinalityColexLess(std::uint64_t x, std::uint64_t y) noexcept;

enum class EnumerationMode { kDirect, kMeetInTheMiddle };

// All J subset of [1, l] with sum_{j in J} a_j = target, ordered by
// (cardinality, colex). span_rank is the rank of the indicator vectors for
// target 0 and the affine-hull dimension otherwise (unset when empty).
struct SolutionSet {
  Prime p;
  std::size_t length;
  Residue target;
  std::vector<SupportSet> members;
  std::optional<std::size_t> span_rank;

  bool contains(std::uint64_t bits) const;
};

SolutionSet enumerate_solutions(
    const Sequence& a, Residue target,
    EnumerationMode mode = EnumerationMode::kDirect);

// Calls visit(mask) for every solution mask, in Gray-code order; stops early
// when visit returns false. Requires l <= 32.
void ForEachSolution(const Sequence& a, std::uint32_t target,
                     const std::function<bool(std::uint64_t)>& visit);

// True iff sum_{i in mask} b_i == 0 for all masks in S_A; b may contain 0.
bool SolutionsSatisfy(const Sequence& a, std::span<const std::uint32_t> b);

// dim(A): rank of S_A's indicator vectors. l <= 32.
std::size_t solution_dim(const Sequence& a);

// Rows of a basis of <S_A> chosen from S_A, in Gray-code discovery order.
std::vector<std::uint64_t> SolutionSpanBasis(const Sequence& a);

// Nonempty members with no nonempty proper subset in s; in (cardinality,
// colex) order.
std::vector<SupportSet> minimal_solutions(const SolutionSet& s);

// l - 1 minimal solutions forming a basis of A^perp, present only when
// dim(A) = l - 1.
struct MinimalBasis {
  std::vector<SupportSet> supports;

  FpMatrix matrix(Prime p) const;
};

std::optional<MinimalBasis> minimal_basis(const Sequence& a);

// Pairs {i, j} (1-based, i < j) met by every x in S_A in 0 or 2 indices.
std::vector<std::pair<std::size_t, std::size_t>> exceptional_pairs(
    const Sequence& a);

struct AffineReduction {
  SupportSet subset;  // I, with sum_{i in I} a_i = alpha
  Sequence reduced;   // A_I: entries negated on I

  // x -> y with y_i = 1 - x_i on I; an involution.
  std::uint64_t flip(std::uint64_t x) const noexcept {
    return x ^ subset.bits();
  }
};

// I is the first subset hitting alpha in (cardinality, colex) order.
std::optional<AffineReduction> affine_reduce(const Sequence& a,
                                             Residue alpha);

// Dimension of the affine hull of S_A^alpha; kEmptySolutionSet if empty.
std::size_t affine_dim(const Sequence& a, Residue alpha);

}  // namespace zerosum

#endif  // ZEROSUM_SOLUTIONS_H_
