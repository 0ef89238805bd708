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

// Sequences of nonzero residues, subsum sets, multiplicity profiles and
// canonical forms up to permutation and scaling.

#ifndef ZEROSUM_SEQUENCE_H_
#define ZEROSUM_SEQUENCE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zerosum/fp.h"

namespace zerosum {

// An ordered list a_1..a_l of nonzero residues mod p, 1 <= l <= 64.
class Sequence {
 public:
  Sequence(Prime p, std::vector<std::uint32_t> entries);
  // Entries are reduced mod p before validation.
  Sequence(Prime p, std::span<const std::int64_t> entries);

  // Parses "p=<int>;A=<c1>,<c2>,..." with every c_i in [1, p-1].
  static Sequence Parse(std::string_view text);
  // Inverse of Parse; Parse(s.ToString()) == s.
  std::string ToString() const;

  Prime prime() const noexcept { return p_; }
  std::uint32_t modulus() const noexcept { return p_.value(); }
  std::size_t length() const noexcept { return entries_.size(); }
  const std::vector<std::uint32_t>& entries() const noexcept {
    return entries_;
  }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  Residue entry(std::size_t i) const { return Residue(entries_.at(i), p_); }

  // sigma(A), the sum of all entries.
  Residue sum() const;
  bool is_zero_sum() const { return sum().is_zero(); }
  bool is_constant() const;

  Sequence scaled(Residue lambda) const;
  // result[i] = (*this)[perm[i]]; perm must be a permutation of [0, l).
  Sequence permuted(std::span<const std::size_t> perm) const;
  Sequence appended(Residue value) const;
  Sequence sorted() const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  void Validate() const;

  Prime p_;
  std::vector<std::uint32_t> entries_;
};

// A subset of F_p stored as a membership table.
class ResidueSet {
 public:
  explicit ResidueSet(Prime p);

  void insert(std::uint32_t v) { member_.at(v) = 1; }
  bool contains(std::uint32_t v) const { return member_.at(v) != 0; }
  std::size_t size() const;
  // Members in increasing order.
  std::vector<std::uint32_t> members() const;
  // {-x : x in *this}
  ResidueSet negated() const;
  Prime prime() const noexcept { return p_; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Prime p_;
  std::vector<std::uint8_t> member_;
};

// Sigma(A): all subset sums of A, including 0.
ResidueSet subsums(const Sequence& a);

// Pair multiplicities l_1 >= l_2 >= ... >= l_k; each l_i counts the
// occurrences of a and -a for one pair {a, -a} present in A.
struct MultiplicityProfile {
  std::vector<std::size_t> multiplicities;

  friend bool operator==(const MultiplicityProfile&,
                         const MultiplicityProfile&) = default;
};

MultiplicityProfile multiplicity_profile(const Sequence& a);

// min{p, 1 + sum_i i * l_i}; the lower bound on |Sigma(A)|.
std::size_t thb_lower_bound(const MultiplicityProfile& profile, Prime p);

// The orbit representative of A under coordinate permutation and nonzero
// scaling: representative = sort(scaling * A), lexicographically least over
// all scalings (smallest scaling on ties). The original is recovered as
//   A[i] = inverse(scaling) * representative[permutation[i]].
struct CanonicalForm {
  Sequence representative;
  Residue scaling;
  std::vector<std::size_t> permutation;

  Sequence Recover() const;
};

CanonicalForm canonical_form(const Sequence& a);

// True iff the nondecreasing sequence `sorted_entries` is the canonical
// representative of its orbit. Entries must be sorted ascending.
bool IsCanonicalMultiset(std::span<const std::uint32_t> sorted_entries,
                         std::uint32_t p);

enum class SumFilter { kAll, kZeroSum, kNonZeroSum };

std::string_view SumFilterName(SumFilter f);
std::optional<SumFilter> ParseSumFilter(std::string_view name);

// Streams one canonical representative per orbit of length-l sequences
// over F_p^* under permutation and scaling, in colex order of the
// underlying multisets. Sharding: shard `index` of `total` considers only
// the multisets whose colex rank is congruent to index mod total, so
// shards partition the stream.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(Prime p, std::size_t length, SumFilter filter,
                      std::uint64_t shard_index = 0,
                      std::uint64_t shard_total = 1);

  // Next representative, or nullopt when the shard is exhausted.
  std::optional<Sequence> next();
  // Colex rank of the multiset behind the last returned sequence.
  std::uint64_t last_rank() const noexcept { return last_rank_; }

 private:
  bool advance();  // one colex step; false when exhausted

  Prime p_;
  std::size_t length_;
  SumFilter filter_;
  std::uint64_t shard_index_;
  std::uint64_t shard_total_;
  std::vector<std::uint32_t> current_;
  std::uint64_t rank_ = 0;
  std::uint64_t last_rank_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Sequence> enumerate_canonical(Prime p, std::size_t length,
                                          SumFilter filter);

}  // namespace zerosum

#endif  // ZEROSUM_SEQUENCE_H_
