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

#include "zerosum/solutions.h"

#include <algorithm>
#include <string>

#include "zerosum/error.h"

namespace zerosum {

namespace {

void RequireLength(const Sequence& a, std::size_t cap) {
  if (a.length() > cap) {
    throw Error(ErrorCode::kTooLong,
                "sequence length " + std::to_string(a.length()) +
                    " exceeds the cap of " + std::to_string(cap));
  }
}

// Gray-code walk over all subsets of the given entries; calls
// visit(mask, sum) for every subset including the empty one.
template <typename Visit>
bool GrayWalk(std::span<const std::uint32_t> entries, std::uint32_t p,
              Visit&& visit) {
  const std::size_t n = entries.size();
  std::uint64_t mask = 0;
  std::uint32_t sum = 0;
  if (!visit(mask, sum)) return false;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    mask ^= std::uint64_t{1} << bit;
    sum = (mask >> bit) & 1u ? add_mod(sum, entries[bit], p)
                             : sub_mod(sum, entries[bit], p);
    if (!visit(mask, sum)) return false;
  }
  return true;
}

std::vector<SupportSet> ToSupports(std::vector<std::uint64_t> masks,
                                   std::size_t length) {
  std::sort(masks.begin(), masks.end(), CardinalityColexLess);
  std::vector<SupportSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.emplace_back(m, length);
  return out;
}

std::vector<std::uint64_t> DirectMasks(const Sequence& a,
                                       std::uint32_t target) {
  RequireLength(a, kMaxDirectLength);
  std::vector<std::uint64_t> masks;
  ForEachSolution(a, target, [&](std::uint64_t m) {
    if (masks.size() == kMaxMaterialized) {
      throw Error(ErrorCode::kTooLong, "solution set too large to store");
    }
    masks.push_back(m);
    return true;
  });
  return masks;
}

std::vector<std::uint64_t> MeetInTheMiddleMasks(const Sequence& a,
                                                std::uint32_t target) {
  RequireLength(a, kMaxMeetInMiddleLength);
  const std::uint32_t p = a.modulus();
  const std::size_t half = (a.length() + 1) / 2;
  std::span<const std::uint32_t> all(a.entries());
  std::span<const std::uint32_t> left = all.first(half);
  std::span<const std::uint32_t> right = all.subspan(half);

  std::vector<std::vector<std::uint64_t>> buckets(p);
  GrayWalk(left, p, [&](std::uint64_t m, std::uint32_t s) {
    buckets[s].push_back(m);
    return true;
  });
  std::vector<std::size_t> right_counts(p, 0);
  GrayWalk(right, p, [&](std::uint64_t, std::uint32_t s) {
    ++right_counts[s];
    return true;
  });
  std::size_t expected = 0;
  for (std::uint32_t s = 0; s < p; ++s) {
    expected += right_counts[s] * buckets[sub_mod(target, s, p)].size();
  }
  if (expected > kMaxMaterialized) {
    throw Error(ErrorCode::kTooLong, "solution set too large to store");
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(expected);
  GrayWalk(right, p, [&](std::uint64_t r, std::uint32_t s) {
    for (std::uint64_t l : buckets[sub_mod(target, s, p)]) {
      masks.push_back(l | (r << half));
    }
    return true;
  });
  return masks;
}

void CheckSamePrime(const Sequence& a, Residue r) {
  if (r.modulus() != a.modulus()) {
    throw Error(ErrorCode::kInvalidArgument, "modulus mismatch");
  }
}

}  // namespace

SupportSet::SupportSet(std::uint64_t bits, std::size_t length)
    : bits_(bits), length_(length) {
  if (length == 0 || length > kMaxWidth) {
    throw Error(ErrorCode::kInvalidArgument, "support length out of range");
  }
  if (length < 64 && (bits >> length) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "support exceeds its length");
  }
}

std::vector<std::size_t> SupportSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)) + 1);
  }
  return out;
}

bool CardinalityColexLess(std::uint64_t x, std::uint64_t y) noexcept {
  const int cx = std::popcount(x), cy = std::popcount(y);
  return cx != cy ? cx < cy : x < y;
}

bool SolutionSet::contains(std::uint64_t bits) const {
  return std::binary_search(
      members.begin(), members.end(), SupportSet(bits, length),
      [](const SupportSet& x, const SupportSet& y) {
        return CardinalityColexLess(x.bits(), y.bits());
      });
}

void ForEachSolution(const Sequence& a, std::uint32_t target,
                     const std::function<bool(std::uint64_t)>& visit) {
  RequireLength(a, kMaxDirectLength);
  GrayWalk(a.entries(), a.modulus(), [&](std::uint64_t m, std::uint32_t s) {
    return s != target || visit(m);
  });
}

SolutionSet enumerate_solutions(const Sequence& a, Residue target,
                                EnumerationMode mode) {
  CheckSamePrime(a, target);
  std::vector<std::uint64_t> masks =
      mode == EnumerationMode::kDirect
          ? DirectMasks(a, target.value())
          : MeetInTheMiddleMasks(a, target.value());
  SolutionSet s{a.prime(), a.length(), target,
                ToSupports(std::move(masks), a.length()), std::nullopt};
  if (!s.members.empty()) {
    IncrementalRank rank(a.prime(), a.length());
    const std::uint64_t base = s.members.front().bits();
    for (const SupportSet& m : s.members) {
      rank.insert_difference(m.bits(), base);
      if (rank.rank() + 1 == a.length()) break;
    }
    s.span_rank = rank.rank();
  }
  return s;
}

bool SolutionsSatisfy(const Sequence& a, std::span<const std::uint32_t> b) {
  if (b.size() != a.length()) {
    throw Error(ErrorCode::kLengthMismatch, "length mismatch");
  }
  const std::uint32_t p = a.modulus();
  bool ok = true;
  ForEachSolution(a, 0, [&](std::uint64_t m) {
    std::uint32_t s = 0;
    for (std::uint64_t bits = m; bits != 0; bits &= bits - 1) {
      s = add_mod(s, b[std::countr_zero(bits)] % p, p);
    }
    ok = s == 0;
    return ok;
  });
  return ok;
}

std::vector<std::uint64_t> SolutionSpanBasis(const Sequence& a) {
  RequireLength(a, kMaxDirectLength);
  IncrementalRank rank(a.prime(), a.length());
  std::vector<std::uint64_t> basis;
  const std::size_t ceiling = a.length() - 1;
  if (ceiling == 0) return basis;
  ForEachSolution(a, 0, [&](std::uint64_t m) {
    if (rank.insert_indicator(m)) basis.push_back(m);
    return rank.rank() < ceiling;
  });
  return basis;
}

std::size_t solution_dim(const Sequence& a) {
  return SolutionSpanBasis(a).size();
}

std::vector<SupportSet> minimal_solutions(const SolutionSet& s) {
  std::vector<std::uint64_t> sorted;
  sorted.reserve(s.members.size());
  for (const SupportSet& m : s.members) sorted.push_back(m.bits());
  std::sort(sorted.begin(), sorted.end(), CardinalityColexLess);
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t x : sorted) {
    if (x == 0) continue;
    const bool covered = std::any_of(
        minimal.begin(), minimal.end(),
        [x](std::uint64_t m) { return (m & ~x) == 0; });
    if (!covered) minimal.push_back(x);
  }
  return ToSupports(std::move(minimal), s.length);
}

FpMatrix MinimalBasis::matrix(Prime p) const {
  if (supports.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty basis has no matrix");
  }
  FpMatrix m(p, supports.front().length());
  for (const SupportSet& s : supports) m.add_indicator_row(s.bits());
  return m;
}

std::optional<MinimalBasis> minimal_basis(const Sequence& a) {
  RequireLength(a, kMaxDirectLength);
  const std::size_t target_rank = a.length() - 1;
  if (target_rank == 0 || solution_dim(a) != target_rank) return std::nullopt;

  const SolutionSet all = enumerate_solutions(a, Residue(0, a.prime()));
  const std::vector<SupportSet> minimal = minimal_solutions(all);

  // A basis of <S_A> taken greedily in (cardinality, colex) order.
  std::vector<std::uint64_t> basis;
  {
    IncrementalRank rank(a.prime(), a.length());
    for (const SupportSet& m : all.members) {
      if (rank.insert_indicator(m.bits())) basis.push_back(m.bits());
      if (basis.size() == target_rank) break;
    }
  }

  // Each basis element is a disjoint union of minimal solutions; strip them
  // off greedily by cardinality.
  std::vector<std::uint64_t> strips;
  for (std::uint64_t e : basis) {
    while (e != 0) {
      auto it = std::find_if(
          minimal.begin(), minimal.end(),
          [e](const SupportSet& m) { return (m.bits() & ~e) == 0; });
      if (it == minimal.end()) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "solution without a minimal subset");
      }
      e &= ~it->bits();
      if (std::find(strips.begin(), strips.end(), it->bits()) == strips.end())
        strips.push_back(it->bits());
    }
  }
  std::sort(strips.begin(), strips.end(), CardinalityColexLess);
  IncrementalRank rank(a.prime(), a.length());
  MinimalBasis result;
  for (std::uint64_t m : strips) {
    if (rank.insert_indicator(m)) result.supports.emplace_back(m, a.length());
  }
  if (result.supports.size() != target_rank) {
    throw Error(ErrorCode::kPreconditionViolated,
                "minimal elements failed to span A^perp");
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> exceptional_pairs(
    const Sequence& a) {
  RequireLength(a, kMaxDirectLength);
  const std::size_t n = a.length();
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
  }
  ForEachSolution(a, 0, [&](std::uint64_t x) {
    std::erase_if(candidates, [x](const auto& pr) {
      return ((x >> pr.first) ^ (x >> pr.second)) & 1u;
    });
    return !candidates.empty();
  });
  for (auto& [i, j] : candidates) {
    ++i;
    ++j;
  }
  return candidates;
}

std::optional<AffineReduction> affine_reduce(const Sequence& a,
                                             Residue alpha) {
  CheckSamePrime(a, alpha);
  const std::size_t n = a.length();
  const std::uint32_t p = a.modulus();
  // reach[m][c][s]: some c-subset of the first m entries sums to s.
  auto index = [&](std::size_t m, std::size_t c, std::uint32_t s) {
    return (m * (n + 1) + c) * p + s;
  };
  std::vector<std::uint8_t> reach((n + 1) * (n + 1) * p, 0);
  reach[index(0, 0, 0)] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t c = 0; c <= m; ++c) {
      for (std::uint32_t s = 0; s < p; ++s) {
        if (!reach[index(m, c, s)]) continue;
        reach[index(m + 1, c, s)] = 1;
        reach[index(m + 1, c + 1, add_mod(s, a[m], p))] = 1;
      }
    }
  }
  std::size_t k = 0;
  while (k <= n && !reach[index(n, k, alpha.value())]) ++k;
  if (k > n) return std::nullopt;

  // Colex-least k-subset: choose the smallest feasible largest element,
  // then recurse on the prefix below it.
  std::uint64_t bits = 0;
  std::uint32_t remaining = alpha.value();
  std::size_t limit = n;
  for (std::size_t c = k; c > 0; --c) {
    std::size_t m = c - 1;
    while (m < limit &&
           !reach[index(m, c - 1, sub_mod(remaining, a[m], p))]) {
      ++m;
    }
    bits |= std::uint64_t{1} << m;
    remaining = sub_mod(remaining, a[m], p);
    limit = m;
  }
  std::vector<std::uint32_t> negated = a.entries();
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> i) & 1u) negated[i] = p - negated[i];
  }
  return AffineReduction{SupportSet(bits, n),
                         Sequence(a.prime(), std::move(negated))};
}

std::size_t affine_dim(const Sequence& a, Residue alpha) {
  CheckSamePrime(a, alpha);
  RequireLength(a, kMaxDirectLength);
  IncrementalRank rank(a.prime(), a.length());
  std::optional<std::uint64_t> base;
  const std::size_t ceiling = a.length() - 1;
  ForEachSolution(a, alpha.value(), [&](std::uint64_t m) {
    if (!base) {
      base = m;
      return ceiling > 0;
    }
    rank.insert_difference(m, *base);
    return rank.rank() < ceiling;
  });
  if (!base) {
    throw Error(ErrorCode::kEmptySolutionSet,
                "no 0-1 solution for alpha = " +
                    std::to_string(alpha.value()));
  }
  return rank.rank();
}

}  // namespace zerosum
