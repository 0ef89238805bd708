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

#include "zerosum/sequence.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <utility>

#include "zerosum/error.h"

namespace zerosum {

namespace {

[[noreturn]] void ParseFail(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kParse, "cannot parse sequence \"" +
                                     std::string(text) + "\": " +
                                     std::string(why));
}

// Strict unsigned decimal: no sign, no leading zeros, no whitespace.
std::uint64_t ParseNumber(std::string_view text, std::string_view token) {
  if (token.empty()) ParseFail(text, "empty number");
  if (token.size() > 1 && token.front() == '0') {
    ParseFail(text, "leading zero in \"" + std::string(token) + "\"");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    ParseFail(text, "bad number \"" + std::string(token) + "\"");
  }
  return value;
}

}  // namespace

Sequence::Sequence(Prime p, std::vector<std::uint32_t> entries)
    : p_(p), entries_(std::move(entries)) {
  Validate();
}

Sequence::Sequence(Prime p, std::span<const std::int64_t> entries) : p_(p) {
  entries_.reserve(entries.size());
  for (std::int64_t v : entries) entries_.push_back(Residue(v, p).value());
  Validate();
}

void Sequence::Validate() const {
  if (entries_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sequence must be nonempty");
  }
  if (entries_.size() > kMaxWidth) {
    throw Error(ErrorCode::kTooLong, "sequence longer than 64 entries");
  }
  for (std::uint32_t v : entries_) {
    if (v == 0 || v >= p_.value()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sequence entries must lie in [1, p-1], got " +
                      std::to_string(v));
    }
  }
}

Sequence Sequence::Parse(std::string_view text) {
  if (!text.starts_with("p=")) ParseFail(text, "expected \"p=\"");
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) ParseFail(text, "missing ';'");
  const std::uint64_t p = ParseNumber(text, text.substr(2, semi - 2));
  std::string_view rest = text.substr(semi + 1);
  if (!rest.starts_with("A=")) ParseFail(text, "expected \"A=\"");
  rest.remove_prefix(2);
  if (p > kMaxPrime) ParseFail(text, "modulus out of range");
  const Prime prime(static_cast<std::uint32_t>(p));

  std::vector<std::uint32_t> entries;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::uint64_t v = ParseNumber(text, rest.substr(0, comma));
    if (v == 0 || v >= p) ParseFail(text, "entry outside [1, p-1]");
    entries.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Sequence(prime, std::move(entries));
}

std::string Sequence::ToString() const {
  std::string out = "p=" + std::to_string(p_.value()) + ";A=";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Residue Sequence::sum() const {
  std::uint64_t s = 0;
  for (std::uint32_t v : entries_) s += v;
  return Residue(static_cast<std::int64_t>(s % p_.value()), p_);
}

bool Sequence::is_constant() const {
  return std::adjacent_find(entries_.begin(), entries_.end(),
                            std::not_equal_to<>()) == entries_.end();
}

Sequence Sequence::scaled(Residue lambda) const {
  if (lambda.modulus() != p_.value()) {
    throw Error(ErrorCode::kInvalidArgument, "modulus mismatch");
  }
  if (lambda.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "scaling must be nonzero");
  }
  std::vector<std::uint32_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mul_mod(entries_[i], lambda.value(), p_.value());
  }
  return Sequence(p_, std::move(out));
}

Sequence Sequence::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != entries_.size()) {
    throw Error(ErrorCode::kLengthMismatch, "permutation length mismatch");
  }
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::uint32_t> out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    seen[perm[i]] = true;
    out[i] = entries_[perm[i]];
  }
  return Sequence(p_, std::move(out));
}

Sequence Sequence::appended(Residue value) const {
  std::vector<std::uint32_t> out = entries_;
  out.push_back(value.value());
  return Sequence(p_, std::move(out));
}

Sequence Sequence::sorted() const {
  std::vector<std::uint32_t> out = entries_;
  std::sort(out.begin(), out.end());
  return Sequence(p_, std::move(out));
}

ResidueSet::ResidueSet(Prime p) : p_(p), member_(p.value(), 0) {}

std::size_t ResidueSet::size() const {
  return static_cast<std::size_t>(
      std::count(member_.begin(), member_.end(), std::uint8_t{1}));
}

std::vector<std::uint32_t> ResidueSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < member_.size(); ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

ResidueSet ResidueSet::negated() const {
  ResidueSet out(p_);
  const std::uint32_t p = p_.value();
  for (std::uint32_t v = 0; v < p; ++v) {
    if (member_[v]) out.insert(v == 0 ? 0 : p - v);
  }
  return out;
}

ResidueSet subsums(const Sequence& a) {
  const std::uint32_t p = a.modulus();
  ResidueSet sums(a.prime());
  sums.insert(0);
  std::vector<std::uint8_t> cur(p, 0), next(p, 0);
  cur[0] = 1;
  for (std::uint32_t x : a.entries()) {
    next = cur;
    for (std::uint32_t v = 0; v < p; ++v) {
      if (cur[v]) next[add_mod(v, x, p)] = 1;
    }
    std::swap(cur, next);
  }
  for (std::uint32_t v = 0; v < p; ++v) {
    if (cur[v]) sums.insert(v);
  }
  return sums;
}

MultiplicityProfile multiplicity_profile(const Sequence& a) {
  const std::uint32_t p = a.modulus();
  // Pair {a, -a} is keyed by its smaller member; p is odd so a != -a.
  std::vector<std::size_t> counts(p / 2 + 1, 0);
  for (std::uint32_t v : a.entries()) ++counts[std::min(v, p - v)];
  MultiplicityProfile profile;
  for (std::size_t c : counts) {
    if (c > 0) profile.multiplicities.push_back(c);
  }
  std::sort(profile.multiplicities.begin(), profile.multiplicities.end(),
            std::greater<>());
  return profile;
}

std::size_t thb_lower_bound(const MultiplicityProfile& profile, Prime p) {
  std::size_t bound = 1;
  for (std::size_t i = 0; i < profile.multiplicities.size(); ++i) {
    bound += (i + 1) * profile.multiplicities[i];
  }
  return std::min<std::size_t>(bound, p.value());
}

Sequence CanonicalForm::Recover() const {
  const Residue undo = inverse(scaling);
  std::vector<std::uint32_t> out(permutation.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (Residue(representative[permutation[i]],
                      representative.prime()) *
              undo)
                 .value();
  }
  return Sequence(representative.prime(), std::move(out));
}

CanonicalForm canonical_form(const Sequence& a) {
  const std::uint32_t p = a.modulus();
  const std::size_t n = a.length();
  std::vector<std::uint32_t> best, scaled(n);
  std::uint32_t best_lambda = 0;
  for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
    for (std::size_t i = 0; i < n; ++i) scaled[i] = mul_mod(a[i], lambda, p);
    std::sort(scaled.begin(), scaled.end());
    if (best.empty() || scaled < best) {
      best = scaled;
      best_lambda = lambda;
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return mul_mod(a[x], best_lambda, p) <
                            mul_mod(a[y], best_lambda, p);
                   });
  std::vector<std::size_t> permutation(n);
  for (std::size_t k = 0; k < n; ++k) permutation[order[k]] = k;
  return CanonicalForm{Sequence(a.prime(), std::move(best)),
                       Residue(best_lambda, a.prime()),
                       std::move(permutation)};
}

bool IsCanonicalMultiset(std::span<const std::uint32_t> sorted_entries,
                         std::uint32_t p) {
  // Compare sorted(lambda * A) with A through value counts: at the first
  // value whose counts differ, the multiset with more copies is smaller.
  std::vector<std::uint32_t> count(p, 0), scaled(p, 0);
  for (std::uint32_t v : sorted_entries) ++count[v];
  for (std::uint32_t lambda = 2; lambda < p; ++lambda) {
    std::fill(scaled.begin(), scaled.end(), 0);
    for (std::uint32_t v = 1; v < p; ++v) {
      if (count[v]) scaled[mul_mod(v, lambda, p)] = count[v];
    }
    for (std::uint32_t v = 1; v < p; ++v) {
      if (scaled[v] != count[v]) {
        if (scaled[v] > count[v]) return false;
        break;
      }
    }
  }
  return true;
}

std::string_view SumFilterName(SumFilter f) {
  switch (f) {
    case SumFilter::kAll:
      return "all";
    case SumFilter::kZeroSum:
      return "zero_sum";
    case SumFilter::kNonZeroSum:
      return "nonzero_sum";
  }
  return "all";
}

std::optional<SumFilter> ParseSumFilter(std::string_view name) {
  if (name == "all") return SumFilter::kAll;
  if (name == "zero_sum") return SumFilter::kZeroSum;
  if (name == "nonzero_sum") return SumFilter::kNonZeroSum;
  return std::nullopt;
}

CanonicalEnumerator::CanonicalEnumerator(Prime p, std::size_t length,
                                         SumFilter filter,
                                         std::uint64_t shard_index,
                                         std::uint64_t shard_total)
    : p_(p),
      length_(length),
      filter_(filter),
      shard_index_(shard_index),
      shard_total_(shard_total) {
  if (length == 0 || length > kMaxWidth) {
    throw Error(ErrorCode::kInvalidArgument, "length must be in [1, 64]");
  }
  if (shard_total == 0 || shard_index >= shard_total) {
    throw Error(ErrorCode::kInvalidArgument, "invalid shard");
  }
}

bool CanonicalEnumerator::advance() {
  if (!started_) {
    current_.assign(length_, 1);
    started_ = true;
    rank_ = 0;
    return true;
  }
  // Colex successor of a nondecreasing tuple over [1, p-1]: bump the first
  // position that may grow and reset everything before it to 1.
  const std::uint32_t top = p_.value() - 1;
  for (std::size_t i = 0; i < length_; ++i) {
    const std::uint32_t limit = i + 1 < length_ ? current_[i + 1] : top;
    if (current_[i] < limit) {
      ++current_[i];
      std::fill(current_.begin(), current_.begin() + i, 1u);
      ++rank_;
      return true;
    }
  }
  return false;
}

std::optional<Sequence> CanonicalEnumerator::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (rank_ % shard_total_ != shard_index_) continue;
    if (!IsCanonicalMultiset(current_, p_.value())) continue;
    std::uint64_t s = 0;
    for (std::uint32_t v : current_) s += v;
    const bool zero = s % p_.value() == 0;
    if (filter_ == SumFilter::kZeroSum && !zero) continue;
    if (filter_ == SumFilter::kNonZeroSum && zero) continue;
    last_rank_ = rank_;
    return Sequence(p_, current_);
  }
  return std::nullopt;
}

std::vector<Sequence> enumerate_canonical(Prime p, std::size_t length,
                                          SumFilter filter) {
  std::vector<Sequence> out;
  CanonicalEnumerator it(p, length, filter);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace zerosum
