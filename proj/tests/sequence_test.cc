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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oracles.h"
#include "zerosum/error.h"

namespace zerosum {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

Sequence Seq(std::uint32_t p, std::vector<std::uint32_t> a) {
  return Sequence(Prime(p), std::move(a));
}

TEST(SequenceTest, ParseAndPrint) {
  const Sequence a = Sequence::Parse("p=7;A=6,1,5,2,4,3");
  EXPECT_EQ(a.modulus(), 7u);
  EXPECT_EQ(a.entries(), (std::vector<std::uint32_t>{6, 1, 5, 2, 4, 3}));
  EXPECT_EQ(a.ToString(), "p=7;A=6,1,5,2,4,3");
  EXPECT_EQ(Sequence::Parse(a.ToString()), a);
}

TEST(SequenceTest, ParseRejectsMalformedInput) {
  for (const char* bad :
       {"", "p=7", "p=7;A=", "p=7;A=1,,2", "p=7;A=1, 2", "p=07;A=1",
        "p=7;A=01", "A=1;p=7", "p=7;A=1;", "p=x;A=1", "p=7;B=1"}) {
    EXPECT_EQ(CodeOf([&] { Sequence::Parse(bad); }), ErrorCode::kParse) << bad;
  }
}

TEST(SequenceTest, ParseRejectsInvalidValues) {
  EXPECT_EQ(CodeOf([] { Sequence::Parse("p=7;A=0,1"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { Sequence::Parse("p=7;A=7"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { Seq(7, {0, 1}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { Sequence::Parse("p=8;A=1"); }),
            ErrorCode::kInvalidArgument);
}

TEST(SequenceTest, LengthLimits) {
  EXPECT_EQ(CodeOf([] { Seq(5, {}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(Seq(5, std::vector<std::uint32_t>(64, 1)).length(), 64u);
  EXPECT_EQ(CodeOf([] { Seq(5, std::vector<std::uint32_t>(65, 1)); }),
            ErrorCode::kTooLong);
}

TEST(SequenceTest, SignedConstructorReduces) {
  const std::vector<std::int64_t> raw{-1, 8, 3};
  EXPECT_EQ(Sequence(Prime(7), raw).entries(),
            (std::vector<std::uint32_t>{6, 1, 3}));
}

TEST(SequenceTest, SumsAndTransforms) {
  const Sequence a = Seq(7, {6, 1, 5, 2, 4, 3});
  EXPECT_TRUE(a.is_zero_sum());
  EXPECT_FALSE(a.is_constant());
  EXPECT_TRUE(Seq(5, {2, 2, 2}).is_constant());
  EXPECT_EQ(Seq(5, {1, 2, 4}).sum().value(), 2u);
  EXPECT_EQ(a.scaled(Residue(2, a.prime())).entries(),
            (std::vector<std::uint32_t>{5, 2, 3, 4, 1, 6}));
  const std::vector<std::size_t> perm{5, 0, 1, 2, 3, 4};
  EXPECT_EQ(a.permuted(perm).entries(),
            (std::vector<std::uint32_t>{3, 6, 1, 5, 2, 4}));
  EXPECT_EQ(a.appended(Residue(3, a.prime())).length(), 7u);
  EXPECT_EQ(a.sorted().entries(),
            (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(CodeOf([&] { a.scaled(Residue(0, a.prime())); }),
            ErrorCode::kInvalidArgument);
  const std::vector<std::size_t> not_perm{0, 0, 1, 2, 3, 4};
  EXPECT_EQ(CodeOf([&] { a.permuted(not_perm); }),
            ErrorCode::kInvalidArgument);
}

TEST(SubsumsTest, Examples) {
  EXPECT_EQ(subsums(Seq(5, {1, 1})).members(),
            (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(subsums(Seq(7, {1, 6, 2})).members(),
            (std::vector<std::uint32_t>{0, 1, 2, 3, 6}));
  EXPECT_EQ(subsums(Seq(5, {1, 2, 3, 4})).size(), 5u);
}

TEST(SubsumsTest, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11, 13}[trial % 5];
    std::vector<std::uint32_t> a(1 + rng() % 9);
    for (auto& v : a) v = 1 + rng() % (p - 1);
    const auto expected = oracle::Subsums(a, p);
    EXPECT_EQ(subsums(Seq(p, a)).members(),
              std::vector<std::uint32_t>(expected.begin(), expected.end()));
  }
}

TEST(ResidueSetTest, Negation) {
  ResidueSet s(Prime(7));
  s.insert(0);
  s.insert(1);
  s.insert(3);
  EXPECT_EQ(s.negated().members(), (std::vector<std::uint32_t>{0, 4, 6}));
}

TEST(ProfileTest, Examples) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(multiplicity_profile(Seq(7, {1, 6, 2})).multiplicities, (V{2, 1}));
  EXPECT_EQ(multiplicity_profile(Seq(5, {1, 1, 1})).multiplicities, (V{3}));
  EXPECT_EQ(multiplicity_profile(Seq(7, {6, 1, 5, 2, 4, 3})).multiplicities,
            (V{2, 2, 2}));
}

TEST(ProfileTest, ThbBound) {
  EXPECT_EQ(thb_lower_bound({{2, 1}}, Prime(7)), 5u);
  EXPECT_EQ(thb_lower_bound({{3}}, Prime(5)), 4u);
  EXPECT_EQ(thb_lower_bound({{2, 1}}, Prime(3)), 3u);
  EXPECT_EQ(thb_lower_bound({{}}, Prime(5)), 1u);
}

TEST(CanonicalFormTest, Examples) {
  const CanonicalForm c1 = canonical_form(Seq(5, {2, 2, 4}));
  EXPECT_EQ(c1.representative.entries(), (std::vector<std::uint32_t>{1, 1, 2}));
  EXPECT_EQ(c1.scaling.value(), 3u);

  const CanonicalForm c2 = canonical_form(Seq(5, {1, 1, 2}));
  EXPECT_EQ(c2.representative.entries(), (std::vector<std::uint32_t>{1, 1, 2}));
  EXPECT_EQ(c2.scaling.value(), 1u);

  const CanonicalForm c3 = canonical_form(Seq(7, {6, 1, 5, 2, 4, 3}));
  EXPECT_EQ(c3.representative.entries(),
            (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6}));
}

TEST(CanonicalFormTest, RecoverRoundTrips) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{5, 7, 11}[trial % 3];
    std::vector<std::uint32_t> a(1 + rng() % 8);
    for (auto& v : a) v = 1 + rng() % (p - 1);
    const Sequence s = Seq(p, a);
    const CanonicalForm c = canonical_form(s);
    EXPECT_EQ(c.Recover(), s);
    EXPECT_EQ(c.representative.entries(), oracle::OrbitKey(a, p));
  }
}

TEST(CanonicalMultisetTest, AgreesWithOrbitKey) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<std::uint32_t> cur(n, 1);
      while (true) {
        EXPECT_EQ(IsCanonicalMultiset(cur, p), oracle::OrbitKey(cur, p) == cur);
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == p - 1) --i;
        if (i == 0) break;
        const std::uint32_t v = cur[i - 1] + 1;
        for (std::size_t j = i - 1; j < n; ++j) cur[j] = v;
      }
    }
  }
}

TEST(SumFilterTest, Names) {
  for (SumFilter f : {SumFilter::kAll, SumFilter::kZeroSum, SumFilter::kNonZeroSum}) {
    EXPECT_EQ(ParseSumFilter(SumFilterName(f)), f);
  }
  EXPECT_FALSE(ParseSumFilter("zero").has_value());
}

std::set<std::vector<std::uint32_t>> Keys(const std::vector<Sequence>& seqs) {
  std::set<std::vector<std::uint32_t>> out;
  for (const Sequence& s : seqs) out.insert(s.entries());
  return out;
}

TEST(EnumeratorTest, SmallExamples) {
  EXPECT_EQ(Keys(enumerate_canonical(Prime(3), 2, SumFilter::kAll)),
            (std::set<std::vector<std::uint32_t>>{{1, 1}, {1, 2}}));
  EXPECT_EQ(Keys(enumerate_canonical(Prime(3), 2, SumFilter::kZeroSum)),
            (std::set<std::vector<std::uint32_t>>{{1, 2}}));
  EXPECT_EQ(enumerate_canonical(Prime(5), 5, SumFilter::kAll).size(), 14u);
}

TEST(EnumeratorTest, MatchesBurnsideCount) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::size_t n = 1; n <= (p <= 7 ? 9u : 6u); ++n) {
      EXPECT_EQ(enumerate_canonical(Prime(p), n, SumFilter::kAll).size(),
                oracle::BurnsideOrbitCount(p, n))
          << "p=" << p << " l=" << n;
    }
  }
}

TEST(EnumeratorTest, MatchesNaiveOrbitsWithFilters) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (int f = 0; f < 3; ++f) {
        const SumFilter filter = std::vector<SumFilter>{
            SumFilter::kAll, SumFilter::kZeroSum, SumFilter::kNonZeroSum}[f];
        const auto got = enumerate_canonical(Prime(p), n, filter);
        EXPECT_EQ(Keys(got), oracle::AllOrbits(p, n, f));
        EXPECT_EQ(got.size(), Keys(got).size());
      }
    }
  }
}

TEST(EnumeratorTest, ColexOrder) {
  CanonicalEnumerator it(Prime(5), 3, SumFilter::kAll);
  std::vector<std::uint64_t> ranks;
  std::vector<std::vector<std::uint32_t>> seen;
  while (auto s = it.next()) {
    ranks.push_back(it.last_rank());
    std::vector<std::uint32_t> rev(s->entries().rbegin(), s->entries().rend());
    seen.push_back(rev);
  }
  EXPECT_TRUE(std::is_sorted(ranks.begin(), ranks.end()));
  // Colex on sorted multisets is lex on the reversed vectors.
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(EnumeratorTest, ShardsPartitionTheStream) {
  for (std::uint64_t total : {1u, 2u, 3u, 5u, 8u}) {
    std::multiset<std::vector<std::uint32_t>> merged;
    for (std::uint64_t i = 0; i < total; ++i) {
      CanonicalEnumerator it(Prime(5), 6, SumFilter::kAll, i, total);
      while (auto s = it.next()) {
        EXPECT_EQ(it.last_rank() % total, i);
        merged.insert(s->entries());
      }
    }
    const auto all = enumerate_canonical(Prime(5), 6, SumFilter::kAll);
    std::multiset<std::vector<std::uint32_t>> expected;
    for (const Sequence& s : all) expected.insert(s.entries());
    EXPECT_EQ(merged, expected) << total;
  }
}

TEST(EnumeratorTest, RejectsBadShards) {
  EXPECT_EQ(CodeOf([] { CanonicalEnumerator it(Prime(5), 3, SumFilter::kAll, 2, 2); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { CanonicalEnumerator it(Prime(5), 3, SumFilter::kAll, 0, 0); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace zerosum
