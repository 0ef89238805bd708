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

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
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

TEST(PrimeTest, RejectsNonPrimes) {
  for (std::uint32_t bad : {0u, 1u, 2u, 4u, 9u, 15u, 65535u, 65537u}) {
    EXPECT_EQ(CodeOf([&] { Prime p(bad); }), ErrorCode::kInvalidArgument)
        << bad;
  }
  EXPECT_EQ(Prime(3).value(), 3u);
  EXPECT_EQ(Prime(65521).value(), 65521u);
}

TEST(ResidueTest, ReducesSignedValues) {
  const Prime p(7);
  EXPECT_EQ(Residue(-1, p).value(), 6u);
  EXPECT_EQ(Residue(15, p).value(), 1u);
  EXPECT_EQ(Residue(-15, p).value(), 6u);
  EXPECT_TRUE(Residue(14, p).is_zero());
}

TEST(ResidueTest, FieldOperations) {
  const Prime p(11);
  const Residue a(7, p), b(9, p);
  EXPECT_EQ((a + b).value(), 5u);
  EXPECT_EQ((a - b).value(), 9u);
  EXPECT_EQ((a * b).value(), 8u);
  EXPECT_EQ((-a).value(), 4u);
  EXPECT_EQ((-Residue(0, p)).value(), 0u);
}

TEST(InverseTest, KnownValues) {
  EXPECT_EQ(inverse(Residue(5, Prime(7))).value(), 3u);
  EXPECT_EQ(inverse(Residue(1, Prime(5))).value(), 1u);
  EXPECT_EQ(inverse(Residue(10, Prime(11))).value(), 10u);
}

TEST(InverseTest, ZeroHasNoInverse) {
  EXPECT_EQ(CodeOf([] { inverse(Residue(0, Prime(5))); }),
            ErrorCode::kZeroInverse);
}

TEST(InverseTest, AgreesWithFermat) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 101u, 65521u}) {
    for (std::uint32_t a = 1; a < std::min(p, 500u); ++a) {
      EXPECT_EQ(inverse_mod(a, p), oracle::Inv(a, p)) << a << " mod " << p;
    }
  }
}

TEST(RankTest, Examples) {
  FpMatrix m1(Prime(5), 5);
  m1.add_row(FpMatrix::Row{1, 1, 1, 1, 1});
  EXPECT_EQ(row_rank(m1), 1u);

  FpMatrix m2(Prime(3), {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  EXPECT_EQ(row_rank(m2), 3u);

  // The three rows are independent over F_5 (determinant -2).
  FpMatrix m3(Prime(5), {{1, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}});
  EXPECT_EQ(row_rank(m3), 3u);
}

TEST(RankTest, DependentRowsOverF3) {
  // (1,1,0) + (0,1,1) = (1,2,1) over F_3.
  FpMatrix m(Prime(3), {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}});
  EXPECT_EQ(row_rank(m), 2u);
}

TEST(RankTest, MatchesOracleOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 13}[trial % 4];
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    std::vector<oracle::Vec> raw(rows, oracle::Vec(cols));
    FpMatrix m(Prime(p), cols);
    for (auto& r : raw) {
      // Sparse entries so that dependent rows are common.
      for (auto& v : r) v = rng() % 3 == 0 ? rng() % p : 0;
      m.add_row(FpMatrix::Row(r));
    }
    EXPECT_EQ(row_rank(m), oracle::Rank(raw, p));
  }
}

TEST(MatrixTest, RejectsBadWidths) {
  EXPECT_EQ(CodeOf([] { FpMatrix m(Prime(5), 0); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { FpMatrix m(Prime(5), 65); }),
            ErrorCode::kInvalidArgument);
  FpMatrix m(Prime(5), 3);
  EXPECT_EQ(CodeOf([&] { m.add_row(FpMatrix::Row{1, 2}); }),
            ErrorCode::kLengthMismatch);
}

TEST(MatrixTest, IndicatorRows) {
  FpMatrix m(Prime(5), 4);
  m.add_indicator_row(0b1010);
  EXPECT_EQ(m.row(0), (FpMatrix::Row{0, 1, 0, 1}));
}

void ExpectAnnihilates(const FpMatrix& m, const FpMatrix& basis) {
  const std::uint32_t p = m.prime().value();
  for (const auto& v : basis.rows()) {
    for (const auto& r : m.rows()) {
      std::uint64_t dot = 0;
      for (std::size_t i = 0; i < r.size(); ++i) dot += std::uint64_t{r[i]} * v[i];
      EXPECT_EQ(dot % p, 0u);
    }
  }
}

TEST(NullspaceTest, AllOnesRow) {
  FpMatrix m(Prime(5), {{1, 1, 1, 1, 1}});
  const FpMatrix n = nullspace_basis(m);
  EXPECT_EQ(n.num_rows(), 4u);
  EXPECT_EQ(row_rank(n), 4u);
  ExpectAnnihilates(m, n);
}

TEST(NullspaceTest, SingleEquationOverF3) {
  FpMatrix m(Prime(3), {{1, 1}});
  const FpMatrix n = nullspace_basis(m);
  ASSERT_EQ(n.num_rows(), 1u);
  const auto& v = n.row(0);
  // A multiple of (1, 2).
  EXPECT_EQ((v[0] * 2) % 3, v[1]);
  EXPECT_NE(v[0], 0u);
}

TEST(NullspaceTest, SporadicBasisTable) {
  // A basis of the solution span of (6,1,5,2,4,3) over F_7.
  FpMatrix m(Prime(7), {{1, 1, 0, 0, 0, 0},
                        {0, 0, 1, 1, 0, 0},
                        {0, 0, 0, 0, 1, 1},
                        {1, 0, 1, 0, 0, 1}});
  const FpMatrix n = nullspace_basis(m);
  ASSERT_EQ(n.num_rows(), 2u);
  ExpectAnnihilates(m, n);
  FpMatrix with_a = n;
  with_a.add_row(FpMatrix::Row{6, 1, 5, 2, 4, 3});
  EXPECT_EQ(row_rank(with_a), 2u);
}

TEST(NullspaceTest, RandomMatricesHaveComplementaryDimension) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = trial % 2 ? 5 : 7;
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
    FpMatrix m(Prime(p), cols);
    for (std::size_t r = 0; r < rows; ++r) {
      FpMatrix::Row row(cols);
      for (auto& v : row) v = rng() % 2 ? rng() % p : 0;
      m.add_row(row);
    }
    const FpMatrix n = nullspace_basis(m);
    EXPECT_EQ(n.num_rows() + row_rank(m), cols);
    if (!n.empty()) EXPECT_EQ(row_rank(n), n.num_rows());
    ExpectAnnihilates(m, n);
  }
}

TEST(IncrementalRankTest, AgreesWithBatchRank) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = 7;
    const std::size_t cols = 1 + rng() % 10;
    IncrementalRank inc(Prime(p), cols);
    FpMatrix m(Prime(p), cols);
    for (int r = 0; r < 12; ++r) {
      const std::uint64_t mask = rng() & ((std::uint64_t{1} << cols) - 1);
      const std::size_t before = row_rank(m);
      m.add_indicator_row(mask);
      const bool grew = inc.insert_indicator(mask);
      EXPECT_EQ(grew, row_rank(m) > before);
      EXPECT_EQ(inc.rank(), row_rank(m));
    }
  }
}

TEST(IncrementalRankTest, Differences) {
  IncrementalRank inc(Prime(5), 3);
  EXPECT_TRUE(inc.insert_difference(0b011, 0b000));
  EXPECT_FALSE(inc.insert_difference(0b011, 0b011));
  EXPECT_TRUE(inc.insert_difference(0b110, 0b011));  // (-1, 0, 1)
  EXPECT_FALSE(inc.insert(std::vector<std::uint32_t>{0, 1, 1}));
  EXPECT_EQ(inc.rank(), 2u);
}

}  // namespace
}  // namespace zerosum
