// Copyright 2026 The circov Authors
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

#include "circov/linalg.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "circov/circulant.hpp"

namespace circov {
namespace {

std::vector<RatVec> rows_of(const RatMat& m) {
  std::vector<RatVec> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).transpose());
  return out;
}

TEST(RankTest, Empty) { EXPECT_EQ(rank_exact(std::vector<RatVec>{}), 0); }

TEST(RankTest, UnitVectors) {
  const RatMat eye = RatMat::Identity(6, 6);
  EXPECT_EQ(rank_exact(rows_of(eye)), 6);
  EXPECT_EQ(rank_exact(eye), 6);
}

TEST(RankTest, Circulants) {
  EXPECT_EQ(rank_exact(circulant_matrix<Rat>(Circulant(7, 3))), 7);
  // Eigenvalue count of the circulant: zero exactly at the nontrivial cube
  // (resp. fourth) roots of unity among the n-th roots.
  EXPECT_EQ(rank_exact(circulant_matrix<Rat>(Circulant(6, 3))), 4);
  EXPECT_EQ(rank_exact(circulant_matrix<Rat>(Circulant(8, 4))), 5);
}

TEST(RankTest, LengthMismatch) {
  std::vector<RatVec> v{RatVec::Zero(3), RatVec::Zero(4)};
  EXPECT_THROW(rank_exact(v), InputError);
}

TEST(AffineRankTest, SmallCases) {
  RatVec p(3);
  p << Rat(1), Rat(2), Rat(3);
  EXPECT_EQ(affine_rank(std::vector<RatVec>{p}), 0);

  RatVec q = p + RatVec::Constant(3, Rat(1, 2));
  RatVec r = p + RatVec::Constant(3, Rat(5));
  EXPECT_EQ(affine_rank(std::vector<RatVec>{p, q, r}), 1);
  EXPECT_THROW(affine_rank(std::vector<RatVec>{}), InputError);
}

TEST(AffineRankTest, CoversOfC42AreFullDimensional) {
  // Covers of C_4^2: no two cyclically consecutive zeros.
  std::vector<RatVec> covers;
  for (int mask = 0; mask < 16; ++mask) {
    bool ok = true;
    for (int i = 0; i < 4; ++i) ok = ok && (((mask >> i) & 1) || ((mask >> ((i + 1) % 4)) & 1));
    if (!ok) continue;
    RatVec x(4);
    for (int i = 0; i < 4; ++i) x[i] = Rat((mask >> i) & 1);
    covers.push_back(x);
  }
  ASSERT_EQ(covers.size(), 7U);
  EXPECT_EQ(affine_rank(covers), 4);
}

TEST(SolveTest, Identity) {
  RatVec b(3);
  b << Rat(1, 2), Rat(-3), Rat(7, 5);
  const auto x = solve_square(RatMat::Identity(3, 3), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(SolveTest, CirculantAllOnesRhs) {
  const RatMat c = circulant_matrix<Rat>(Circulant(7, 3));
  const auto x = solve_square(c, RatVec::Constant(7, Rat(2)));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, RatVec::Constant(7, Rat(2, 3)));
  const auto via_rows = solve_square(rows_of(c), RatVec::Constant(7, Rat(2)));
  ASSERT_TRUE(via_rows);
  EXPECT_EQ(*via_rows, *x);
}

TEST(SolveTest, SingularWhenGcdExceedsOne) {
  const RatMat c = circulant_matrix<Rat>(Circulant(6, 3));
  EXPECT_FALSE(solve_square(c, RatVec::Constant(6, Rat(1))));
  EXPECT_FALSE(solve_square(c, RatVec::Zero(6)));
}

TEST(SolveTest, DimensionErrors) {
  EXPECT_THROW(solve_square(RatMat::Identity(3, 3), RatVec::Zero(2)), InputError);
  EXPECT_THROW(solve_square(RatMat::Zero(2, 3), RatVec::Zero(2)), InputError);
}

// For gcd(n, k) = 1 the unique solution of C x = r 1 is (r/k) 1.
TEST(SolveTest, AllOnesRhsProperty) {
  for (int n = 5; n <= 13; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      if (std::gcd(n, k) != 1) continue;
      const RatMat c = circulant_matrix<Rat>(Circulant(n, k));
      for (int r = 0; r < k; ++r) {
        const auto x = solve_square(c, RatVec::Constant(n, Rat(r)));
        ASSERT_TRUE(x) << n << " " << k;
        EXPECT_EQ(*x, RatVec::Constant(n, Rat(r, k)));
      }
    }
  }
}

}  // namespace
}  // namespace circov
