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

#include "circov/circulant.hpp"

#include <gtest/gtest.h>

#include "circov/error.hpp"
#include "circov/minor.hpp"

namespace circov {
namespace {

IndexSet example_n59() {
  std::vector<int> n{1};
  for (int t = 0; t <= 10; ++t) n.push_back(6 + 5 * t);
  return IndexSet(n);
}

BinMatrix from_rows(int cols, const std::vector<std::vector<int>>& supports) {
  BinMatrix m;
  m.n_cols = cols;
  for (int c = 1; c <= cols; ++c) m.col_labels.push_back(c);
  for (std::size_t r = 0; r < supports.size(); ++r) {
    Bitset row(cols);
    for (int c : supports[r]) row.set(c - 1);
    m.rows.push_back(row);
    m.row_labels.push_back(static_cast<int>(r) + 1);
  }
  return m;
}

TEST(CirculantTest, RejectsBadParameters) {
  EXPECT_THROW(Circulant(7, 1), InputError);
  EXPECT_THROW(Circulant(7, 6), InputError);
  EXPECT_NO_THROW(Circulant(7, 5));
}

TEST(RowSupportTest, Examples) {
  EXPECT_EQ(row_support(Circulant(7, 3), 1), (IndexSet{1, 2, 3}));
  EXPECT_EQ(row_support(Circulant(7, 3), 6), (IndexSet{6, 7, 1}));
  EXPECT_EQ(row_support(Circulant(59, 4), 58), (IndexSet{58, 59, 1, 2}));
  EXPECT_THROW(row_support(Circulant(7, 3), 0), InputError);
  EXPECT_THROW(row_support(Circulant(7, 3), 8), InputError);
}

TEST(RowSupportTest, ColumnSumsEqualK) {
  for (int n = 4; n <= 15; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const Circulant c(n, k);
      std::vector<int> sums(n + 1, 0);
      for (int i = 1; i <= n; ++i) {
        const IndexSet s = row_support(c, i);
        EXPECT_EQ(static_cast<int>(s.size()), k);
        for (int j : s) ++sums[j];
      }
      for (int j = 1; j <= n; ++j) EXPECT_EQ(sums[j], k);
    }
  }
}

TEST(ContractTest, EmptySetKeepsCirculant) {
  const BinMatrix m = contract(Circulant(7, 3), IndexSet{});
  EXPECT_EQ(m.n_rows(), 7U);
  EXPECT_EQ(m.n_cols, 7);
  EXPECT_EQ(is_isomorphic_circulant(m), std::make_pair(7, 3));
}

TEST(ContractTest, C73ContractedAtOneFour) {
  const BinMatrix m = contract(Circulant(7, 3), IndexSet{1, 4});
  EXPECT_EQ(m.n_cols, 5);
  EXPECT_EQ(m.col_labels, (std::vector<int>{2, 3, 5, 6, 7}));
  EXPECT_EQ(m.row_labels, (std::vector<int>{1, 3, 4, 6, 7}));
  EXPECT_EQ(is_isomorphic_circulant(m), std::make_pair(5, 2));
}

TEST(ContractTest, MinorOfC594) {
  const IndexSet n = example_n59();
  const BinMatrix m = contract(Circulant(59, 4), n);
  EXPECT_EQ(m.n_cols, 47);
  EXPECT_EQ(m.n_rows(), 47U);
  EXPECT_EQ(is_isomorphic_circulant(m), std::make_pair(47, 3));
  for (int label : m.row_labels) EXPECT_FALSE(n.contains(wrap(label - 1, 59)));
}

TEST(ContractTest, RejectsLargeSets) {
  EXPECT_THROW(contract(Circulant(7, 3), IndexSet{1, 2, 3, 4, 5, 6}), InputError);
  EXPECT_THROW(contract(Circulant(7, 3), IndexSet{0, 3}), InputError);
}

TEST(ContractTest, RemovedRowsFollowContractedPredecessor) {
  // For every circulant minor the surviving rows are the i with i-1 not in N.
  for (int n = 5; n <= 13; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      const Circulant c(n, k);
      for (const IndexSet& w : enumerate_w_d1(c).sets) {
        const IndexSet contracted = *n_from_w(c, w);
        const BinMatrix m = contract(c, contracted);
        std::vector<int> expected;
        for (int i = 1; i <= n; ++i) {
          if (!contracted.contains(wrap(i - 1, n))) expected.push_back(i);
        }
        EXPECT_EQ(m.row_labels, expected) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(IsomorphismTest, DirectCirculant) {
  const BinMatrix m = contract(Circulant(6, 2), IndexSet{});
  EXPECT_EQ(is_isomorphic_circulant(m), std::make_pair(6, 2));
}

TEST(IsomorphismTest, ThreeByThree) {
  EXPECT_EQ(is_isomorphic_circulant(from_rows(3, {{1, 2}, {2, 3}, {1, 3}})), std::make_pair(3, 2));
}

TEST(IsomorphismTest, PermutedCirculantIsRecognized) {
  // C_7^3 with columns relabelled by j -> 3j mod 7 and rows reversed.
  std::vector<std::vector<int>> rows;
  for (int i = 7; i >= 1; --i) {
    std::vector<int> s;
    for (int t = 0; t < 3; ++t) s.push_back(wrap(3 * (i + t), 7));
    rows.push_back(s);
  }
  EXPECT_EQ(is_isomorphic_circulant(from_rows(7, rows)), std::make_pair(7, 3));
}

TEST(IsomorphismTest, NonCirculants) {
  // Equal row counts but the column graph is two triangles.
  EXPECT_FALSE(is_isomorphic_circulant(
      from_rows(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})));
  // Unequal row weights.
  EXPECT_FALSE(is_isomorphic_circulant(from_rows(3, {{1, 2}, {2, 3}, {1}})));
  EXPECT_THROW(is_isomorphic_circulant(from_rows(3, {{1, 2}, {2, 3}})), InputError);
}

}  // namespace
}  // namespace circov
