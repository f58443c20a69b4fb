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

#ifndef CIRCOV_CIRCULANT_HPP_
#define CIRCOV_CIRCULANT_HPP_

#include <Eigen/Core>
#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace circov {

/// Maps any integer onto the residue system {1, ..., n}.
constexpr int wrap(long long i, int n) {
  const long long r = ((i - 1) % n + n) % n;
  return static_cast<int>(r) + 1;
}

/// Sorted set of distinct residues in {1, ..., n}.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and removes duplicates; does not range-check.
  explicit IndexSet(std::vector<int> members);
  IndexSet(std::initializer_list<int> members) : IndexSet(std::vector<int>(members)) {}

  /// Like the constructor, but throws InputError for members outside 1..n.
  static IndexSet checked(std::vector<int> members, int n);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int i) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<int> members_;
};

/// The circulant matrix C_n^k: row i is the cyclic interval {i, ..., i+k-1}.
class Circulant {
 public:
  /// Requires 2 <= k <= n-2.
  Circulant(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  friend bool operator==(const Circulant&, const Circulant&) = default;

 private:
  int n_;
  int k_;
};

/// Support of row i of C.
IndexSet row_support(const Circulant& c, int i);

/// Dense 0/1 matrix of C in any scalar type.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> circulant_matrix(const Circulant& c) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(c.n(), c.n());
  m.setConstant(Scalar(0));
  for (int i = 1; i <= c.n(); ++i) {
    for (int t = 0; t < c.k(); ++t) m(i - 1, wrap(i + t, c.n()) - 1) = Scalar(1);
  }
  return m;
}

using Bitset = boost::dynamic_bitset<>;

/// A 0/1 matrix whose columns and rows keep the labels they had in the
/// circulant it was cut from.
struct BinMatrix {
  int n_cols = 0;
  std::vector<int> col_labels;  // original column residues, increasing
  std::vector<int> row_labels;  // original row indices, increasing
  std::vector<Bitset> rows;     // bit c refers to col_labels[c]

  std::size_t n_rows() const { return rows.size(); }
};

/// The contraction minor C/N: drop the columns in N, then every dominating
/// row. Among identical rows a single representative survives.
BinMatrix contract(const Circulant& c, const IndexSet& contracted);

/// Returns (n', k') when M is isomorphic to C_{n'}^{k'} under row and column
/// permutations. Throws InputError when M is not square.
std::optional<std::pair<int, int>> is_isomorphic_circulant(const BinMatrix& m);

}  // namespace circov

#endif  // CIRCOV_CIRCULANT_HPP_
