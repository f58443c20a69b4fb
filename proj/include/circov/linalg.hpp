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

#ifndef CIRCOV_LINALG_HPP_
#define CIRCOV_LINALG_HPP_

// Exact elimination over a field scalar (instantiated with Rat). Pivots are
// chosen deterministically: the first nonzero entry in row-major scan order.

#include <Eigen/Core>
#include <optional>
#include <span>
#include <vector>

#include "circov/error.hpp"
#include "circov/rational.hpp"

namespace circov {

/// Incrementally maintained row-echelon basis. Each stored row has a unit
/// pivot and is zero at the pivots of all rows inserted before it.
template <typename Scalar>
class EchelonBasis {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit EchelonBasis(Eigen::Index dim) : dim_(dim) {}

  /// Reduces v against the basis; keeps it and returns true if independent.
  bool add(Vector v) {
    if (v.size() != dim_) throw InputError("EchelonBasis::add: length mismatch");
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const Scalar factor = v[pivots_[b]];
      if (factor == Scalar(0)) continue;
      for (Eigen::Index c = 0; c < dim_; ++c) {
        if (rows_[b][c] != Scalar(0)) v[c] -= factor * rows_[b][c];
      }
    }
    Eigen::Index pivot = 0;
    while (pivot < dim_ && v[pivot] == Scalar(0)) ++pivot;
    if (pivot == dim_) return false;
    const Scalar lead = v[pivot];
    for (Eigen::Index c = pivot; c < dim_; ++c) {
      if (v[c] != Scalar(0)) v[c] /= lead;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index dim() const { return dim_; }
  bool full() const { return rank() == dim_; }

 private:
  Eigen::Index dim_;
  std::vector<Vector> rows_;
  std::vector<Eigen::Index> pivots_;
};

/// Rank of the rows of m.
template <typename Derived>
Eigen::Index rank_exact(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  EchelonBasis<Scalar> basis(m.cols());
  for (Eigen::Index i = 0; i < m.rows() && !basis.full(); ++i) {
    basis.add(m.row(i).transpose());
  }
  return basis.rank();
}

/// Unique solution of a x = b, or nullopt when a is singular.
template <typename DerivedA, typename DerivedB>
std::optional<Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1>> solve_square(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw InputError("solve_square: matrix is not square");
  if (b.size() != n) throw InputError("solve_square: rhs length mismatch");

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && aug(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) aug.row(pivot).swap(aug.row(col));
    const Scalar lead = aug(col, col);
    for (Eigen::Index c = col; c <= n; ++c) aug(col, c) /= lead;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == Scalar(0)) continue;
      const Scalar factor = aug(r, col);
      for (Eigen::Index c = col; c <= n; ++c) {
        if (aug(col, c) != Scalar(0)) aug(r, c) -= factor * aug(col, c);
      }
    }
  }
  return Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(aug.col(n));
}

/// Linear rank of a family of equal-length vectors; 0 for an empty family.
Eigen::Index rank_exact(std::span<const RatVec> vectors);

/// Dimension of the affine hull of a nonempty point set.
Eigen::Index affine_rank(std::span<const RatVec> points);

/// Square system given as a list of rows.
std::optional<RatVec> solve_square(std::span<const RatVec> rows, const RatVec& rhs);

}  // namespace circov

#endif  // CIRCOV_LINALG_HPP_
