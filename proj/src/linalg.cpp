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

namespace circov {

Eigen::Index rank_exact(std::span<const RatVec> vectors) {
  if (vectors.empty()) return 0;
  EchelonBasis<Rat> basis(vectors.front().size());
  for (const RatVec& v : vectors) {
    if (v.size() != basis.dim()) throw InputError("rank_exact: vectors differ in length");
    if (basis.full()) continue;
    basis.add(v);
  }
  return basis.rank();
}

Eigen::Index affine_rank(std::span<const RatVec> points) {
  if (points.empty()) throw InputError("affine_rank: empty point set");
  const RatVec& base = points.front();
  EchelonBasis<Rat> basis(base.size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != base.size()) throw InputError("affine_rank: points differ in length");
    if (basis.full()) continue;
    basis.add(points[i] - base);
  }
  return basis.rank();
}

std::optional<RatVec> solve_square(std::span<const RatVec> rows, const RatVec& rhs) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  RatMat a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InputError("solve_square: matrix is not square");
    a.row(i) = rows[i].transpose();
  }
  return solve_square(a, rhs);
}

}  // namespace circov
