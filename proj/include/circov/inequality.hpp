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

#ifndef CIRCOV_INEQUALITY_HPP_
#define CIRCOV_INEQUALITY_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "circov/circulant.hpp"
#include "circov/minor.hpp"
#include "circov/rational.hpp"

namespace circov {

enum class IneqKind { kBoolean, kRank, kRMinor };

struct IneqOrigin {
  IneqKind kind = IneqKind::kBoolean;
  IndexSet W;  // r-minor inequalities only
  int r = 0;   // r-minor inequalities only
};

/// coeffs^T x >= rhs with integral data.
class Ineq {
 public:
  /// Throws InputError when every coefficient is zero.
  Ineq(IntVec coeffs, std::int64_t rhs, IneqOrigin origin = {});

  const IntVec& coeffs() const { return coeffs_; }
  std::int64_t rhs() const { return rhs_; }
  const IneqOrigin& origin() const { return origin_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  Rat lhs(const RatVec& x) const { return dot(coeffs_, x); }
  /// rhs - lhs(x): positive exactly when x violates the inequality.
  Rat violation(const RatVec& x) const { return Rat(rhs_) - lhs(x); }

  /// Same coefficients and right-hand side (origin ignored).
  bool same_as(const Ineq& other) const {
    return rhs_ == other.rhs_ && coeffs_ == other.coeffs_;
  }

 private:
  IntVec coeffs_;
  std::int64_t rhs_;
  IneqOrigin origin_;
};

enum class GenSetKind { kAllOnesVertex, kMinorVertex };

/// Integral generating set of a cone of tight normals.
struct GenSet {
  std::vector<IntVec> vectors;
  GenSetKind provenance;

  bool contains(const IntVec& v) const;
};

/// x_i >= 0, -x_i >= -1 and the cover row of each i, in that order per i.
std::vector<Ineq> boolean_system(const Circulant& c);

/// sum x_i >= ceil(n/k).
Ineq rank_inequality(const Circulant& c);

/// Coefficient r+1 on W and r elsewhere, rhs ceil(r n'/k'); 1 <= r <= k'-1.
Ineq rminor_inequality(const MinorSpec& spec, int r);

/// Closed form of ceil(r n'/k') for a minor with n1 = 1 and n3 = p mod (k-d):
///   r n/k + (ceil(rp/(k-d)) - rp/(k-d)) + r d n3 / (k (k-d)).
Rat rhs_via_alfa(int n, int k, int d, int n3, int p, int r);

struct AlphaBeta {
  Rat alpha;
  Rat beta;
};

/// alpha = r n/k + (ceil(rp/(k-d)) - rp/(k-d)), beta = r/(k(k-d)).
AlphaBeta alpha_beta(int n, int k, int d, int p, int r);

/// {C^1, ..., C^n, 1}; requires gcd(n, k) = 1.
GenSet generating_set_allones(const Circulant& c);

/// {C^i : i-1 not in N} u {e^j : j in N} u {r 1 + sum_{j in W} e^j : 1 <= r <= k'-1}.
GenSet generating_set_minor(const MinorSpec& spec);

/// a^T x >= ceil(a^T xstar).
Ineq cg_round(const IntVec& a, const RatVec& xstar, IneqOrigin origin = {});

/// Boolean system, rank inequality and every r-minor inequality of the given
/// minors, deduplicated on (coeffs, rhs) keeping the first occurrence.
std::vector<Ineq> candidate_closure_system(const Circulant& c, std::span<const MinorSpec> specs);

}  // namespace circov

#endif  // CIRCOV_INEQUALITY_HPP_
