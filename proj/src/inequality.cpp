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

#include "circov/inequality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "circov/error.hpp"

namespace circov {

Ineq::Ineq(IntVec coeffs, std::int64_t rhs, IneqOrigin origin)
    : coeffs_(std::move(coeffs)), rhs_(rhs), origin_(std::move(origin)) {
  if (coeffs_.size() == 0 || (coeffs_.array() == 0).all()) {
    throw InputError("inequality with all-zero coefficients");
  }
}

bool GenSet::contains(const IntVec& v) const {
  return std::any_of(vectors.begin(), vectors.end(), [&](const IntVec& u) { return u == v; });
}

namespace {

IntVec row_vector(const Circulant& c, int i) {
  IntVec v = IntVec::Zero(c.n());
  for (int j : row_support(c, i)) v[j - 1] = 1;
  return v;
}

IntVec unit(int n, int j) {
  IntVec v = IntVec::Zero(n);
  v[j - 1] = 1;
  return v;
}

IntVec minor_coeffs(int n, const IndexSet& w, int r) {
  IntVec v = IntVec::Constant(n, r);
  for (int j : w) v[j - 1] += 1;
  return v;
}

}  // namespace

std::vector<Ineq> boolean_system(const Circulant& c) {
  const int n = c.n();
  std::vector<Ineq> out;
  out.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    out.emplace_back(unit(n, i), 0);
    out.emplace_back(-unit(n, i), -1);
    out.emplace_back(row_vector(c, i), 1);
  }
  return out;
}

Ineq rank_inequality(const Circulant& c) {
  return Ineq(IntVec::Ones(c.n()), to_int64(rat_ceil(Rat(c.n(), c.k()))),
              IneqOrigin{IneqKind::kRank, {}, 0});
}

Ineq rminor_inequality(const MinorSpec& spec, int r) {
  if (r < 1 || r > spec.k_prime - 1) {
    throw InputError("rminor_inequality: r = " + std::to_string(r) + " outside 1..k'-1 = 1.." +
                     std::to_string(spec.k_prime - 1));
  }
  const auto rhs = rat_ceil(Rat(static_cast<long>(r) * spec.n_prime, spec.k_prime));
  return Ineq(minor_coeffs(spec.base.n(), spec.W, r), to_int64(rhs),
              IneqOrigin{IneqKind::kRMinor, spec.W, r});
}

AlphaBeta alpha_beta(int n, int k, int d, int p, int r) {
  if (d < 1 || d > k - 2) throw InputError("alpha_beta: d outside 1..k-2");
  if (p < 1 || p >= k - d) throw InputError("alpha_beta: p outside 1..k-d-1");
  if (r < 1 || r > k - d - 1) throw InputError("alpha_beta: r outside 1..k-d-1");
  const Rat frac(static_cast<long>(r) * p, k - d);
  const Rat alpha = Rat(static_cast<long>(r) * n, k) + (Rat(rat_ceil(frac)) - frac);
  const Rat beta(r, static_cast<long>(k) * (k - d));
  return {alpha, beta};
}

Rat rhs_via_alfa(int n, int k, int d, int n3, int p, int r) {
  if (k - d < 2) throw InputError("rhs_via_alfa: k-d must be at least 2");
  if (p < 1 || p >= k - d) throw InputError("rhs_via_alfa: p outside 1..k-d-1");
  if (n3 < 0 || n3 % (k - d) != p) throw InputError("rhs_via_alfa: n3 is not p mod (k-d)");
  const Rat frac(static_cast<long>(r) * p, k - d);
  return Rat(static_cast<long>(r) * n, k) + (Rat(rat_ceil(frac)) - frac) +
         Rat(static_cast<long>(r) * d * n3, static_cast<long>(k) * (k - d));
}

GenSet generating_set_allones(const Circulant& c) {
  if (std::gcd(c.n(), c.k()) != 1) {
    throw InputError("generating_set_allones: gcd(n, k) != 1, (1/k) 1 is not a vertex");
  }
  GenSet out{{}, GenSetKind::kAllOnesVertex};
  for (int i = 1; i <= c.n(); ++i) out.vectors.push_back(row_vector(c, i));
  out.vectors.push_back(IntVec::Ones(c.n()));
  return out;
}

GenSet generating_set_minor(const MinorSpec& spec) {
  const Circulant& c = spec.base;
  GenSet out{{}, GenSetKind::kMinorVertex};
  for (int i = 1; i <= c.n(); ++i) {
    if (!spec.N.contains(wrap(i - 1, c.n()))) out.vectors.push_back(row_vector(c, i));
  }
  for (int j : spec.N) out.vectors.push_back(unit(c.n(), j));
  for (int r = 1; r <= spec.k_prime - 1; ++r) out.vectors.push_back(minor_coeffs(c.n(), spec.W, r));
  return out;
}

Ineq cg_round(const IntVec& a, const RatVec& xstar, IneqOrigin origin) {
  return Ineq(a, to_int64(rat_ceil(dot(a, xstar))), std::move(origin));
}

std::vector<Ineq> candidate_closure_system(const Circulant& c, std::span<const MinorSpec> specs) {
  std::vector<Ineq> out;
  std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, bool> seen;
  auto push = [&](Ineq q) {
    std::vector<std::int64_t> key(q.coeffs().begin(), q.coeffs().end());
    if (seen.emplace(std::make_pair(std::move(key), q.rhs()), true).second) out.push_back(std::move(q));
  };
  for (Ineq& q : boolean_system(c)) push(std::move(q));
  push(rank_inequality(c));
  for (const MinorSpec& spec : specs) {
    if (!(spec.base == c)) throw InputError("candidate_closure_system: minor of another circulant");
    for (int r = 1; r <= spec.k_prime - 1; ++r) push(rminor_inequality(spec, r));
  }
  return out;
}

}  // namespace circov
