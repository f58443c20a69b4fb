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

#ifndef CIRCOV_ORACLE_HPP_
#define CIRCOV_ORACLE_HPP_

// Brute-force ground truth for small circulants. Covers are 0/1 vectors
// stored as bit masks: bit i-1 holds x_i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circov/circulant.hpp"
#include "circov/inequality.hpp"
#include "circov/rational.hpp"

namespace circov {

inline constexpr int kDefaultCoverBound = 24;
inline constexpr int kMaxMaskWidth = 64;

struct CoverSet {
  int n = 0;
  std::vector<std::uint64_t> covers;

  std::size_t size() const { return covers.size(); }
};

/// Every 0/1 cover of C. Refuses (OracleRefusal) when n > bound.
CoverSet enumerate_covers(const Circulant& c, int bound = kDefaultCoverBound);

/// True when the mask meets every row of C.
bool is_cover(const Circulant& c, std::uint64_t mask);

/// Evaluates coeffs^T x on masks by grouping columns with equal coefficient.
class MaskEvaluator {
 public:
  explicit MaskEvaluator(const IntVec& coeffs);
  std::int64_t operator()(std::uint64_t mask) const;

 private:
  std::vector<std::pair<std::int64_t, std::uint64_t>> groups_;
};

struct CoverMin {
  std::int64_t value;
  std::uint64_t argmin;  // first minimizer in sweep order
};

CoverMin min_over_covers(const CoverSet& covers, const Ineq& q);
CoverMin min_over_covers(const Circulant& c, const Ineq& q, int bound = kDefaultCoverBound);

bool is_valid(const CoverSet& covers, const Ineq& q);
bool is_valid(const Circulant& c, const Ineq& q, int bound = kDefaultCoverBound);

CoverSet tight_covers(const CoverSet& covers, const Ineq& q);
CoverSet tight_covers(const Circulant& c, const Ineq& q, int bound = kDefaultCoverBound);

/// Affine rank of the tight covers equals n-1. Throws InputError when q is
/// not valid.
bool is_facet(const CoverSet& covers, const Ineq& q);
bool is_facet(const Circulant& c, const Ineq& q, int bound = kDefaultCoverBound);

/// Minimum of sum_{i in W} (xhat_i - beta) over W in W(1, p) with 1 in W,
/// found by enumerating the family; nullopt when it is empty.
std::optional<Rat> brute_force_separation(const Circulant& c, const RatVec& xhat, int p, int r);

/// Pseudo-random covers (n <= 64): random density, repair of uncovered rows,
/// and for every second sample a random pruning down to a minimal cover.
std::vector<std::uint64_t> sample_covers(const Circulant& c, std::size_t count, std::uint64_t seed);

struct VerifyReport {
  bool valid = false;
  std::int64_t min = 0;
  std::uint64_t argmin = 0;
  std::optional<bool> facet;  // nullopt: not decided (sampled check)
  std::size_t tight_count = 0;
};

/// Exhaustive report; facet is decided only for valid inequalities.
VerifyReport verify_exact(const CoverSet& covers, const Ineq& q);

/// Report over sampled covers; facet stays undecided.
VerifyReport verify_sampled(const std::vector<std::uint64_t>& samples, const Ineq& q);

/// "0101..." with character i-1 holding x_i.
std::string mask_to_string(std::uint64_t mask, int n);

RatVec mask_to_point(std::uint64_t mask, int n);

}  // namespace circov

#endif  // CIRCOV_ORACLE_HPP_
