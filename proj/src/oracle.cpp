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

#include "circov/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "circov/error.hpp"
#include "circov/linalg.hpp"
#include "circov/minor.hpp"

namespace circov {

namespace {

void check_width(int n) {
  if (n > kMaxMaskWidth) {
    throw OracleRefusal("n = " + std::to_string(n) + " exceeds the 64-bit cover mask width");
  }
}

std::vector<std::uint64_t> row_masks(const Circulant& c) {
  check_width(c.n());
  std::vector<std::uint64_t> rows(c.n(), 0);
  for (int i = 1; i <= c.n(); ++i) {
    for (int j : row_support(c, i)) rows[i - 1] |= std::uint64_t{1} << (j - 1);
  }
  return rows;
}

// Assigns x_1, x_2, ... in order; a run of k zeros kills the branch, and the
// wrap-around rows are checked once the vector is complete.
class CoverSweep {
 public:
  CoverSweep(int n, int k, std::vector<std::uint64_t>& out) : n_(n), k_(k), out_(out) {}

  void run() { visit(0, 0, 0, -1); }

 private:
  void visit(int pos, std::uint64_t mask, int run, int lead) {
    if (pos == n_) {
      if (lead >= 0 && run + lead < k_) out_.push_back(mask);
      return;
    }
    if (run + 1 < k_) visit(pos + 1, mask, run + 1, lead);
    visit(pos + 1, mask | (std::uint64_t{1} << pos), 0, lead < 0 ? pos : lead);
  }

  int n_;
  int k_;
  std::vector<std::uint64_t>& out_;
};

}  // namespace

CoverSet enumerate_covers(const Circulant& c, int bound) {
  if (c.n() > bound) {
    throw OracleRefusal("cover enumeration refused: n = " + std::to_string(c.n()) +
                        " exceeds the bound " + std::to_string(bound));
  }
  check_width(c.n());
  CoverSet out{c.n(), {}};
  CoverSweep(c.n(), c.k(), out.covers).run();
  return out;
}

bool is_cover(const Circulant& c, std::uint64_t mask) {
  for (std::uint64_t row : row_masks(c)) {
    if ((row & mask) == 0) return false;
  }
  return true;
}

MaskEvaluator::MaskEvaluator(const IntVec& coeffs) {
  check_width(static_cast<int>(coeffs.size()));
  std::map<std::int64_t, std::uint64_t> by_value;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) by_value[coeffs[i]] |= std::uint64_t{1} << i;
  }
  groups_.assign(by_value.begin(), by_value.end());
}

std::int64_t MaskEvaluator::operator()(std::uint64_t mask) const {
  std::int64_t acc = 0;
  for (const auto& [value, cols] : groups_) acc += value * std::popcount(mask & cols);
  return acc;
}

CoverMin min_over_covers(const CoverSet& covers, const Ineq& q) {
  if (q.size() != covers.n) throw InputError("min_over_covers: inequality length differs from n");
  if (covers.covers.empty()) throw InputError("min_over_covers: no covers");
  const MaskEvaluator eval(q.coeffs());
  CoverMin best{eval(covers.covers.front()), covers.covers.front()};
  for (std::uint64_t mask : covers.covers) {
    const std::int64_t v = eval(mask);
    if (v < best.value) best = {v, mask};
  }
  return best;
}

CoverMin min_over_covers(const Circulant& c, const Ineq& q, int bound) {
  return min_over_covers(enumerate_covers(c, bound), q);
}

bool is_valid(const CoverSet& covers, const Ineq& q) { return min_over_covers(covers, q).value >= q.rhs(); }

bool is_valid(const Circulant& c, const Ineq& q, int bound) {
  return is_valid(enumerate_covers(c, bound), q);
}

CoverSet tight_covers(const CoverSet& covers, const Ineq& q) {
  if (q.size() != covers.n) throw InputError("tight_covers: inequality length differs from n");
  const MaskEvaluator eval(q.coeffs());
  CoverSet out{covers.n, {}};
  for (std::uint64_t mask : covers.covers) {
    if (eval(mask) == q.rhs()) out.covers.push_back(mask);
  }
  return out;
}

CoverSet tight_covers(const Circulant& c, const Ineq& q, int bound) {
  return tight_covers(enumerate_covers(c, bound), q);
}

RatVec mask_to_point(std::uint64_t mask, int n) {
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = Rat((mask >> i) & 1U);
  return x;
}

bool is_facet(const CoverSet& covers, const Ineq& q) {
  if (!is_valid(covers, q)) throw InputError("is_facet: inequality is not valid");
  const CoverSet tight = tight_covers(covers, q);
  if (tight.covers.empty()) return false;
  const int n = covers.n;
  const RatVec base = mask_to_point(tight.covers.front(), n);
  EchelonBasis<Rat> basis(n);
  for (std::size_t i = 1; i < tight.covers.size() && basis.rank() < n - 1; ++i) {
    basis.add(mask_to_point(tight.covers[i], n) - base);
  }
  return basis.rank() == n - 1;
}

bool is_facet(const Circulant& c, const Ineq& q, int bound) {
  return is_facet(enumerate_covers(c, bound), q);
}

std::optional<Rat> brute_force_separation(const Circulant& c, const RatVec& xhat, int p, int r) {
  if (xhat.size() != c.n()) throw InputError("brute_force_separation: point length differs from n");
  if (r < 1 || r > c.k() - 2) throw InputError("brute_force_separation: r outside 1..k-2");
  const Rat beta(r, static_cast<long>(c.k()) * (c.k() - 1));
  std::optional<Rat> best;
  for (const IndexSet& w : enumerate_w1p(c, p).sets) {
    if (!w.contains(1)) continue;
    Rat total;
    for (int i : w) total += xhat[i - 1] - beta;
    if (!best || total < *best) best = total;
  }
  return best;
}

std::vector<std::uint64_t> sample_covers(const Circulant& c, std::size_t count, std::uint64_t seed) {
  const int n = c.n();
  const int k = c.k();
  const std::vector<std::uint64_t> rows = row_masks(c);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::vector<int> order(n);
  for (std::size_t s = 0; s < count; ++s) {
    const std::uint64_t density = 1 + rng() % 64;  // out of 128
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if ((rng() & 127U) < density) mask |= std::uint64_t{1} << i;
    }
    const int offset = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    for (int t = 0; t < n; ++t) {
      const int i = (offset + t) % n;
      if ((rows[i] & mask) == 0) mask |= std::uint64_t{1} << ((i + rng() % k) % n);
    }
    if (s % 2 == 1) {
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int j : order) {
        if (((mask >> j) & 1U) == 0) continue;
        const std::uint64_t without = mask & ~(std::uint64_t{1} << j);
        bool still = true;
        // Rows containing column j+1 start at j+1-t for t < k.
        for (int t = 0; t < k && still; ++t) still = (rows[((j - t) % n + n) % n] & without) != 0;
        if (still) mask = without;
      }
    }
    out.push_back(mask);
  }
  return out;
}

VerifyReport verify_exact(const CoverSet& covers, const Ineq& q) {
  const CoverMin m = min_over_covers(covers, q);
  VerifyReport report;
  report.valid = m.value >= q.rhs();
  report.min = m.value;
  report.argmin = m.argmin;
  report.tight_count = tight_covers(covers, q).size();
  if (report.valid) report.facet = is_facet(covers, q);
  return report;
}

VerifyReport verify_sampled(const std::vector<std::uint64_t>& samples, const Ineq& q) {
  if (samples.empty()) throw InputError("verify_sampled: no samples");
  const MaskEvaluator eval(q.coeffs());
  VerifyReport report;
  report.min = eval(samples.front());
  report.argmin = samples.front();
  for (std::uint64_t mask : samples) {
    const std::int64_t v = eval(mask);
    if (v < report.min) {
      report.min = v;
      report.argmin = mask;
    }
    if (v == q.rhs()) ++report.tight_count;
  }
  report.valid = report.min >= q.rhs();
  return report;
}

std::string mask_to_string(std::uint64_t mask, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) out[i] = '1';
  }
  return out;
}

}  // namespace circov
