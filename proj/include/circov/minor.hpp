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

#ifndef CIRCOV_MINOR_HPP_
#define CIRCOV_MINOR_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "circov/circulant.hpp"

namespace circov {

enum class ArcKind { kShort, kLong };

struct MinorArc {
  int tail;
  int head;
  ArcKind kind;
};

/// G(C_n^k): node i has the short arc (i, i+k) and the long arc (i, i+k+1).
class CirculantDigraph {
 public:
  explicit CirculantDigraph(const Circulant& c);

  int n() const { return n_; }
  const std::vector<MinorArc>& arcs() const { return arcs_; }
  /// The two out-arcs of node i, short first.
  std::span<const MinorArc> out_arcs(int i) const;

 private:
  int n_;
  std::vector<MinorArc> arcs_;
};

inline CirculantDigraph build_G(const Circulant& c) { return CirculantDigraph(c); }

/// A contraction set N for which C/N is isomorphic to C_{n'}^{k'}, with the
/// parameters of its dicycle decomposition in G(C).
struct MinorSpec {
  Circulant base;
  IndexSet N;
  IndexSet W;  // {i in N : i-k-1 in N}
  int d = 0;   // number of dicycles
  int n1 = 0;  // turns per dicycle
  int n2 = 0;  // short arcs per dicycle
  int n3 = 0;  // long arcs per dicycle
  int n_prime = 0;
  int k_prime = 0;
};

/// Decomposes N into vertex-disjoint simple dicycles of G(C) with common
/// parameters (backtracking over successor choices). nullopt when N does not
/// define a circulant minor; InputError unless 1 <= |N| <= n-2.
std::optional<MinorSpec> minor_from_N(const Circulant& c, const IndexSet& contracted);

/// {i in N : i-k-1 in N}.
IndexSet w_from_n(const Circulant& c, const IndexSet& contracted);

/// Cyclic gap test for a set W that defines a minor with d = n1 = 1: every
/// gap is congruent to 1 mod k and at least k+1.
bool validate_w_d1(const Circulant& c, const IndexSet& w);

/// Rebuilds N for a d = n1 = 1 minor from its W by walking short arcs between
/// consecutive members of W and closing each gap with a long arc.
std::optional<IndexSet> n_from_w(const Circulant& c, const IndexSet& w);

struct EnumLimits {
  std::size_t max_count = std::numeric_limits<std::size_t>::max();
  std::size_t max_size = std::numeric_limits<std::size_t>::max();
};

struct WFamily {
  std::vector<IndexSet> sets;  // lexicographic order
  bool truncated = false;
};

/// All W with validate_w_d1 and |W| = p (mod k-1), for 1 <= p <= k-1
/// (p = k-1 selects the sets with |W| divisible by k-1).
WFamily enumerate_w1p(const Circulant& c, int p, const EnumLimits& limits = {});

/// All W with validate_w_d1, regardless of |W| mod (k-1).
WFamily enumerate_w_d1(const Circulant& c, const EnumLimits& limits = {});

}  // namespace circov

#endif  // CIRCOV_MINOR_HPP_
