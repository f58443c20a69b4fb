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

#include "circov/minor.hpp"

#include <string>

#include "circov/error.hpp"

namespace circov {

CirculantDigraph::CirculantDigraph(const Circulant& c) : n_(c.n()) {
  arcs_.reserve(2 * static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    arcs_.push_back({i, wrap(i + c.k(), n_), ArcKind::kShort});
    arcs_.push_back({i, wrap(i + c.k() + 1, n_), ArcKind::kLong});
  }
}

std::span<const MinorArc> CirculantDigraph::out_arcs(int i) const {
  if (i < 1 || i > n_) throw InputError("node " + std::to_string(i) + " out of range");
  return std::span<const MinorArc>(arcs_).subspan(2 * static_cast<std::size_t>(i - 1), 2);
}

namespace {

struct CycleSearch {
  const Circulant& c;
  const std::vector<int>& nodes;
  std::vector<int> slot;        // residue -> index in nodes, or -1
  std::vector<int> successor;   // index -> index
  std::vector<bool> taken;      // index already chosen as a successor
  std::vector<ArcKind> kind;    // arc used out of each index
  std::optional<MinorSpec> found;

  bool evaluate() {
    const int n = c.n();
    const int k = c.k();
    const std::size_t m = nodes.size();
    std::vector<bool> seen(m, false);
    int cycles = 0;
    int n1 = -1, n2 = -1, n3 = -1;
    for (std::size_t start = 0; start < m; ++start) {
      if (seen[start]) continue;
      int shorts = 0, longs = 0;
      std::size_t v = start;
      while (!seen[v]) {
        seen[v] = true;
        (kind[v] == ArcKind::kShort ? shorts : longs) += 1;
        v = static_cast<std::size_t>(successor[v]);
      }
      const long long span = static_cast<long long>(shorts) * k + static_cast<long long>(longs) * (k + 1);
      if (span % n != 0) return false;
      const int turns = static_cast<int>(span / n);
      if (cycles == 0) {
        n1 = turns;
        n2 = shorts;
        n3 = longs;
      } else if (turns != n1 || shorts != n2 || longs != n3) {
        return false;
      }
      ++cycles;
    }
    const int n_prime = n - cycles * (n2 + n3);
    const int k_prime = k - cycles * n1;
    if (n_prime < 1 || k_prime < 1) return false;

    MinorSpec spec{c, IndexSet(nodes), IndexSet{}, cycles, n1, n2, n3, n_prime, k_prime};
    spec.W = w_from_n(c, spec.N);
    found = std::move(spec);
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == nodes.size()) return evaluate();
    const int node = nodes[pos];
    for (ArcKind arc : {ArcKind::kShort, ArcKind::kLong}) {
      const int head = wrap(node + c.k() + (arc == ArcKind::kLong ? 1 : 0), c.n());
      const int target = slot[head];
      if (target < 0 || taken[target]) continue;
      taken[target] = true;
      successor[pos] = target;
      kind[pos] = arc;
      if (assign(pos + 1)) return true;
      taken[target] = false;
    }
    return false;
  }
};

bool valid_gap(long long gap, int k) { return gap >= k + 1 && gap % k == 1; }

}  // namespace

std::optional<MinorSpec> minor_from_N(const Circulant& c, const IndexSet& contracted) {
  const int n = c.n();
  IndexSet::checked(contracted.members(), n);
  if (contracted.empty() || static_cast<int>(contracted.size()) > n - 2) {
    throw InputError("minor_from_N: |N| = " + std::to_string(contracted.size()) +
                     " outside 1..n-2");
  }
  const std::vector<int>& nodes = contracted.members();
  CycleSearch search{c, nodes, std::vector<int>(n + 1, -1), std::vector<int>(nodes.size(), -1),
                     std::vector<bool>(nodes.size(), false),
                     std::vector<ArcKind>(nodes.size(), ArcKind::kShort), std::nullopt};
  for (std::size_t i = 0; i < nodes.size(); ++i) search.slot[nodes[i]] = static_cast<int>(i);

  // Every node needs an in-neighbour and an out-neighbour inside N.
  for (int v : nodes) {
    const bool out = contracted.contains(wrap(v + c.k(), n)) || contracted.contains(wrap(v + c.k() + 1, n));
    const bool in = contracted.contains(wrap(v - c.k(), n)) || contracted.contains(wrap(v - c.k() - 1, n));
    if (!out || !in) return std::nullopt;
  }
  if (!search.assign(0)) return std::nullopt;
  return search.found;
}

IndexSet w_from_n(const Circulant& c, const IndexSet& contracted) {
  std::vector<int> out;
  for (int i : contracted) {
    if (contracted.contains(wrap(i - c.k() - 1, c.n()))) out.push_back(i);
  }
  return IndexSet(std::move(out));
}

bool validate_w_d1(const Circulant& c, const IndexSet& w) {
  if (w.empty()) return false;
  const std::vector<int>& m = w.members();
  if (m.front() < 1 || m.back() > c.n()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const long long gap = i + 1 < m.size() ? m[i + 1] - m[i] : m.front() + c.n() - m[i];
    if (!valid_gap(gap, c.k())) return false;
  }
  return true;
}

std::optional<IndexSet> n_from_w(const Circulant& c, const IndexSet& w) {
  if (!validate_w_d1(c, w)) return std::nullopt;
  const int n = c.n();
  const int k = c.k();
  const std::vector<int>& m = w.members();
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const long long gap = i + 1 < m.size() ? m[i + 1] - m[i] : m.front() + n - m[i];
    // gap = s*k + (k+1): nodes w, w+k, ..., w+s*k, then the long arc.
    const long long shorts = (gap - (k + 1)) / k;
    for (long long t = 0; t <= shorts; ++t) out.push_back(wrap(m[i] + t * k, n));
  }
  return IndexSet(std::move(out));
}

namespace {

class WEnumerator {
 public:
  WEnumerator(const Circulant& c, int residue, const EnumLimits& limits)
      : c_(c), residue_(residue), limits_(limits) {}

  WFamily run() {
    for (int anchor = 1; anchor <= c_.n() && !stopped_; ++anchor) {
      members_.assign(1, anchor);
      extend(anchor);
    }
    return std::move(family_);
  }

 private:
  void extend(int anchor) {
    const int n = c_.n();
    const int k = c_.k();
    const int last = members_.back();
    if (valid_gap(static_cast<long long>(anchor) + n - last, k) && accepts(members_.size())) {
      if (family_.sets.size() == limits_.max_count) {
        family_.truncated = true;
        stopped_ = true;
        return;
      }
      family_.sets.emplace_back(members_);
    }
    // A further member must leave room for a closing gap of at least k+1.
    const int bound = std::min(n, anchor + n - (k + 1));
    for (int next = last + k + 1; next <= bound && !stopped_; next += k) {
      if (members_.size() >= limits_.max_size) {
        family_.truncated = true;
        return;
      }
      members_.push_back(next);
      extend(anchor);
      members_.pop_back();
    }
  }

  bool accepts(std::size_t size) const {
    return residue_ < 0 || static_cast<int>(size % (c_.k() - 1)) == residue_ % (c_.k() - 1);
  }

  const Circulant& c_;
  int residue_;  // -1: any
  EnumLimits limits_;
  WFamily family_;
  std::vector<int> members_;
  bool stopped_ = false;
};

}  // namespace

WFamily enumerate_w1p(const Circulant& c, int p, const EnumLimits& limits) {
  if (p < 1 || p > c.k() - 1) {
    throw InputError("enumerate_w1p: p = " + std::to_string(p) + " outside 1..k-1");
  }
  return WEnumerator(c, p, limits).run();
}

WFamily enumerate_w_d1(const Circulant& c, const EnumLimits& limits) {
  return WEnumerator(c, -1, limits).run();
}

}  // namespace circov
