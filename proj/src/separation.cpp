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

#include "circov/separation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <tuple>

#include "circov/error.hpp"
#include "circov/minor.hpp"

namespace circov {

namespace {

// The digraph has a layer for every p in 1..k-1 (p = k-1 collects |W|
// divisible by k-1); the violation threshold alpha needs p <= k-2.
void check_layer(int k, int p) {
  if (p < 1 || p > k - 1) {
    throw InputError("separation: p = " + std::to_string(p) + " outside 1..k-1");
  }
}

void check_level(int k, int r) {
  if (r < 1 || r > k - 2) {
    throw InputError("separation: r = " + std::to_string(r) + " outside 1..k-2");
  }
}

void check_config(const Circulant& c, const SepConfig& cfg) {
  if (cfg.p < 1 || cfg.p > c.k() - 2) {
    throw InputError("separation: p = " + std::to_string(cfg.p) + " outside 1..k-2");
  }
  check_level(c.k(), cfg.r);
}

int next_layer(int layer, int k) { return layer % (k - 1) + 1; }

}  // namespace

int SepDigraph::find(const SepNode& v) const {
  const auto it = ids_.find({v.layer, v.index});
  return it == ids_.end() ? -1 : it->second;
}

SepDigraph build_K(const Circulant& c, int p) {
  const int n = c.n();
  const int k = c.k();
  check_layer(k, p);

  // Reachability from v_1^1, discovering arcs as (tail, head) node pairs.
  std::map<std::pair<int, int>, bool> entered;  // (layer, index) -> has an in-arc
  std::vector<std::pair<SepNode, SepNode>> raw;
  std::deque<SepNode> queue{{1, 1}};
  entered[{1, 1}] = false;
  while (!queue.empty()) {
    const SepNode v = queue.front();
    queue.pop_front();
    const int layer = next_layer(v.layer, k);
    for (int l = v.index + k + 1; l <= n; l += k) {
      const SepNode head{layer, l};
      raw.emplace_back(v, head);
      auto [it, fresh] = entered.try_emplace({layer, l}, true);
      if (fresh) queue.push_back(head);
    }
  }
  for (const auto& [key, has_in] : entered) {
    const auto [layer, i] = key;
    const bool is_source = layer == 1 && i == 1;
    if (layer != p || !(has_in || is_source)) continue;
    if (i <= n - k && (n - i) % k == 0) raw.emplace_back(SepNode{layer, i}, kSinkNode);
  }

  SepDigraph d;
  d.n_ = n;
  d.k_ = k;
  d.p_ = p;
  for (const auto& [key, has_in] : entered) d.nodes_.push_back({key.first, key.second});
  std::sort(d.nodes_.begin(), d.nodes_.end(), [](const SepNode& a, const SepNode& b) {
    return std::tie(a.index, a.layer) < std::tie(b.index, b.layer);
  });
  d.nodes_.push_back(kSinkNode);
  for (std::size_t id = 0; id < d.nodes_.size(); ++id) {
    d.ids_[{d.nodes_[id].layer, d.nodes_[id].index}] = static_cast<int>(id);
  }
  std::vector<std::pair<int, int>> ends;
  for (const auto& [tail, head] : raw) ends.emplace_back(d.find(tail), d.find(head));
  std::sort(ends.begin(), ends.end());
  d.out_.assign(d.nodes_.size(), {});
  for (const auto& [tail, head] : ends) {
    d.out_[tail].push_back(static_cast<int>(d.arcs_.size()));
    d.arcs_.push_back({tail, head, Rat(0)});
  }
  return d;
}

SepDigraph arc_costs(SepDigraph d, const RatVec& xhat, const SepConfig& cfg) {
  if (xhat.size() != d.n()) throw InputError("arc_costs: point length differs from n");
  check_layer(d.k(), cfg.p);
  check_level(d.k(), cfg.r);
  if (cfg.p != d.p()) throw InputError("arc_costs: configuration p differs from the digraph");
  const Rat beta(cfg.r, static_cast<long>(d.k()) * (d.k() - 1));
  for (auto& arc : d.arcs_) {
    const SepNode& head = d.nodes_[arc.head];
    arc.cost = (head.is_sink() ? xhat[0] : xhat[head.index - 1]) - beta;
  }
  d.costed_ = true;
  return d;
}

std::optional<DagPath> shortest_path_dag(const SepDigraph& d) {
  // Distances to the sink in reverse topological order, then a forward walk
  // that always takes the sink or the smallest column among tight arcs. This
  // yields the lexicographically smallest W among all shortest paths.
  const int count = static_cast<int>(d.nodes().size());
  std::vector<std::optional<Rat>> to_sink(static_cast<std::size_t>(count));
  to_sink[d.sink()] = Rat(0);
  for (int u = count - 2; u >= 0; --u) {
    for (int a : d.out(u)) {
      const auto& arc = d.arcs()[a];
      if (!to_sink[arc.head]) continue;
      Rat candidate = arc.cost + *to_sink[arc.head];
      if (!to_sink[u] || candidate < *to_sink[u]) to_sink[u] = std::move(candidate);
    }
  }
  if (!to_sink[d.source()]) return std::nullopt;
  DagPath out{*to_sink[d.source()], {d.nodes()[d.source()]}};
  for (int u = d.source(); u != d.sink();) {
    int next = -1;
    for (int a : d.out(u)) {
      const auto& arc = d.arcs()[a];
      if (!to_sink[arc.head] || arc.cost + *to_sink[arc.head] != *to_sink[u]) continue;
      if (next < 0 || arc.head == d.sink() || (next != d.sink() && arc.head < next)) next = arc.head;
    }
    u = next;
    out.nodes.push_back(d.nodes()[u]);
  }
  return out;
}

IndexSet path_to_w(const SepDigraph& d, const SepPath& path) {
  if (path.size() < 2 || !(path.front() == SepNode{1, 1}) || !path.back().is_sink()) {
    throw InputError("path_to_w: not a v_1^1 -> t path");
  }
  std::vector<int> w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int tail = d.find(path[i]);
    const int head = d.find(path[i + 1]);
    if (tail < 0 || head < 0 || path[i].is_sink()) throw InputError("path_to_w: unknown node");
    const auto& arcs = d.out(tail);
    const bool linked = std::any_of(arcs.begin(), arcs.end(), [&](int a) { return d.arcs()[a].head == head; });
    if (!linked) throw InputError("path_to_w: consecutive nodes are not joined by an arc");
    w.push_back(path[i].index);
  }
  return IndexSet(std::move(w));
}

SepPath w_to_path(const Circulant& c, int p, const IndexSet& w) {
  check_layer(c.k(), p);
  if (!w.contains(1) || !validate_w_d1(c, w) ||
      static_cast<int>(w.size()) % (c.k() - 1) != p % (c.k() - 1)) {
    throw InputError("w_to_path: W is not in the family W(1, p) with 1 in W");
  }
  SepPath path;
  int j = 0;
  for (int i : w) {
    path.push_back({j % (c.k() - 1) + 1, i});
    ++j;
  }
  path.push_back(kSinkNode);
  return path;
}

Separator::Separator(const Circulant& c) : c_(c) {}

const SepDigraph& Separator::digraph(int p) {
  auto it = digraphs_.find(p);
  if (it == digraphs_.end()) it = digraphs_.emplace(p, build_K(c_, p)).first;
  return it->second;
}

std::optional<SepResult> Separator::separate_rotation(const RatVec& xhat, int j, const SepConfig& cfg) {
  const int n = c_.n();
  check_config(c_, cfg);
  if (j < 1 || j > n) throw InputError("separate_rotation: j outside 1..n");
  if (xhat.size() != n) throw InputError("separate_rotation: point length differs from n");

  // Rotated coordinates put column j at position 1.
  RatVec rotated(n);
  for (int i = 1; i <= n; ++i) rotated[i - 1] = xhat[wrap(i + j - 1, n) - 1];

  const auto path = shortest_path_dag(arc_costs(digraph(cfg.p), rotated, cfg));
  if (!path) return std::nullopt;
  const Rat threshold = alpha_beta(n, c_.k(), 1, cfg.p, cfg.r).alpha - Rat(cfg.r) * rotated.sum();
  if (!(path->length < threshold)) return std::nullopt;

  std::vector<int> members;
  for (std::size_t i = 0; i + 1 < path->nodes.size(); ++i) members.push_back(wrap(path->nodes[i].index + j - 1, n));
  IndexSet w(std::move(members));
  const auto contracted = n_from_w(c_, w);
  const auto spec = contracted ? minor_from_N(c_, *contracted) : std::nullopt;
  if (!spec) throw std::logic_error("separation produced a set W that defines no minor");

  Ineq ineq = rminor_inequality(*spec, cfg.r);
  const Rat violation = threshold - path->length;
  if (ineq.violation(xhat) != violation) {
    throw std::logic_error("separation path length disagrees with the inequality violation");
  }
  return SepResult{std::move(ineq), std::move(w), cfg.p, cfg.r, violation};
}

std::optional<SepResult> Separator::separate(const RatVec& xhat) {
  if (xhat.size() != c_.n()) throw InputError("separate: point length differs from n");
  for (const Rat& v : xhat) {
    if (v < Rat(0) || v > Rat(1)) throw InputError("separate: point outside [0,1]^n");
  }
  std::optional<SepResult> best;
  for (int r = 1; r <= c_.k() - 2; ++r) {
    for (int p = 1; p <= c_.k() - 2; ++p) {
      for (int j = 1; j <= c_.n(); ++j) {
        auto found = separate_rotation(xhat, j, SepConfig{p, r});
        if (!found) continue;
        const bool better = !best || found->violation > best->violation ||
                            (found->violation == best->violation && found->r == best->r &&
                             found->p == best->p && found->W < best->W);
        if (better) best = std::move(found);
      }
    }
  }
  return best;
}

std::optional<SepResult> separate_rotation(const Circulant& c, const RatVec& xhat, int j,
                                           const SepConfig& cfg) {
  return Separator(c).separate_rotation(xhat, j, cfg);
}

std::optional<SepResult> separate(const Circulant& c, const RatVec& xhat) {
  return Separator(c).separate(xhat);
}

}  // namespace circov
