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

#ifndef CIRCOV_SEPARATION_HPP_
#define CIRCOV_SEPARATION_HPP_

// Exact separation of generalized r-minor inequalities over minors with
// d = n1 = 1. For a fixed residue p = |W| mod (k-1) the sets W containing 1
// are in bijection with source-sink paths of a layered acyclic digraph, so
// a most negative path (costs x_i - beta) decides violation.

#include <map>
#include <optional>
#include <vector>

#include "circov/circulant.hpp"
#include "circov/inequality.hpp"
#include "circov/rational.hpp"

namespace circov {

struct SepConfig {
  int p = 1;  // residue of n3 mod (k-1); 1 <= p <= k-1, and <= k-2 to separate
  int r = 1;  // inequality level, 1 <= r <= k-2
};

/// Node v_i^j of the separation digraph; the sink t is {0, 0}.
struct SepNode {
  int layer = 0;
  int index = 0;

  bool is_sink() const { return layer == 0; }
  friend bool operator==(const SepNode&, const SepNode&) = default;
};

inline constexpr SepNode kSinkNode{0, 0};

using SepPath = std::vector<SepNode>;

/// Layered digraph K_n^k(p). Only nodes reachable from v_1^1 are stored,
/// in topological order (column index, then layer), with the sink last.
class SepDigraph {
 public:
  struct Arc {
    int tail;
    int head;
    Rat cost;
  };

  int n() const { return n_; }
  int k() const { return k_; }
  int p() const { return p_; }

  const std::vector<SepNode>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Arc indices leaving node id, ordered by head.
  const std::vector<int>& out(int id) const { return out_[id]; }
  int source() const { return 0; }
  int sink() const { return static_cast<int>(nodes_.size()) - 1; }
  /// Node id, or -1 when the node was not materialized.
  int find(const SepNode& v) const;
  bool costed() const { return costed_; }

 private:
  friend SepDigraph build_K(const Circulant& c, int p);
  friend SepDigraph arc_costs(SepDigraph d, const RatVec& xhat, const SepConfig& cfg);

  int n_ = 0;
  int k_ = 0;
  int p_ = 0;
  std::vector<SepNode> nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::map<std::pair<int, int>, int> ids_;
  bool costed_ = false;
};

/// Builds K_n^k(p), 1 <= p <= k-1, from v_1^1. Layers advance cyclically in {1, ..., k-1}.
/// The source itself carries a sink arc when p = 1 (the singleton W = {1}).
SepDigraph build_K(const Circulant& c, int p);

/// Arc into v_i costs xhat_i - beta, arc into t costs xhat_1 - beta, with
/// beta = r / (k (k-1)).
SepDigraph arc_costs(SepDigraph d, const RatVec& xhat, const SepConfig& cfg);

struct DagPath {
  Rat length;
  SepPath nodes;  // v_1^1, ..., t
};

/// Exact minimum-cost v_1^1 -> t path by dynamic programming over the
/// topological order. Among shortest paths the one whose column sequence is
/// lexicographically smallest wins (stopping early beats extending).
std::optional<DagPath> shortest_path_dag(const SepDigraph& d);

/// Column indices visited by a v_1^1 -> t path of d.
IndexSet path_to_w(const SepDigraph& d, const SepPath& path);

/// The path of a set W with 1 in W and |W| = p (mod k-1): the j-th smallest
/// member sits in layer ((j-1) mod (k-1)) + 1.
SepPath w_to_path(const Circulant& c, int p, const IndexSet& w);

struct SepResult {
  Ineq ineq;
  IndexSet W;
  int p = 0;
  int r = 0;
  Rat violation;  // rhs - lhs(xhat) > 0
};

/// Caches one digraph per p and re-costs it for every rotation and r.
class Separator {
 public:
  explicit Separator(const Circulant& c);

  const Circulant& circulant() const { return c_; }
  const SepDigraph& digraph(int p);

  /// Looks for a violated inequality whose W contains column j.
  std::optional<SepResult> separate_rotation(const RatVec& xhat, int j, const SepConfig& cfg);

  /// Most violated inequality over all j, p, r; ties go to the smallest r,
  /// then p, then the lexicographically smallest W.
  std::optional<SepResult> separate(const RatVec& xhat);

 private:
  Circulant c_;
  std::map<int, SepDigraph> digraphs_;
};

std::optional<SepResult> separate_rotation(const Circulant& c, const RatVec& xhat, int j,
                                           const SepConfig& cfg);
std::optional<SepResult> separate(const Circulant& c, const RatVec& xhat);

}  // namespace circov

#endif  // CIRCOV_SEPARATION_HPP_
