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

#ifndef CIRCOV_VERTEX_HPP_
#define CIRCOV_VERTEX_HPP_

#include <optional>
#include <vector>

#include "circov/circulant.hpp"
#include "circov/minor.hpp"
#include "circov/rational.hpp"

namespace circov {

enum class VertexKind { kAllOnes, kMinor };

/// A fractional vertex of Q(C_n^k) = {x in [0,1]^n : C x >= 1}.
struct FracVertex {
  RatVec point;
  VertexKind provenance;
  std::optional<MinorSpec> spec;  // set for minor vertices
};

/// (1/k) 1 when gcd(n, k) = 1.
std::optional<FracVertex> allones_vertex(const Circulant& c);

/// 0 on N and 1/k' elsewhere, when gcd(n', k') = 1.
std::optional<FracVertex> minor_vertex(const MinorSpec& spec);

/// Normals of the boolean-system inequalities tight at x: e_i for x_i = 0,
/// -e_i for x_i = 1, and C^i for rows with C^i x = 1.
std::vector<RatVec> tight_normals(const Circulant& c, const RatVec& x);

/// x lies in Q(C) and the tight normals have full rank n.
bool verify_vertex(const Circulant& c, const RatVec& x);

}  // namespace circov

#endif  // CIRCOV_VERTEX_HPP_
