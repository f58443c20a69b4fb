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

#include "circov/vertex.hpp"

#include <numeric>

#include "circov/error.hpp"
#include "circov/linalg.hpp"

namespace circov {

std::optional<FracVertex> allones_vertex(const Circulant& c) {
  if (std::gcd(c.n(), c.k()) != 1) return std::nullopt;
  return FracVertex{RatVec::Constant(c.n(), Rat(1, c.k())), VertexKind::kAllOnes, std::nullopt};
}

std::optional<FracVertex> minor_vertex(const MinorSpec& spec) {
  if (std::gcd(spec.n_prime, spec.k_prime) != 1) return std::nullopt;
  RatVec x = RatVec::Constant(spec.base.n(), Rat(1, spec.k_prime));
  for (int j : spec.N) x[j - 1] = Rat(0);
  return FracVertex{std::move(x), VertexKind::kMinor, spec};
}

namespace {

Rat row_value(const Circulant& c, const RatVec& x, int i) {
  Rat acc;
  for (int t = 0; t < c.k(); ++t) acc += x[wrap(i + t, c.n()) - 1];
  return acc;
}

}  // namespace

std::vector<RatVec> tight_normals(const Circulant& c, const RatVec& x) {
  const int n = c.n();
  if (x.size() != n) throw InputError("tight_normals: point length differs from n");
  std::vector<RatVec> out;
  for (int i = 1; i <= n; ++i) {
    if (x[i - 1] == Rat(0)) {
      RatVec e = RatVec::Zero(n);
      e[i - 1] = Rat(1);
      out.push_back(std::move(e));
    } else if (x[i - 1] == Rat(1)) {
      RatVec e = RatVec::Zero(n);
      e[i - 1] = Rat(-1);
      out.push_back(std::move(e));
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (row_value(c, x, i) == Rat(1)) {
      RatVec row = RatVec::Zero(n);
      for (int j : row_support(c, i)) row[j - 1] = Rat(1);
      out.push_back(std::move(row));
    }
  }
  return out;
}

bool verify_vertex(const Circulant& c, const RatVec& x) {
  if (x.size() != c.n()) return false;
  for (const Rat& v : x) {
    if (v < Rat(0) || v > Rat(1)) return false;
  }
  for (int i = 1; i <= c.n(); ++i) {
    if (row_value(c, x, i) < Rat(1)) return false;
  }
  const std::vector<RatVec> normals = tight_normals(c, x);
  return rank_exact(normals) == c.n();
}

}  // namespace circov
