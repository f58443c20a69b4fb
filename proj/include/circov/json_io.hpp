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

#ifndef CIRCOV_JSON_IO_HPP_
#define CIRCOV_JSON_IO_HPP_

// JSON encodings of the public records. Objects keep insertion order so a
// record serializes to the same bytes on every run.

#include <json.hpp>
#include <optional>
#include <vector>

#include "circov/circulant.hpp"
#include "circov/inequality.hpp"
#include "circov/minor.hpp"
#include "circov/oracle.hpp"
#include "circov/rational.hpp"
#include "circov/separation.hpp"
#include "circov/vertex.hpp"

namespace circov::io {

using Json = nlohmann::ordered_json;

Json json_of(const Rat& q);
Json json_of(const IndexSet& s);
Json json_of(const BinMatrix& m);
Json json_of(const MinorSpec& spec);
Json json_of(const Ineq& q);
Json json_of(const FracVertex& v);
/// {"violated": bool, "ineq", "W", "p", "r", "violation"}; only the flag
/// when nothing was found.
Json json_of(const std::optional<SepResult>& result);
/// {"valid", "min", "argmin", "facet": bool | "unverified", "tight_count"}.
Json json_of(const VerifyReport& report, int n);

/// Accepts "p/q" strings and plain integers. Throws InputError.
Rat rat_from_json(const Json& j);
/// An Ineq record; n is the expected length.
Ineq ineq_from_json(const Json& j, int n);
/// A JSON array of n rationals.
RatVec point_from_json(const Json& j, int n);
/// A JSON array of index arrays, or a single flat index array.
std::vector<std::vector<int>> index_lists_from_json(const Json& j);

const char* kind_name(IneqKind kind);

}  // namespace circov::io

#endif  // CIRCOV_JSON_IO_HPP_
