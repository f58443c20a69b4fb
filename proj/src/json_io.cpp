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

#include "circov/json_io.hpp"

#include <string>

#include "circov/error.hpp"

namespace circov::io {

Json json_of(const Rat& q) { return q.str(); }

Json json_of(const IndexSet& s) { return Json(s.members()); }

Json json_of(const BinMatrix& m) {
  Json rows = Json::array();
  for (const Bitset& row : m.rows) {
    std::string text(static_cast<std::size_t>(m.n_cols), '0');
    for (int c = 0; c < m.n_cols; ++c) {
      if (row.test(c)) text[c] = '1';
    }
    rows.push_back(text);
  }
  Json out;
  out["n_cols"] = m.n_cols;
  out["col_labels"] = m.col_labels;
  out["rows"] = std::move(rows);
  return out;
}

Json json_of(const MinorSpec& spec) {
  Json out;
  out["base"] = Json{{"n", spec.base.n()}, {"k", spec.base.k()}};
  out["N"] = json_of(spec.N);
  out["W"] = json_of(spec.W);
  out["d"] = spec.d;
  out["n1"] = spec.n1;
  out["n2"] = spec.n2;
  out["n3"] = spec.n3;
  out["n_prime"] = spec.n_prime;
  out["k_prime"] = spec.k_prime;
  return out;
}

const char* kind_name(IneqKind kind) {
  switch (kind) {
    case IneqKind::kBoolean: return "boolean";
    case IneqKind::kRank: return "rank";
    case IneqKind::kRMinor: return "rminor";
  }
  return "boolean";
}

Json json_of(const Ineq& q) {
  Json out;
  out["coeffs"] = std::vector<std::int64_t>(q.coeffs().begin(), q.coeffs().end());
  out["rhs"] = q.rhs();
  out["sense"] = ">=";
  out["origin"] = Json{{"kind", kind_name(q.origin().kind)},
                       {"W", json_of(q.origin().W)},
                       {"r", q.origin().r}};
  return out;
}

Json json_of(const FracVertex& v) {
  Json point = Json::array();
  for (const Rat& x : v.point) point.push_back(x.str());
  Json out;
  out["point"] = std::move(point);
  out["provenance"] = v.provenance == VertexKind::kAllOnes ? "allones" : "minor";
  if (v.spec) out["spec"] = json_of(*v.spec);
  return out;
}

Json json_of(const std::optional<SepResult>& result) {
  Json out;
  out["violated"] = result.has_value();
  if (!result) return out;
  out["ineq"] = json_of(result->ineq);
  out["W"] = json_of(result->W);
  out["p"] = result->p;
  out["r"] = result->r;
  out["violation"] = json_of(result->violation);
  return out;
}

Json json_of(const VerifyReport& report, int n) {
  Json out;
  out["valid"] = report.valid;
  out["min"] = report.min;
  out["argmin"] = mask_to_string(report.argmin, n);
  if (report.facet) {
    out["facet"] = *report.facet;
  } else {
    out["facet"] = "unverified";
  }
  out["tight_count"] = report.tight_count;
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw InputError("expected a rational string, got " + j.dump());
}

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be a JSON array");
  std::vector<int> out;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

Ineq ineq_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("rhs")) {
    throw InputError("inequality record needs \"coeffs\" and \"rhs\"");
  }
  if (j.contains("sense") && j.at("sense") != ">=") throw InputError("only \">=\" inequalities are supported");
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != n) {
    throw InputError("inequality has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                     std::to_string(n));
  }
  IntVec a(n);
  for (int i = 0; i < n; ++i) {
    if (!coeffs[i].is_number_integer()) throw InputError("coefficients must be integers");
    a[i] = coeffs[i].get<std::int64_t>();
  }
  if (!j.at("rhs").is_number_integer()) throw InputError("rhs must be an integer");
  IneqOrigin origin;
  if (j.contains("origin")) {
    const Json& o = j.at("origin");
    const std::string kind = o.value("kind", "boolean");
    if (kind == "rank") {
      origin.kind = IneqKind::kRank;
    } else if (kind == "rminor") {
      origin.kind = IneqKind::kRMinor;
    } else if (kind != "boolean") {
      throw InputError("unknown inequality origin '" + kind + "'");
    }
    if (o.contains("W")) origin.W = IndexSet(int_list(o.at("W"), "origin.W"));
    origin.r = o.value("r", 0);
  }
  return Ineq(std::move(a), j.at("rhs").get<std::int64_t>(), std::move(origin));
}

RatVec point_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw InputError("point must be a JSON array of " + std::to_string(n) + " rationals");
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = rat_from_json(j[i]);
  return x;
}

std::vector<std::vector<int>> index_lists_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("index file must hold a JSON array");
  if (j.empty() || j.front().is_number_integer()) return {int_list(j, "index set")};
  std::vector<std::vector<int>> out;
  for (const Json& e : j) out.push_back(int_list(e, "index set"));
  return out;
}

}  // namespace circov::io
