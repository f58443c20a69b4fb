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

#include "circov/rational.hpp"

#include <limits>

#include "circov/error.hpp"

namespace circov {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.value_ == 0) throw InputError("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw InputError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InputError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  return Rat(num, den);
}

std::string Rat::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt rat_ceil(const Rat& q) {
  BigInt out;
  const BigInt num = q.num();
  const BigInt den = q.den();
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigInt rat_floor(const Rat& q) {
  BigInt out;
  const BigInt num = q.num();
  const BigInt den = q.den();
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw InputError("integer " + z.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

Rat dot(const IntVec& a, const RatVec& x) {
  if (a.size() != x.size()) throw InputError("dot: length mismatch");
  Rat acc;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != 0) acc += Rat(a[i]) * x[i];
  }
  return acc;
}

}  // namespace circov
