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

#ifndef CIRCOV_RATIONAL_HPP_
#define CIRCOV_RATIONAL_HPP_

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace circov {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. This is the only numeric type used by the core routines.
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::integral T, std::integral U>
  Rat(T num, U den) : Rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const BigInt& value) : value_(value) {}

  /// Parses "p/q" or "p" (optional leading minus). Throws InputError.
  static Rat parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", with "/q" omitted when q == 1.
  std::string str() const;

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) {
    Rat out;
    out.value_ = -a.value_;
    return out;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& q) { return os << q.str(); }

 private:
  mpq_class value_;
};

/// Smallest integer >= q.
BigInt rat_ceil(const Rat& q);
/// Largest integer <= q.
BigInt rat_floor(const Rat& q);

/// Narrowing conversion; throws InputError when the value does not fit.
std::int64_t to_int64(const BigInt& z);

inline Rat abs(const Rat& q) { return q.sign() < 0 ? -q : q; }

}  // namespace circov

namespace Eigen {

template <>
struct NumTraits<circov::Rat> : GenericNumTraits<circov::Rat> {
  using Real = circov::Rat;
  using NonInteger = circov::Rat;
  using Nested = circov::Rat;
  using Literal = circov::Rat;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  // Exact arithmetic: no rounding tolerance anywhere.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace circov {

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Exact inner product of an integer coefficient vector with a rational point.
Rat dot(const IntVec& a, const RatVec& x);

}  // namespace circov

#endif  // CIRCOV_RATIONAL_HPP_
