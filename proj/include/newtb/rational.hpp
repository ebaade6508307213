// Copyright 2026 The newtb Authors
//
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

#ifndef NEWTB_RATIONAL_HPP
#define NEWTB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "newtb/error.hpp"

namespace newtb {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar with a distinguished +infinity sentinel.
//
// Every valuation, slope and coordinate in the library is a Rational.
// Values are kept in lowest terms with positive denominator; +infinity
// is encoded as 1/0.  +infinity absorbs addition and dominates every
// comparison; it must never appear in a product with zero nor as a
// denominator, both of which raise an invariant error.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(const Int& n) : num_(n), den_(1) {} // NOLINT
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    NEWTB_REQUIRE(den_ != 0, "rational: zero denominator");
    normalize();
  }
  Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

  static Rational inf() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_inf() const { return den_ == 0; }
  bool is_zero() const { return den_ != 0 && num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }

  const Int& num() const { return num_; }
  const Int& den() const {
    NEWTB_CHECK(!is_inf(), "rational: denominator of +inf requested");
    return den_;
  }

  Rational operator-() const {
    NEWTB_CHECK(!is_inf(), "rational: negation of +inf");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational operator+(const Rational& o) const {
    if (is_inf() || o.is_inf()) return inf();
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    NEWTB_CHECK(!o.is_inf(), "rational: subtraction of +inf");
    if (is_inf()) return inf();
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    if (is_inf() || o.is_inf()) {
      const Rational& fin = is_inf() ? o : *this;
      NEWTB_CHECK(fin.is_inf() || fin.num_ > 0,
                  "rational: +inf multiplied by a non-positive value");
      return inf();
    }
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    NEWTB_CHECK(!is_inf() && !o.is_inf(), "rational: division involving +inf");
    NEWTB_REQUIRE(o.num_ != 0, "rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    if (is_inf()) return false;
    if (o.is_inf()) return true;
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // Canonical text form: "a/b", "a" when b == 1, "inf" for +infinity.
  std::string str() const {
    if (is_inf()) return "inf";
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  static Rational parse(const std::string& text);

  // Largest integer <= *this (finite values only).
  Int floor() const {
    NEWTB_CHECK(!is_inf(), "rational: floor of +inf");
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;  // > 0, or 0 encoding +inf
};

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

// q^e for integer e >= 0.
inline Int int_pow(const Int& q, long long e) {
  NEWTB_REQUIRE(e >= 0, "int_pow: negative exponent");
  Int r = 1;
  for (long long i = 0; i < e; ++i) r *= q;
  return r;
}

// q^e as a Rational, e may be negative.
inline Rational rat_pow(const Int& q, long long e) {
  if (e >= 0) return Rational(int_pow(q, e));
  return Rational(Int(1), int_pow(q, -e));
}

}  // namespace newtb

#endif  // NEWTB_RATIONAL_HPP
