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

#include "doctest.h"
#include "newtb/rational.hpp"

using namespace newtb;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(7, 3).floor() == 2);
  CHECK(Rational(-7, 3).floor() == -3);
  CHECK(Rational(-2).floor() == -2);
}

TEST_CASE("infinity absorbs addition and dominates comparison") {
  Rational inf = Rational::inf();
  CHECK(inf.is_inf());
  CHECK((inf + Rational(5)).is_inf());
  CHECK((Rational(5) + inf).is_inf());
  CHECK((inf * Rational(2, 3)).is_inf());
  CHECK(inf > Rational(1000000));
  CHECK(Rational(-3) < inf);
  CHECK(inf == Rational::inf());
  CHECK(min(inf, Rational(4)) == Rational(4));
  CHECK(max(inf, Rational(4)).is_inf());
  CHECK_THROWS_AS(inf * Rational(0), Error);
  CHECK_THROWS_AS(Rational(1) - inf, Error);
}

TEST_CASE("rational text round-trip") {
  for (const char* s : {"0", "5", "-5", "2/3", "-7/11", "inf"}) {
    CHECK(Rational::parse(s).str() == s);
  }
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("integer powers") {
  CHECK(int_pow(Int(2), 10) == 1024);
  CHECK(rat_pow(Int(3), -2) == Rational(1, 9));
  CHECK(rat_pow(Int(2), 0) == Rational(1));
}
