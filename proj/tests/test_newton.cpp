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
#include "newtb/newton.hpp"
#include "test_support.hpp"

using namespace newtb;
using namespace newtb::testing;

namespace {

NewtonPolygon flat22() {
  return NewtonPolygon(Context(2, 2), {Rational(1, 3), Rational(1, 3)});
}

NewtonPolygon steep22() {
  return NewtonPolygon(Context(2, 2), {Rational(2, 3), Rational(1, 6)});
}

}  // namespace

TEST_CASE("polygon invariants are enforced") {
  Context c(2, 2);
  CHECK_THROWS_AS(NewtonPolygon(c, {Rational(1, 3), Rational(1, 2)}), Error);
  CHECK_THROWS_AS(NewtonPolygon(c, {Rational(1, 2), Rational(1, 2)}), Error);
  CHECK_THROWS_AS(NewtonPolygon(c, {Rational(1), Rational(0)}), Error);
  CHECK_THROWS_AS(Context(1, 2), Error);
  CHECK_THROWS_AS(Context(2, 0), Error);
}

TEST_CASE("from_coordinates reads slopes off the hull") {
  Context c(2, 2);
  SUBCASE("flat when the coordinate point is above the segment") {
    CHECK(from_coordinates(c, {Rational(2, 3)}) == flat22());
    CHECK(from_coordinates(c, {Rational(5)}) == flat22());
    CHECK(from_coordinates(c, {Rational::inf()}) == flat22());
  }
  SUBCASE("breaking coordinate") {
    NewtonPolygon P = from_coordinates(c, {Rational(1, 2)});
    CHECK(P.slopes() == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
  }
  SUBCASE("n=3 flat") {
    Context c3(2, 3);
    NewtonPolygon P = from_coordinates(c3, {Rational(5), Rational(3)});
    for (const auto& l : P.slopes()) CHECK(l == Rational(1, 7));
  }
  SUBCASE("non-positive coordinate rejected") {
    CHECK_THROWS_AS(from_coordinates(c, {Rational(0)}), Error);
    CHECK_THROWS_AS(from_coordinates(c, {Rational(-1)}), Error);
  }
}

TEST_CASE("polygon evaluation") {
  CHECK(eval(flat22(), Rational(2)) == Rational(2, 3));
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    NewtonPolygon P = rand_polygon(rng, Context(3, 3));
    CHECK(eval(P, Rational(1)) == Rational(1));
    CHECK(eval(P, Rational(27)) == Rational(0));
  }
}

TEST_CASE("eta of the pi-torsion") {
  SUBCASE("flat") {
    PLFun eta = eta_pi_torsion(flat22());
    CHECK(eta(Rational(1, 3)) == Rational(4, 3));
    CHECK(eta(Rational(0)) == Rational(0));
    CHECK(eta.slopes() == std::vector<Rational>{Rational(4), Rational(1)});
  }
  SUBCASE("two-step polygon") {
    PLFun eta = eta_pi_torsion(steep22());
    CHECK(eta(Rational(1, 6)) == Rational(2, 3));
    CHECK(eta(Rational(2, 3)) == Rational(5, 3));
  }
  SUBCASE("eta equals the Legendre dual of the graph") {
    Rng rng(37);
    for (int t = 0; t < 50; ++t) {
      NewtonPolygon P = rand_polygon(rng, Context(2, 3));
      CHECK(eta_pi_torsion(P) == legendre_dual(polygon_graph(P)));
    }
  }
  SUBCASE("eta equals the step integral of the counting function") {
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
      NewtonPolygon P = rand_polygon(rng, Context(3, 2));
      StepFun count = pi_torsion_counting(P);
      PLFun eta = eta_pi_torsion(P);
      for (int s = 0; s < 5; ++s) {
        Rational x = rand_positive_rational(rng, 9, 7);
        CHECK(eta(x) == integrate_step(count, Rational(0), x));
      }
    }
  }
}

TEST_CASE("lambda iteration") {
  SUBCASE("conventions and worked values") {
    CHECK(lambda_iter(flat22(), Rational(1, 3), 0).is_inf());
    CHECK(lambda_iter(flat22(), Rational(1, 3), -3).is_inf());
    CHECK(lambda_iter(flat22(), Rational(1, 3), 1) == Rational(1, 3));
    CHECK(lambda_iter(flat22(), Rational(1, 3), 2) == Rational(1, 12));
    CHECK(lambda_iter(steep22(), Rational(2, 3), 2) == Rational(1, 6));
  }
  SUBCASE("below the last slope the step is division by q^n") {
    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
      NewtonPolygon P = rand_polygon(rng, Context(2, 3));
      Rational l = P.slope(3) * Rational(rand_int(rng, 1, 5), 7);
      CHECK(lambda_iter(P, l, 2) == l / Rational(8));
    }
  }
  SUBCASE("hull recipe agrees with Psi composition and iterates equally") {
    Rng rng(47);
    for (int t = 0; t < 60; ++t) {
      NewtonPolygon P = rand_polygon(rng, Context(2, 3));
      Rational l = rand_positive_rational(rng, 12, 9);
      Rational s = l;
      for (long long k = 2; k <= 5; ++k) {
        s = lambda_step_hull_oracle(P, s);
        CHECK(s == lambda_iter(P, l, k));
      }
    }
  }
  SUBCASE("eventual geometric decay") {
    Rng rng(53);
    for (int t = 0; t < 30; ++t) {
      Context ctx(2, 3);
      NewtonPolygon P = rand_polygon(rng, ctx);
      Rational l = rand_positive_rational(rng, 20, 6);
      // Height of lambda above lambda_n measured in sauts.
      int sauts = 0;
      for (int i = 1; i <= ctx.n; ++i) {
        for (long long k = 1; k < 30; ++k) {
          Rational v = lambda_iter_slope(P, i, k);
          if (v < P.slope(ctx.n)) break;
          if (v <= l) ++sauts;
        }
      }
      long long bound = static_cast<long long>(ctx.n) * (sauts + 1) + 1;
      long long K = -1;
      Rational qn(ctx.qi(ctx.n));
      for (long long k = 1; k <= bound; ++k) {
        if (lambda_iter(P, l, k + 1) == lambda_iter(P, l, k) / qn) {
          K = k;
          break;
        }
      }
      REQUIRE(K >= 1);
      for (long long k = K; k < K + 3; ++k) {
        CHECK(lambda_iter(P, l, k + 1) == lambda_iter(P, l, k) / qn);
      }
    }
  }
  SUBCASE("monotonicity in lambda and in shifted indices") {
    Rng rng(59);
    for (int t = 0; t < 60; ++t) {
      NewtonPolygon P = rand_polygon(rng, Context(2, 2));
      Rational a = rand_positive_rational(rng, 12, 9);
      Rational b = rand_positive_rational(rng, 12, 9);
      if (a > b) std::swap(a, b);
      for (long long k = 1; k <= 6; ++k) {
        CHECK(lambda_iter(P, a, k) <= lambda_iter(P, b, k));
      }
      long long i = rand_int(rng, 1, 4), j = rand_int(rng, 1, 4);
      long long c = rand_int(rng, 1, 3);
      if (lambda_iter(P, a, i) >= lambda_iter(P, b, j)) {
        CHECK(lambda_iter(P, a, i + c) >= lambda_iter(P, b, j + c));
      }
    }
  }
}

TEST_CASE("barycenter") {
  SUBCASE("degenerate weights") {
    CHECK(barycenter({Rational(1), Rational(0)}, {flat22(), steep22()}) ==
          flat22());
    CHECK(barycenter({Rational(1, 2), Rational(1, 2)}, {flat22(), flat22()}) ==
          flat22());
  }
  SUBCASE("midpoint of the flat and steep polygons") {
    NewtonPolygon mid =
        barycenter({Rational(1, 2), Rational(1, 2)}, {flat22(), steep22()});
    CHECK(mid.slopes() ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
  }
  SUBCASE("mismatched contexts rejected") {
    NewtonPolygon other(Context(3, 2), {Rational(1, 8), Rational(1, 8)});
    CHECK_THROWS_AS(
        barycenter({Rational(1, 2), Rational(1, 2)}, {flat22(), other}),
        Error);
  }
}
