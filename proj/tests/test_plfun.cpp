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
#include "newtb/plfun.hpp"
#include "test_support.hpp"

using namespace newtb;
using namespace newtb::testing;

namespace {
const Rational kInf = Rational::inf();
}

TEST_CASE("eval is exact interpolation") {
  PLFun f = PLFun::segment(1, 1, 4, 0);
  CHECK(f(Rational(1)) == Rational(1));    // endpoint
  CHECK(f(Rational(4)) == Rational(0));    // endpoint
  CHECK(f(Rational(2)) == Rational(2, 3)); // interior, by hand
  CHECK_THROWS_AS(f(Rational(5)), Error);
  CHECK_THROWS_AS(f(Rational(0)), Error);
}

TEST_CASE("lower convex hull") {
  SUBCASE("two points") {
    PLFun h = lower_convex_hull({{Rational(1), Rational(1)},
                                 {Rational(4), Rational(0)}});
    CHECK(h == PLFun::segment(1, 1, 4, 0));
  }
  SUBCASE("breaking point kept") {
    PLFun h = lower_convex_hull({{Rational(1), Rational(1)},
                                 {Rational(2), Rational(1, 2)},
                                 {Rational(4), Rational(0)}});
    CHECK(h.slopes() ==
          std::vector<Rational>{Rational(-1, 2), Rational(-1, 4)});
  }
  SUBCASE("dominated interior point dropped") {
    PLFun h = lower_convex_hull({{Rational(1), Rational(1)},
                                 {Rational(2), Rational(3)},
                                 {Rational(4), Rational(0)}});
    CHECK(h == PLFun::segment(1, 1, 4, 0));
  }
  SUBCASE("walls only constrain the left edge") {
    PLFun h = lower_convex_hull({{Rational(0), kInf},
                                 {Rational(1), Rational(1)},
                                 {Rational(4), Rational(0)}});
    CHECK(h == PLFun::segment(1, 1, 4, 0));
    CHECK_THROWS_AS(lower_convex_hull({{Rational(1), Rational(1)},
                                       {Rational(2), kInf},
                                       {Rational(4), Rational(0)}}),
                    Error);
  }
  SUBCASE("fewer than two usable points") {
    CHECK_THROWS_AS(lower_convex_hull({{Rational(1), Rational(1)}}), Error);
    CHECK_THROWS_AS(lower_convex_hull({{Rational(0), kInf},
                                       {Rational(1), Rational(1)}}),
                    Error);
  }
}

TEST_CASE("legendre dual of the flat GL_2 polygon is eta") {
  // Graph (1,1) -> (4,0); with the torsion reading the dual is
  // eta(s) = s + 3 min(s, 1/3).
  PLFun f = PLFun::segment(1, 1, 4, 0);
  PLFun g = legendre_dual(f);
  CHECK(g(Rational(1, 3)) == Rational(4, 3));
  CHECK(g(Rational(0)) == Rational(0));
  CHECK(g(Rational(1, 6)) == Rational(4, 6));
  CHECK(g(Rational(1)) == Rational(2));
  CHECK(g.domain_lo() == Rational(0));
  CHECK(g.is_concave());
}

TEST_CASE("legendre dual of constant zero") {
  PLFun f = PLFun::constant(Rational(0), Rational(1), Rational(0));
  PLFun g = legendre_dual(f);
  CHECK(g(Rational(0)) == Rational(0));
  CHECK(g(Rational(3)) == Rational(0));
}

TEST_CASE("legendre dual is an involution on random convex functions") {
  Rng rng(20260810);
  for (int t = 0; t < 200; ++t) {
    PLFun f = rand_convex_plfun(rng);
    PLFun dd = legendre_dual(legendre_dual(f));
    CHECK(dd.restrict(f.domain_lo(), f.domain_hi()) == f);
  }
}

TEST_CASE("legendre dual is exact on redundant representations") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    PLFun f = rand_convex_plfun(rng);
    PLFun g = with_redundant_breakpoints(rng, f);
    CHECK(f == g);
    CHECK(legendre_dual(f) == legendre_dual(g));
  }
}

TEST_CASE("compose and inverse") {
  SUBCASE("inverse of the flat-polygon eta at 1/3") {
    PLFun eta = PLFun::unbounded({{Rational(0), Rational(0)},
                                  {Rational(1, 3), Rational(4, 3)}},
                                 Rational(1));
    PLFun psi = inverse(eta);
    CHECK(psi(Rational(1, 3)) == Rational(1, 12));
    CHECK(psi(Rational(4, 3)) == Rational(1, 3));
  }
  SUBCASE("compose with identity") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
      PLFun f = rand_convex_plfun(rng);
      PLFun id = PLFun::identity(f.domain_lo(), f.domain_hi());
      CHECK(compose(f, id) == f);
    }
  }
  SUBCASE("composition agrees with pointwise evaluation") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
      // Two increasing PL maps with compatible ranges.
      PLFun g = PLFun::unbounded({{Rational(0), Rational(0)},
                                  {rand_positive_rational(rng),
                                   rand_positive_rational(rng)}},
                                 rand_positive_rational(rng, 5, 3));
      PLFun f = PLFun::unbounded(
          {{Rational(0), rand_rational(rng, -3, 3)},
           {rand_positive_rational(rng), rand_positive_rational(rng, 9, 2)}},
          rand_positive_rational(rng, 5, 3));
      if (!f.is_strictly_increasing()) continue;
      PLFun fg = compose(f, g);
      for (int s = 0; s < 8; ++s) {
        Rational x = rand_positive_rational(rng, 20, 7);
        CHECK(fg(x) == f(g(x)));
      }
    }
  }
  SUBCASE("inverse round-trips") {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
      PLFun f = PLFun::unbounded({{Rational(0), Rational(0)},
                                  {rand_positive_rational(rng),
                                   rand_positive_rational(rng)}},
                                 rand_positive_rational(rng, 5, 3));
      PLFun finv = inverse(f);
      PLFun round = compose(finv, f);
      CHECK(round == PLFun::identity(f.domain_lo(), f.domain_hi()));
    }
  }
  SUBCASE("non-monotone input rejected") {
    PLFun f = PLFun::bounded({{Rational(0), Rational(0)},
                              {Rational(1), Rational(1)},
                              {Rational(2), Rational(0)}});
    CHECK_THROWS_AS(inverse(f), Error);
    CHECK_THROWS_AS(compose(f, f), Error);
  }
  SUBCASE("range/domain mismatch rejected") {
    PLFun f = PLFun::segment(0, 0, 1, 1);
    PLFun g = PLFun::segment(0, 0, 1, 2);
    CHECK_THROWS_AS(compose(f, g), Error);
  }
}

TEST_CASE("step integration") {
  SUBCASE("rectangle") {
    StepFun g({Rational(0)}, {Rational(4)}, Rational(1, 3));
    CHECK(integrate_step(g, Rational(0), Rational(1, 3)) == Rational(4, 3));
  }
  SUBCASE("two steps, the eta(2/3) example") {
    StepFun g({Rational(0), Rational(1, 6)}, {Rational(4), Rational(2)},
              Rational::inf());
    CHECK(integrate_step(g, Rational(0), Rational(2, 3)) == Rational(5, 3));
  }
  SUBCASE("empty interval") {
    StepFun g({Rational(0)}, {Rational(4)}, Rational(1));
    CHECK(integrate_step(g, Rational(1, 2), Rational(1, 2)) == Rational(0));
    CHECK_THROWS_AS(integrate_step(g, Rational(1, 2), Rational(1, 4)), Error);
  }
}

TEST_CASE("hull output is convex and representation independent") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<Rational, Rational>> pts;
    int m = static_cast<int>(rand_int(rng, 2, 9));
    for (int i = 0; i < m; ++i) {
      pts.push_back({Rational(i) + rand_rational(rng, 0, 1, 5),
                     rand_rational(rng, -6, 6)});
    }
    PLFun h = lower_convex_hull(pts);
    CHECK(h.is_convex());
    for (const auto& p : pts) {
      CHECK(h(p.first) <= p.second);
    }
  }
}
