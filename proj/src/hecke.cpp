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

#include "newtb/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace newtb {

Int hecke_A(std::int64_t q, long long k) {
  NEWTB_REQUIRE(k >= 0, "A(k): negative order");
  if (k == 0) return 1;
  return int_pow(Int(q), k) - int_pow(Int(q), k - 1);
}

Rational point_valuation_formula(const NewtonPolygon& P,
                                 const std::vector<std::int64_t>& a,
                                 const std::vector<int>& I,
                                 const std::vector<std::int64_t>& orders) {
  const int n = P.n();
  NEWTB_REQUIRE(static_cast<int>(a.size()) == n, "hecke: bad index size");
  NEWTB_REQUIRE(!I.empty() && I.size() == orders.size(),
                "hecke: empty support or mismatched orders");
  for (std::int64_t ai : a) NEWTB_REQUIRE(ai >= 0, "hecke: negative index");
  std::vector<bool> in_I(n + 1, false);
  for (size_t t = 0; t < I.size(); ++t) {
    NEWTB_REQUIRE(I[t] >= 1 && I[t] <= n && !in_I[I[t]],
                  "hecke: bad support index");
    in_I[I[t]] = true;
    NEWTB_REQUIRE(orders[t] > a[I[t] - 1],
                  "hecke: order must exceed the kernel exponent");
  }

  // Fixed part of the infimum over the support.
  Rational v0 = Rational::inf();
  for (size_t t = 0; t < I.size(); ++t) {
    v0 = newtb::min(v0, lambda_iter(P, P.slope(I[t]), orders[t]));
  }

  // Complement data: for i not in I the profile entry k_i ranges over
  // 0..a_i and contributes weight A(k_i) and value lambda_i^{(k_i)}.
  struct Entry {
    int i;
    std::vector<Rational> value;  // value[k] = lambda_i^{(k)}, k = 0..a_i
  };
  std::vector<Entry> comp;
  for (int i = 1; i <= n; ++i) {
    if (in_I[i]) continue;
    Entry e;
    e.i = i;
    for (std::int64_t k = 0; k <= a[i - 1]; ++k) {
      e.value.push_back(lambda_iter(P, P.slope(i), k));
    }
    comp.push_back(std::move(e));
  }

  // sum over profiles of prod A * min(v0, min_i value_i)
  //   = integral over t >= 0 of W(>= t) dt,
  // where W(>= t) = [v0 >= t] * prod_i (sum of A(k) over value_i >= t),
  // a step function of t with steps at the candidate values.
  std::vector<Rational> thresholds{v0};
  for (const Entry& e : comp) {
    for (const Rational& v : e.value) thresholds.push_back(v);
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  // Only thresholds <= v0 matter; also drop +inf (weights there are
  // counted from the previous finite threshold on).
  const std::int64_t q = P.ctx().q;
  auto weight_at = [&](const Rational& t) -> Int {
    if (v0 < t) return 0;
    Int w = 1;
    for (const Entry& e : comp) {
      Int s = 0;
      for (size_t k = 0; k < e.value.size(); ++k) {
        if (e.value[k] >= t) s += hecke_A(q, static_cast<long long>(k));
      }
      w *= s;
    }
    return w;
  };
  Rational total(0);
  Rational prev(0);
  for (const Rational& t : thresholds) {
    if (t.is_inf() || t > v0) break;
    // W is constant on (prev, t]; its value there is weight_at(t).
    total += Rational(weight_at(t)) * (t - prev);
    prev = t;
  }
  Int lead = 1;
  for (size_t t = 0; t < I.size(); ++t) lead *= int_pow(Int(q), a[I[t] - 1]);
  return Rational(lead) * total;
}

HeckeImage hecke_apply(const NewtonPolygon& P,
                       const std::vector<std::int64_t>& a) {
  const int n = P.n();
  NEWTB_REQUIRE(static_cast<int>(a.size()) == n, "hecke: bad index size");
  for (std::int64_t ai : a) NEWTB_REQUIRE(ai >= 0, "hecke: negative index");
  // sigma sorts lambda_i^{(a_i)} non-increasingly, stable in i.
  std::vector<Rational> key(n);
  for (int i = 1; i <= n; ++i) {
    key[i - 1] = lambda_iter(P, P.slope(i), a[i - 1]);
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::stable_sort(sigma.begin(), sigma.end(),
                   [&](int i, int j) { return key[i - 1] > key[j - 1]; });
  std::vector<Rational> slopes;
  for (int m = 0; m < n; ++m) {
    int i = sigma[m];
    slopes.push_back(
        point_valuation_formula(P, a, {i}, {a[i - 1] + 1}));
  }
  return HeckeImage{NewtonPolygon(P.ctx(), std::move(slopes)),
                    std::move(sigma)};
}

Rational transported_lambda_iter(const NewtonPolygon& P,
                                 const std::vector<std::int64_t>& a, int i,
                                 long long k) {
  NEWTB_REQUIRE(k >= 1, "transported iteration: k must be >= 1");
  HeckeImage img = hecke_apply(P, a);
  int src = img.sigma[i - 1];
  Rational value =
      point_valuation_formula(P, a, {src}, {a[src - 1] + k});
  Rational check = lambda_iter(img.polygon, img.polygon.slope(i), k);
  NEWTB_CHECK(value == check,
              "transported iteration disagrees with the image polygon");
  return value;
}

NewtonPolygon flat_polygon(const Context& ctx) {
  Rational l(Int(1), ctx.qi(ctx.n) - 1);
  return NewtonPolygon(ctx, std::vector<Rational>(ctx.n, l));
}

NewtonPolygon vertex_polygon(const Context& ctx, const ApartmentVertex& x) {
  NEWTB_REQUIRE(x.n() == ctx.n, "vertex_polygon: dimension mismatch");
  NEWTB_REQUIRE(in_Q(x), "vertex_polygon: apply pr_Q first");
  const std::vector<std::int64_t>& a = x.c();
  const int n = ctx.n;

  // Route 1: Hecke action on the flat polygon.
  HeckeImage img = hecke_apply(flat_polygon(ctx), a);
  for (int m = 0; m < n; ++m) {
    NEWTB_CHECK(img.sigma[m] == m + 1,
                "vertex_polygon: ascending exponents should sort trivially");
  }

  // Route 2: the closed-form display
  //   lambda_i = q^{a_i}/(q^n - 1) * sum over profiles (k_j)_{j != i}
  //     prod A(k_j) q^{-n (sup({a_i+1} u {k_j}) - 1)}.
  const std::int64_t q = ctx.q;
  std::vector<Rational> closed;
  for (int i = 1; i <= n; ++i) {
    Rational sum(0);
    std::vector<std::int64_t> profile;
    std::vector<int> js;
    for (int j = 1; j <= n; ++j) {
      if (j != i) {
        js.push_back(j);
        profile.push_back(0);
      }
    }
    bool done = js.empty();
    while (!done) {
      Int mult = 1;
      std::int64_t sup = a[i - 1] + 1;
      for (size_t t = 0; t < js.size(); ++t) {
        mult *= hecke_A(q, profile[t]);
        sup = std::max(sup, profile[t]);
      }
      sum += Rational(mult) * rat_pow(Int(q), -ctx.n * (sup - 1));
      done = true;
      for (size_t t = 0; t < profile.size(); ++t) {
        if (++profile[t] <= a[js[t] - 1]) {
          done = false;
          break;
        }
        profile[t] = 0;
      }
    }
    if (js.empty()) sum = rat_pow(Int(q), -ctx.n * a[i - 1]);
    closed.push_back(rat_pow(Int(q), a[i - 1]) /
                     Rational(ctx.qi(n) - 1) * sum);
  }
  NEWTB_CHECK(closed == img.polygon.slopes(),
              "vertex_polygon: closed form disagrees with the Hecke route");

  // Route 3: uniqueness characterization on the result.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      NEWTB_CHECK(lambda_iter(img.polygon, img.polygon.slope(i),
                              a[j - 1] - a[i - 1] + 1) ==
                      img.polygon.slope(j),
                  "vertex_polygon: characterization fails on the result");
    }
  }
  return img.polygon;
}

Chamber chamber_of(const NewtonPolygon& P) {
  const int n = P.n();
  PLFun psi = psi_pi_torsion(P);
  std::vector<std::int64_t> b_lex;
  std::vector<std::pair<int, int>> walls;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::int64_t m = 0;
      Rational v = P.slope(i);
      Rational last = v;
      while (v >= P.slope(j)) {
        ++m;
        last = v;
        v = psi(v);
      }
      NEWTB_CHECK(m >= 1, "chamber_of: slopes out of order");
      b_lex.push_back(m - 1);
      if (last == P.slope(j)) walls.push_back({i, j});
    }
  }
  return Chamber{SimplexB(n, std::move(b_lex)), std::move(walls)};
}

bool in_chamber(const NewtonPolygon& P, const SimplexB& S) {
  NEWTB_REQUIRE(S.n() == P.n(), "in_chamber: dimension mismatch");
  for (int i = 1; i <= P.n(); ++i) {
    for (int j = i + 1; j <= P.n(); ++j) {
      std::int64_t b = S.b(i, j);
      if (b < 0) return false;
      if (lambda_iter(P, P.slope(i), b + 1) < P.slope(j)) return false;
      if (lambda_iter(P, P.slope(i), b + 2) > P.slope(j)) return false;
    }
  }
  return true;
}

std::vector<int> monoid_compose_check(const NewtonPolygon& P,
                                      const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) {
  const int n = P.n();
  NEWTB_REQUIRE(static_cast<int>(a.size()) == n &&
                    static_cast<int>(b.size()) == n,
                "monoid check: bad index sizes");
  NewtonPolygon lhs = hecke_apply(hecke_apply(P, b).polygon, a).polygon;
  bool b_ascending = std::is_sorted(b.begin(), b.end());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  // With b ascending the identity must witness the composition; in
  // general search the symmetric group in lexicographic order.
  do {
    std::vector<std::int64_t> combined(n);
    for (int m = 0; m < n; ++m) combined[m] = a[sigma[m] - 1] + b[m];
    if (hecke_apply(P, combined).polygon == lhs) {
      NEWTB_CHECK(!b_ascending ||
                      sigma == [&] {
                        std::vector<int> id(n);
                        std::iota(id.begin(), id.end(), 1);
                        return id;
                      }(),
                  "monoid check: identity fails for ascending b");
      return sigma;
    }
    NEWTB_CHECK(!b_ascending, "monoid check: identity fails for ascending b");
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  throw_invariant("monoid check: no witnessing permutation found");
}

}  // namespace newtb
