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

#include "newtb/iwahori.hpp"

#include <algorithm>
#include <numeric>

#include "newtb/skeleton.hpp"

namespace newtb {

DeltaPoint::DeltaPoint(Context ctx, std::vector<Rational> v)
    : ctx_(ctx), v_(std::move(v)) {
  NEWTB_REQUIRE(static_cast<int>(v_.size()) == ctx_.n,
                "delta point: need n coordinates");
  Rational total(0);
  for (const Rational& x : v_) {
    NEWTB_REQUIRE(x.is_positive() && x < Rational(1),
                  "delta point: coordinates must lie in (0,1)");
    total += x;
  }
  NEWTB_REQUIRE(total == Rational(1), "delta point: coordinates must sum to 1");
}

PLFun eta_lambda(std::int64_t q, const Rational& lambda) {
  NEWTB_REQUIRE(q >= 2, "eta_lambda: q must be >= 2");
  NEWTB_REQUIRE(lambda.is_positive() && lambda < Rational(1, q - 1),
                "eta_lambda: lambda out of (0, 1/(q-1))");
  return PLFun::unbounded(
      {{Rational(0), Rational(0)}, {lambda, Rational(q) * lambda}},
      Rational(1));
}

PLFun delta_eta(const DeltaPoint& v) {
  const std::int64_t q = v.ctx().q;
  // Step 1 of the chain acts first, so it sits innermost.
  PLFun out = eta_lambda(q, v.v()[0] / Rational(q - 1));
  for (int i = 1; i < v.n(); ++i) {
    out = compose(eta_lambda(q, v.v()[i] / Rational(q - 1)), out);
  }
  return out;
}

NewtonPolygon newton_of_delta(const DeltaPoint& v) {
  const Context& c = v.ctx();
  PLFun dual = legendre_dual(delta_eta(v));
  PLFun graph = dual.restrict(Rational(1), Rational(c.qi(c.n)));
  std::vector<Rational> slopes;
  for (int i = 1; i <= c.n; ++i) {
    Rational x0(c.qi(i - 1)), x1(c.qi(i));
    slopes.push_back((graph(x0) - graph(x1)) / (x1 - x0));
  }
  return NewtonPolygon(c, std::move(slopes));
}

bool in_Q_delta(const DeltaPoint& v) {
  // lambda_i = v_i / (q^i - q^{i-1}) non-increasing, i.e. v_{i+1} <= q v_i.
  for (int i = 0; i + 1 < v.n(); ++i) {
    if (v.v()[i + 1] > Rational(v.ctx().q) * v.v()[i]) return false;
  }
  return true;
}

DeltaPoint sigma_act(const std::vector<int>& sigma, const DeltaPoint& v) {
  const int n = v.n();
  NEWTB_REQUIRE(static_cast<int>(sigma.size()) == n, "sigma_act: bad size");
  NEWTB_REQUIRE(in_Q_delta(v), "sigma_act: input must lie in Q(Delta)");
  std::vector<bool> seen(n + 1, false);
  for (int s : sigma) {
    NEWTB_REQUIRE(s >= 1 && s <= n && !seen[s], "sigma_act: not a permutation");
    seen[s] = true;
  }
  // Chain simulation: the sorted chain kills the torsion lines in
  // decreasing valuation order with per-step kernel valuation sums
  // v_i = (q-1) lambda_i q^{i-1}.  Reordering by sigma, the line killed
  // at step i currently has valuation eta-transformed by the earlier
  // steps; each step multiplies smaller valuations by q and adds
  // (q-1) mu to larger ones.
  const Context& c = v.ctx();
  const Rational q(c.q);
  std::vector<Rational> cur(n);
  for (int i = 1; i <= n; ++i) {
    cur[i - 1] = v.v()[i - 1] / Rational(c.layer(i));
  }
  std::vector<bool> killed(n, false);
  std::vector<Rational> out(n);
  for (int step = 0; step < n; ++step) {
    int line = sigma[step] - 1;
    NEWTB_CHECK(!killed[line], "sigma_act: line killed twice");
    Rational mu = cur[line];
    out[step] = (q - Rational(1)) * mu;
    killed[line] = true;
    for (int m = 0; m < n; ++m) {
      if (killed[m]) continue;
      if (cur[m] <= mu) {
        cur[m] = q * cur[m];
      } else {
        cur[m] = cur[m] + (q - Rational(1)) * mu;
      }
    }
  }
  DeltaPoint result(c, std::move(out));
  NEWTB_CHECK(newton_of_delta(result) == newton_of_delta(v),
              "sigma_act: chain reordering changed the polygon");
  return result;
}

std::pair<std::vector<int>, DeltaPoint> delta_decomposition(
    const DeltaPoint& v) {
  const int n = v.n();
  NEWTB_REQUIRE(n <= 6, "delta_decomposition: n capped at 6");
  // The Q(Delta) representative comes from the polygon.
  NewtonPolygon P = newton_of_delta(v);
  std::vector<Rational> w(n);
  for (int i = 1; i <= n; ++i) {
    w[i - 1] = P.slope(i) * Rational(v.ctx().layer(i));
  }
  DeltaPoint rep(v.ctx(), std::move(w));
  NEWTB_CHECK(in_Q_delta(rep), "delta_decomposition: representative not in Q");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    if (sigma_act(sigma, rep) == v) return {sigma, rep};
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  throw_invariant("delta_decomposition: no permutation matches");
}

ApartmentPoint delta_to_apartment(const DeltaPoint& v) {
  auto [sigma, rep] = delta_decomposition(v);
  ApartmentPoint base = psi_map(newton_of_delta(rep));
  // Apply the vectorial Weyl element: coordinate sigma(i) of the image
  // receives coordinate i of the base point.
  std::vector<Rational> c(v.n());
  for (int i = 0; i < v.n(); ++i) {
    c[sigma[i] - 1] = base.c()[i];
  }
  ApartmentPoint out(std::move(c));
  NEWTB_CHECK(pr_Q(out) == psi_map(newton_of_delta(v)),
              "delta_to_apartment: square with pr_Q fails");
  return out;
}

}  // namespace newtb
