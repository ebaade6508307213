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

#include "newtb/newton.hpp"

namespace newtb {

NewtonPolygon::NewtonPolygon(Context ctx, std::vector<Rational> slopes)
    : ctx_(ctx), slopes_(std::move(slopes)) {
  NEWTB_REQUIRE(static_cast<int>(slopes_.size()) == ctx_.n,
                "polygon: slope count != n");
  Rational total(0);
  for (int i = 1; i <= ctx_.n; ++i) {
    const Rational& l = slopes_[i - 1];
    NEWTB_REQUIRE(l.is_positive() && !l.is_inf(),
                  "polygon: slopes must be positive and finite");
    if (i > 1) {
      NEWTB_REQUIRE(slopes_[i - 2] >= l, "polygon: slopes must decrease");
    }
    total += Rational(ctx_.layer(i)) * l;
  }
  NEWTB_REQUIRE(total == Rational(1),
                "polygon: normalization sum (q^i - q^{i-1}) l_i = 1 fails");
}

NewtonPolygon from_coordinates(const Context& ctx,
                               const std::vector<Rational>& v) {
  NEWTB_REQUIRE(static_cast<int>(v.size()) == ctx.n - 1,
                "from_coordinates: need n-1 coordinates");
  std::vector<std::pair<Rational, Rational>> pts;
  pts.push_back({Rational(1), Rational(1)});
  for (int i = 1; i <= ctx.n - 1; ++i) {
    NEWTB_REQUIRE(v[i - 1].is_positive(),
                  "from_coordinates: coordinate valuations must be positive");
    if (!v[i - 1].is_inf()) pts.push_back({Rational(ctx.qi(i)), v[i - 1]});
  }
  pts.push_back({Rational(ctx.qi(ctx.n)), Rational(0)});
  PLFun hull = lower_convex_hull(std::move(pts));
  std::vector<Rational> slopes;
  for (int i = 1; i <= ctx.n; ++i) {
    Rational x0(ctx.qi(i - 1)), x1(ctx.qi(i));
    slopes.push_back((hull(x0) - hull(x1)) / (x1 - x0));
  }
  return NewtonPolygon(ctx, std::move(slopes));
}

Rational eval(const NewtonPolygon& P, const Rational& t) {
  return polygon_graph(P)(t);
}

PLFun polygon_graph(const NewtonPolygon& P) {
  const Context& c = P.ctx();
  std::vector<PLFun::Point> pts;
  Rational y(1);
  pts.push_back({Rational(1), y});
  for (int i = 1; i <= c.n; ++i) {
    y -= Rational(c.layer(i)) * P.slope(i);
    pts.push_back({Rational(c.qi(i)), y});
  }
  NEWTB_CHECK(y.is_zero(), "polygon: graph does not reach 0 at q^n");
  return PLFun::bounded(std::move(pts)).marked(PLFun::Shape::convex);
}

StepFun pi_torsion_counting(const NewtonPolygon& P) {
  const Context& c = P.ctx();
  // On (l_{i+1}, l_i] there are q^i points of valuation >= t (the zero
  // point included); past l_1 only zero remains.
  std::vector<Rational> xs, vals;
  xs.push_back(Rational(0));
  vals.push_back(Rational(c.qi(c.n)));
  for (int i = c.n; i >= 1; --i) {
    const Rational& li = P.slope(i);
    if (xs.back() == li) {
      vals.back() = Rational(c.qi(i - 1));
    } else {
      xs.push_back(li);
      vals.push_back(Rational(c.qi(i - 1)));
    }
  }
  return StepFun(std::move(xs), std::move(vals), Rational::inf());
}

PLFun eta_pi_torsion(const NewtonPolygon& P) {
  return integrate_to_plfun(pi_torsion_counting(P))
      .marked(PLFun::Shape::concave);
}

PLFun psi_pi_torsion(const NewtonPolygon& P) {
  return inverse(eta_pi_torsion(P));
}

Rational lambda_iter(const NewtonPolygon& P, const Rational& lambda,
                     long long k) {
  NEWTB_REQUIRE(lambda.is_positive(), "lambda_iter: lambda must be positive");
  if (k <= 0) return Rational::inf();
  if (lambda.is_inf()) return Rational::inf();
  Rational s = lambda;
  if (k == 1) return s;
  PLFun psi = psi_pi_torsion(P);
  for (long long j = 1; j < k; ++j) s = psi(s);
  return s;
}

Rational lambda_iter_slope(const NewtonPolygon& P, int i, long long k) {
  return lambda_iter(P, P.slope(i), k);
}

NewtonPolygon barycenter(const std::vector<Rational>& weights,
                         const std::vector<NewtonPolygon>& polygons) {
  NEWTB_REQUIRE(!polygons.empty() && weights.size() == polygons.size(),
                "barycenter: weight/polygon count mismatch");
  const Context& c = polygons.front().ctx();
  Rational wsum(0);
  for (size_t m = 0; m < polygons.size(); ++m) {
    NEWTB_REQUIRE(polygons[m].ctx() == c, "barycenter: mismatched contexts");
    NEWTB_REQUIRE(!weights[m].is_negative() && !weights[m].is_inf(),
                  "barycenter: weights must be nonnegative");
    wsum += weights[m];
  }
  NEWTB_REQUIRE(wsum == Rational(1), "barycenter: weights must sum to 1");
  std::vector<Rational> slopes(c.n, Rational(0));
  for (size_t m = 0; m < polygons.size(); ++m) {
    for (int i = 0; i < c.n; ++i) {
      slopes[i] += weights[m] * polygons[m].slopes()[i];
    }
  }
  return NewtonPolygon(c, std::move(slopes));
}

}  // namespace newtb
