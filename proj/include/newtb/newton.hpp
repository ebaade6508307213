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

#ifndef NEWTB_NEWTON_HPP
#define NEWTB_NEWTON_HPP

#include <cstdint>
#include <vector>

#include "newtb/plfun.hpp"
#include "newtb/rational.hpp"

namespace newtb {

// Residue cardinality q >= 2 and height n >= 1.
struct Context {
  std::int64_t q = 2;
  int n = 1;

  Context() = default;
  Context(std::int64_t q_, int n_) : q(q_), n(n_) {
    NEWTB_REQUIRE(q >= 2, "context: q must be >= 2");
    NEWTB_REQUIRE(n >= 1, "context: n must be >= 1");
  }

  Int qi(long long e) const { return int_pow(Int(q), e); }  // q^e
  // q^i - q^{i-1}, the number of points of exact order pi with the
  // i-th slope.
  Int layer(int i) const { return qi(i) - qi(i - 1); }

  bool operator==(const Context& o) const { return q == o.q && n == o.n; }
};

// Point of Newt: the decreasing positive slope vector of the polygon of
// multiplication by pi, normalized so that sum (q^i - q^{i-1}) l_i = 1.
// The graph is the convex function on [1, q^n] with value 1 at 1 and 0
// at q^n, linear on each [q^{i-1}, q^i].
class NewtonPolygon {
public:
  NewtonPolygon(Context ctx, std::vector<Rational> slopes);

  const Context& ctx() const { return ctx_; }
  int n() const { return ctx_.n; }
  const std::vector<Rational>& slopes() const { return slopes_; }
  const Rational& slope(int i) const {  // 1-based
    NEWTB_REQUIRE(i >= 1 && i <= ctx_.n, "polygon: slope index");
    return slopes_[i - 1];
  }

  bool operator==(const NewtonPolygon& o) const {
    return ctx_ == o.ctx_ && slopes_ == o.slopes_;
  }
  bool operator!=(const NewtonPolygon& o) const { return !(*this == o); }

private:
  Context ctx_;
  std::vector<Rational> slopes_;
};

// Slopes read off the lower hull of {(1,1)} u {(q^i, v_i)} u {(q^n,0)};
// v has n-1 positive coordinate valuations.
NewtonPolygon from_coordinates(const Context& ctx,
                               const std::vector<Rational>& v);

// P(t) for t in [1, q^n].
Rational eval(const NewtonPolygon& P, const Rational& t);

// The graph of P as a PLFun on [1, q^n].
PLFun polygon_graph(const NewtonPolygon& P);

// Counting function t |-> |{ x in H[pi] : v(x) >= t }| on [0, +inf).
StepFun pi_torsion_counting(const NewtonPolygon& P);

// Herbrand function of the pi-torsion: the increasing concave function
// eta(s) = s + sum_i (q^i - q^{i-1}) min(s, l_i) on [0, +inf), with
// slope q^i on [l_{i+1}, l_i] (l_{n+1} = 0, slope q^n near 0, slope 1
// past l_1).  Equals the Legendre dual of the polygon graph.
PLFun eta_pi_torsion(const NewtonPolygon& P);

// Psi = eta^{-1}, the inverse Herbrand function (convex).
PLFun psi_pi_torsion(const NewtonPolygon& P);

// The iterated slope l^(k): +inf for k <= 0, l for k = 1, and
// Psi^{o(k-1)}(l) for k >= 2.
Rational lambda_iter(const NewtonPolygon& P, const Rational& lambda,
                     long long k);

// l_i^(k) for the i-th slope of P (1-based i).
Rational lambda_iter_slope(const NewtonPolygon& P, int i, long long k);

// Slope-wise affine combination; weights are nonnegative and sum to 1.
NewtonPolygon barycenter(const std::vector<Rational>& weights,
                         const std::vector<NewtonPolygon>& polygons);

}  // namespace newtb

#endif  // NEWTB_NEWTON_HPP
