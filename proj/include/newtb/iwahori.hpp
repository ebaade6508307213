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

#ifndef NEWTB_IWAHORI_HPP
#define NEWTB_IWAHORI_HPP

#include <utility>
#include <vector>

#include "newtb/building.hpp"
#include "newtb/newton.hpp"

namespace newtb {

// The Iwahori-level skeleton: the open simplex of valuation vectors of
// a cyclic chain of degree-q isogenies with composite pi.
class DeltaPoint {
public:
  DeltaPoint(Context ctx, std::vector<Rational> v);

  const Context& ctx() const { return ctx_; }
  int n() const { return ctx_.n; }
  const std::vector<Rational>& v() const { return v_; }

  bool operator==(const DeltaPoint& o) const {
    return ctx_ == o.ctx_ && v_ == o.v_;
  }

private:
  Context ctx_;
  std::vector<Rational> v_;  // each in (0,1), exact sum 1
};

// The elementary Herbrand step: qx on [0, lambda], (x - lambda) +
// q lambda past it; 0 < lambda < 1/(q-1).
PLFun eta_lambda(std::int64_t q, const Rational& lambda);

// The composite eta(v) = eta_{v_n/(q-1)} o ... o eta_{v_1/(q-1)}
// (step i of the chain applied first).
PLFun delta_eta(const DeltaPoint& v);

// The polygon of the chain: restrict the dual of delta_eta to
// [1, q^n].  On Q(Delta) the slopes are lambda_i = v_i/(q^i - q^{i-1}).
NewtonPolygon newton_of_delta(const DeltaPoint& v);

// Q(Delta): the chain kills torsion lines in decreasing valuation
// order, i.e. v_{i+1} <= q v_i for consecutive coordinates.
bool in_Q_delta(const DeltaPoint& v);

// The affine map Q(Delta) -> sigma.Q(Delta): re-order the kill
// sequence of the chain by sigma (step i kills the line that was
// number sigma(i) in the sorted order); sigma is 1-based with
// sigma[m] = original line at step m+1.  Preserves the polygon.
DeltaPoint sigma_act(const std::vector<int>& sigma, const DeltaPoint& v);

// Decomposition Delta = union of sigma.Q(Delta): a permutation and a
// representative w in Q(Delta) with sigma_act(sigma, w) = v.
std::pair<std::vector<int>, DeltaPoint> delta_decomposition(
    const DeltaPoint& v);

// The simplicial isomorphism Delta -> |A|: decompose v = sigma . w and
// return sigma applied to psi(P(w)); restricted to Q(Delta) this is
// psi o newton_of_delta, and pr_Q always closes the square.
ApartmentPoint delta_to_apartment(const DeltaPoint& v);

}  // namespace newtb

#endif  // NEWTB_IWAHORI_HPP
