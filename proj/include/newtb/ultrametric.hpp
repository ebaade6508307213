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

#ifndef NEWTB_ULTRAMETRIC_HPP
#define NEWTB_ULTRAMETRIC_HPP

#include <vector>

#include "newtb/newton.hpp"
#include "newtb/plfun.hpp"
#include "newtb/rational.hpp"

namespace newtb {

// Abstract root data of a separable polynomial over an ultrametric
// field: the root valuations v_i = v(alpha_i) and the pairwise
// distances d_ij = v(alpha_i - alpha_j).  Everything the monogenic
// ramification algorithms need depends only on this data, so no actual
// field elements are ever manipulated.
class UltrametricRoots {
public:
  // d is an m x m symmetric matrix, d_ii = +inf.
  UltrametricRoots(std::vector<Rational> valuations,
                   std::vector<std::vector<Rational>> distances);

  int m() const { return static_cast<int>(v_.size()); }
  const std::vector<Rational>& v() const { return v_; }
  const Rational& d(int i, int j) const { return d_[i][j]; }  // 0-based
  const std::vector<std::vector<Rational>>& d() const { return d_; }

private:
  std::vector<Rational> v_;
  std::vector<std::vector<Rational>> d_;
};

// Newt*(s) = inf { v(f(x)) | v(x) >= s } = sum_i min(s, v_i).
Rational newt_star(const UltrametricRoots& roots, const Rational& s);

// One class of the fixpoint partition computing the geometric
// connected components of { x | v(f(x)) >= eps }, with the radius of
// the ball around its roots.
struct BallComponent {
  std::vector<int> members;  // 0-based root indices, increasing
  Rational radius;
};

// Iterated refinement of the full relation by the threshold inequality
// d_ij >= (eps - sum_{j' outside class} d_{j'j}) / |class| down to its
// fixpoint.  Classes come out as d-cliques at or above their radius.
std::vector<BallComponent> ball_components(const UltrametricRoots& roots,
                                           const Rational& eps);

// Herbrand function from root data with a distinguished zero root
// (v = +inf, d_{0j} = v_j):  eta(s) = s + sum_{i != zero} min(s, d_0i).
PLFun herbrand_eta_from_roots(const UltrametricRoots& roots, int zero_index);
PLFun herbrand_psi_from_roots(const UltrametricRoots& roots, int zero_index);

// Radius of the ball component containing the zero root at level eps;
// checked against psi(eps) (the Herbrand fibration X^eps = B(0, psi(eps))).
Rational component_of_zero(const UltrametricRoots& roots, int zero_index,
                           const Rational& eps);

// Root valuations (with multiplicity) of the composite f o g, where f
// and g are given by the root-valuation multisets of two torsion
// polynomials (+inf entries mark zero roots).  Each root b of f
// contributes the slopes of the convex envelope of the polygon of g
// and the point (0, v(b)).
std::vector<Rational> composed_root_valuations(
    const std::vector<Rational>& f_vals, const std::vector<Rational>& g_vals);

// Checks Newt*_{f o g} = Newt*_f o Newt*_g as an exact PLFun equality,
// with the left side built from composed_root_valuations.
bool compose_star_check(const std::vector<Rational>& f_vals,
                        const std::vector<Rational>& g_vals);

// Root-valuation multiset of multiplication by pi on a polygon P (the
// zero root reported as +inf).
std::vector<Rational> pi_multiplication_root_valuations(
    const NewtonPolygon& P);

}  // namespace newtb

#endif  // NEWTB_ULTRAMETRIC_HPP
