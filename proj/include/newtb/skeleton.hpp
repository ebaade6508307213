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

#ifndef NEWTB_SKELETON_HPP
#define NEWTB_SKELETON_HPP

#include <set>
#include <string>
#include <vector>

#include "newtb/building.hpp"
#include "newtb/hecke.hpp"
#include "newtb/newton.hpp"

namespace newtb {

// The piecewise-affine bijection psi: Newt -> Q anchored on the vertex
// polygons: psi(P(x)) = x for every vertex x of the quartier, affine
// on every chamber.

// psi(P): locate the chamber of P, solve exactly for the barycentric
// weights of P among the chamber's vertex polygons, and push the
// weights onto the vertices.
ApartmentPoint psi_map(const NewtonPolygon& P);

// Inverse: barycentric combination of the vertex polygons of the
// chamber containing x (x in the closed quartier).
NewtonPolygon psi_inv(const Context& ctx, const ApartmentPoint& x);

// Barycentric weights of P in its chamber, aligned with the chamber's
// sorted vertex list.  Exposed for the simplicial-affinity tests.
struct ChamberCoordinates {
  std::vector<ApartmentVertex> vertices;  // sorted
  std::vector<Rational> weights;          // nonnegative, sum 1
};
ChamberCoordinates chamber_coordinates(const NewtonPolygon& P);

// Existence of the canonical subgroup of rank r and level k:
// lambda_r^{(k)} > lambda_{r+1}, asserted equivalent to
// alpha_{r,r+1}(psi(P)) > k - 1.
bool canonical_subgroup_exists(const NewtonPolygon& P, int r, long long k);

// W_aff-orbit of a quartier vertex, restricted to Q, with translation
// entries bounded by `bound` in absolute value.
std::set<ApartmentVertex> hecke_orbit(const ApartmentVertex& x,
                                      std::int64_t bound);

// One extremal point of the Gross-Hopkins polytope.
struct GrossHopkinsPoint {
  std::vector<int> subset;            // A, increasing, within 1..n-1
  NewtonPolygon polygon;              // P_A
  std::vector<Rational> coefficients; // a_0, then a_k aligned with A
};

// All 2^{n-1} extremal points, each validated against the barycentric
// decomposition a_0 P_0 + sum a_k P(omega_{i_k}) by an independent
// exact linear solve.
std::vector<GrossHopkinsPoint> gh_polytope(const Context& ctx);

// Linear inequality  sum coeffs[i] t_i  (>= | >) rhs  over rationals.
struct LinIneq {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;
};

// Exact feasibility of a finite system by Fourier-Motzkin elimination.
bool fm_feasible(std::vector<LinIneq> system, int num_vars);

// Fundamental-domain test in barycentric coordinates of |S_0| (vertex
// order: origin, omega_1, ..., omega_{n-1}).  D is given by rational
// inequalities in the n barycentric coordinates; the implicit simplex
// constraints t_i >= 0, sum t_i = 1 are always added.
struct DomainCheck {
  bool covers = false;
  // For each rotation sigma_a (a = 0..n-1), the inequality system of
  // the face D n sigma_a D, rendered in canonical text.
  std::vector<std::string> faces;
};
DomainCheck fundamental_domain_check(const Context& ctx,
                                     const std::vector<LinIneq>& D);

// The point of the dual building attached to the Hodge-Tate map: the
// class of the norm phi |-> min_i (v(phi_i) + ||eps_i^*||), i.e. the
// apartment point with coordinates -||eps_i^*||.  Asserted to lie in
// the geometric realization of the dual ramification simplex.
ApartmentPoint hodge_tate_point(const NewtonPolygon& P);

}  // namespace newtb

#endif  // NEWTB_SKELETON_HPP
