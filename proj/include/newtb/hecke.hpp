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

#ifndef NEWTB_HECKE_HPP
#define NEWTB_HECKE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "newtb/building.hpp"
#include "newtb/newton.hpp"

namespace newtb {

// Closed-form Hecke operators (pi^{-a_1}, ..., pi^{-a_n}) on the space
// of Newton polygons: quotient by the finite subgroup generated by the
// pi^{-a_i} e_i in an adapted basis, realized purely on slope data.

// A(0) = 1, A(k) = q^k - q^{k-1}: the number of scalars of exact
// pi-order k.
Int hecke_A(std::int64_t q, long long k);

// v(phi(x)) for the isogeny with kernel <pi^{-a_i} e_i> and a point
// x = sum_{i in I} x_i e_i with v(x_i) = -orders[i], orders[i] > a_i:
//   q^{sum_{i in I} a_i} * sum over profiles (k_i)_{i not in I},
//   0 <= k_i <= a_i, of prod A(k_i) *
//   inf( {lambda_i^{(orders_i)} : i in I} u {lambda_i^{(k_i)}} ).
// Evaluated by grouping profiles by threshold, polynomial time.
// I and orders use 1-based indices; orders aligns with I.
Rational point_valuation_formula(const NewtonPolygon& P,
                                 const std::vector<std::int64_t>& a,
                                 const std::vector<int>& I,
                                 const std::vector<std::int64_t>& orders);

struct HeckeImage {
  NewtonPolygon polygon;
  // sigma[m] = original index (1-based) whose transported basis vector
  // sits in slot m+1; sorts lambda_i^{(a_i)} non-increasingly, ties
  // broken by smaller original index.
  std::vector<int> sigma;
};

// The operator (pi^{-a_1}, ..., pi^{-a_n}) applied to P.
HeckeImage hecke_apply(const NewtonPolygon& P,
                       const std::vector<std::int64_t>& a);

// lambda'_i^{(k)} of the image polygon, computed from the source data
// (the transported-basis display) and asserted equal to iterating on
// the image polygon.
Rational transported_lambda_iter(const NewtonPolygon& P,
                                 const std::vector<std::int64_t>& a, int i,
                                 long long k);

// The polygon P(x) attached to an apartment vertex (canonical
// representative sorted ascending; apply pr_Q first).  Computed three
// ways -- Hecke action on the flat polygon, the closed-form display,
// and the uniqueness characterization lambda_i^{(a_j - a_i + 1)} =
// lambda_j -- which must agree.
NewtonPolygon vertex_polygon(const Context& ctx, const ApartmentVertex& x);

// The flat polygon (all slopes 1/(q^n - 1)).
NewtonPolygon flat_polygon(const Context& ctx);

struct Chamber {
  SimplexB b;
  std::vector<std::pair<int, int>> walls;  // tight pairs (1-based)
};

// The chamber data of P: b_ij with
// lambda_i^{(b_ij+1)} >= lambda_j > lambda_i^{(b_ij+2)}, plus the
// pairs where the left inequality is an equality.
Chamber chamber_of(const NewtonPolygon& P);

// Closed membership test of Newt(S):
// lambda_i^{(b_ij+1)} >= lambda_j >= lambda_i^{(b_ij+2)} for all i < j.
bool in_chamber(const NewtonPolygon& P, const SimplexB& S);

// Witness for (pi^{-a}) o (pi^{-b}) = (pi^{-(a_{sigma(1)}+b_1)}, ...):
// searches the symmetric group, asserting a witness exists; with b
// ascending the identity must work and is returned.
std::vector<int> monoid_compose_check(const NewtonPolygon& P,
                                      const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b);

}  // namespace newtb

#endif  // NEWTB_HECKE_HPP
