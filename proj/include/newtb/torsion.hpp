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

#ifndef NEWTB_TORSION_HPP
#define NEWTB_TORSION_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "newtb/building.hpp"
#include "newtb/newton.hpp"

namespace newtb {

// Brute-force model of the torsion module of a height-n formal module
// with the valuation induced by a Newton polygon.
//
// The base ring is modeled in equal characteristic, O = F_q[[pi]]:
// every formula implemented here depends only on the O/pi^k-module
// structure and on F_q-counting, never on the ring being of mixed
// characteristic, so exact finite arithmetic suffices.

// The field with q = p^r elements.  Elements are encoded as integers
// in [0, q): the base-p digits are the coordinates in a fixed F_p
// basis.  Multiplication reduces modulo a monic irreducible found by
// search; addition is digit-wise mod p.
class GaloisField {
public:
  explicit GaloisField(std::int64_t q);

  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }
  int degree() const { return r_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;

private:
  std::int64_t q_;
  std::int64_t p_;
  int r_;
  std::vector<int> modulus_;  // monic irreducible, degree r_, low-first
  int raw_mul(int a, int b) const;
};

// Element of (O/pi^k)^n seen as a pi^k-torsion point: coordinate i is
// the class of c_i in O/pi^k via x = sum_i c_i pi^{-k} e_i.  Stored as
// n coefficient rows of length k (low pi-degree first) over F_q.
class TorsionVector {
public:
  TorsionVector(std::shared_ptr<const GaloisField> field, int n, int level);

  int n() const { return static_cast<int>(coords_.size()); }
  int level() const { return level_; }
  const GaloisField& field() const { return *field_; }
  const std::shared_ptr<const GaloisField>& field_ptr() const {
    return field_;
  }

  int coeff(int i, int j) const { return coords_[i][j]; }  // 0-based
  void set_coeff(int i, int j, int v);

  // pi-order of coordinate i: smallest m >= 0 with pi^m c_i = 0 in the
  // torsion reading; 0 for a zero coordinate.
  int coordinate_order(int i) const;
  // Order of the vector: max over coordinates.
  int order() const;
  bool is_zero() const;

  TorsionVector operator+(const TorsionVector& o) const;
  TorsionVector operator-(const TorsionVector& o) const;
  TorsionVector scalar_mul(int c) const;  // c in F_q
  TorsionVector pi_mul() const;
  // The same point seen at a higher level.
  TorsionVector lift_to_level(int new_level) const;
  // Basis point pi^{-order} e_i at the vector's level.
  static TorsionVector basis_point(std::shared_ptr<const GaloisField> field,
                                   int n, int level, int i, int order);

  bool operator==(const TorsionVector& o) const {
    return level_ == o.level_ && coords_ == o.coords_;
  }
  bool operator<(const TorsionVector& o) const {
    if (level_ != o.level_) return level_ < o.level_;
    return coords_ < o.coords_;
  }

private:
  std::shared_ptr<const GaloisField> field_;
  int level_;
  std::vector<std::vector<int>> coords_;
};

// Finite subgroup C = <pi^{-a_1} e_1, ..., pi^{-a_n} e_n> at level
// max(a), with its elements enumerated.
struct FiniteSubgroup {
  std::vector<std::int64_t> a;
  int level = 0;
  std::vector<TorsionVector> elements;
};

// Default enumeration cap (number of elements); q^{sum a} beyond it
// raises a resource error.  Overridable per call.
inline constexpr std::uint64_t kDefaultEnumCap = 1u << 20;

// v(x) = min_i lambda_i^{(order of coordinate i)}; v(0) = +inf.
Rational valuation(const NewtonPolygon& P, const TorsionVector& x);

// k(i, mu) = sup{ k >= 0 : lambda_i^{(k)} >= mu }, 1-based output
// vector, non-increasing in i.
std::vector<std::int64_t> lower_fil_exponents(const NewtonPolygon& P,
                                              const Rational& mu);

// l(i, mu) = inf{ l >= 0 : lambda_i >= mu^{(l+2)} }, non-decreasing in i.
std::vector<std::int64_t> upper_fil_exponents(const NewtonPolygon& P,
                                              const Rational& mu);

// Vertex class of Fil_mu = [direct sum pi^{-k(i,mu)} e_i].
ApartmentVertex lower_fil_class(const NewtonPolygon& P, const Rational& mu);
// Vertex class of Fil^mu = [direct sum pi^{+l(i,mu)} e_i].
ApartmentVertex upper_fil_class(const NewtonPolygon& P, const Rational& mu);

// The ramification simplex: the b-matrix with
// lambda_i^{(b_ij+1)} >= lambda_j > lambda_i^{(b_ij+2)}, the tight
// walls (where equality holds on the left), and the vertex set
// {[Fil_mu] : 0 < mu <= lambda_n} collected over the sauts.
struct RamSimplex {
  SimplexB b;
  std::vector<std::pair<int, int>> walls;  // tight (i, j) pairs, 1-based
  std::vector<ApartmentVertex> vertices;   // sorted
};
RamSimplex ram_simplex(const NewtonPolygon& P);

// All distinct classes of the lower / upper filtration, each computed
// two ways (mu-sweep of the exponent formulas, and join/meet
// reconstruction from the ramification simplex) and asserted equal.
std::pair<std::set<ApartmentVertex>, std::set<ApartmentVertex>>
filtration_class_sets(const NewtonPolygon& P);

// C = all F_q[pi]-combinations of pi^{-a_i} e_i, enumerated (resource
// error when q^{sum a} exceeds the cap).
FiniteSubgroup subgroup(const NewtonPolygon& P,
                        const std::vector<std::int64_t>& a,
                        std::uint64_t enum_cap = kDefaultEnumCap);

// Sum of valuations over the nonzero elements of C.
Rational kernel_valuation_sum(const NewtonPolygon& P,
                              const FiniteSubgroup& C);

// v(phi(x)) = sum_{a in C} v(x - a) for the isogeny with kernel C.
Rational isogeny_point_valuation(const NewtonPolygon& P,
                                 const FiniteSubgroup& C,
                                 const TorsionVector& x);

// v(M[pi^k]) for M = span{ e_j : j != i }: the sum of the valuations of
// the nonzero pi^k-torsion points of M, computed by order-profile
// counting rather than element enumeration.
Rational complement_torsion_valuation_sum(const NewtonPolygon& P, int i,
                                          int k);

// Hodge-Tate norm ||eps_i^*|| of the i-th adapted dual basis covector:
// the stable value of (q v(M[pi^k]) - v(M[pi^{k-1}])) / (q - 1),
// accepted once two consecutive values agree and the sufficient
// condition (largest valuation among order-exactly-pi^k points of M
// at most q^n lambda_n) holds.
Rational hodge_tate_norm(const NewtonPolygon& P, int i);

// ||phi||_mu-normalized integral formula for ||phi||, lower-filtration
// variant: the exact step integral
//   (q/(q-1)) int_{mu/q^n}^mu f(l) q^{||phi||_l - ||phi||_mu} dl
//     + ||phi||_mu
// with f(l) = q^{sum_i k(i,l)} and ||phi||_l = min_i (v(phi_i) -
// k(i,l)).  The additive constant (calibrated against hodge_tate_norm)
// is not included.
Rational hodge_tate_norm_integral_lower(const NewtonPolygon& P,
                                        const std::vector<std::int64_t>& phi,
                                        const Rational& mu);

// Upper-filtration variant over [mu - 1, mu] with
// ||phi||^l = min_i (v(phi_i) + l(i,l)); valid for mu >= lambda_1 + 1.
Rational hodge_tate_norm_integral_upper(const NewtonPolygon& P,
                                        const std::vector<std::int64_t>& phi,
                                        const Rational& mu);

// Direct stabilized value of ||phi|| for a covector with integer
// coordinate valuations phi_i >= 0 (+ the convention that a zero
// coordinate is absent): min_i (phi_i + ||eps_i^*||).
Rational hodge_tate_norm_of_covector(const NewtonPolygon& P,
                                     const std::vector<std::int64_t>& phi);

// Counting function t |-> |{ x in H[pi^k] : v(x) >= t }| by profile
// counting (exact, no enumeration).
StepFun torsion_counting(const NewtonPolygon& P, int k);

}  // namespace newtb

#endif  // NEWTB_TORSION_HPP
