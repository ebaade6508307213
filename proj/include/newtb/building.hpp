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

#ifndef NEWTB_BUILDING_HPP
#define NEWTB_BUILDING_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "newtb/rational.hpp"

namespace newtb {

// Combinatorics of the standard apartment of the Bruhat-Tits building
// of PGL_n: lattice classes are integer n-vectors of exponents modulo
// the diagonal line.  The canonical representative has minimum
// coordinate 0; a vertex [<pi^{c_1} e_1, ..., pi^{c_n} e_n>] is stored
// as that representative.  Root values are alpha_ij(c) = c_j - c_i for
// i < j, which is representative-independent.

// Lattice class (vertex of the apartment).
class ApartmentVertex {
public:
  explicit ApartmentVertex(std::vector<std::int64_t> exponents);

  const std::vector<std::int64_t>& c() const { return c_; }
  int n() const { return static_cast<int>(c_.size()); }

  auto operator<=>(const ApartmentVertex& o) const = default;

private:
  std::vector<std::int64_t> c_;  // canonical: min coordinate == 0
};

// Point of the geometric realization of the apartment, same
// canonicalization with rational coordinates.
class ApartmentPoint {
public:
  explicit ApartmentPoint(std::vector<Rational> coords);
  explicit ApartmentPoint(const ApartmentVertex& v);

  const std::vector<Rational>& c() const { return c_; }
  int n() const { return static_cast<int>(c_.size()); }

  bool operator==(const ApartmentPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ApartmentPoint& o) const { return !(*this == o); }

private:
  std::vector<Rational> c_;
};

// Integer data (b_ij)_{i<j} parametrizing a maximal simplex: the one
// with vertex set { x | alpha_ij(x) in {b_ij, b_ij + 1} }.  Validity
// requires b_ik in { b_ij + b_jk, b_ij + b_jk + 1 } for all i < j < k.
class SimplexB {
public:
  SimplexB(int n, std::vector<std::int64_t> b_lex);  // lexicographic (i,j)

  int n() const { return n_; }
  std::int64_t b(int i, int j) const;              // 1 <= i < j <= n
  const std::vector<std::int64_t>& lex() const { return b_; }

  auto operator<=>(const SimplexB& o) const = default;

private:
  int n_;
  std::vector<std::int64_t> b_;
};

// Root value alpha_ij, 1 <= i < j <= n.
std::int64_t alpha(int i, int j, const ApartmentVertex& x);
Rational alpha(int i, int j, const ApartmentPoint& x);

// The n vertices of the maximal simplex S; with restrict_to_Q, only
// those lying in the quartier Q = { c_1 <= ... <= c_n }.
std::vector<ApartmentVertex> simplex_vertices(const SimplexB& S,
                                              bool restrict_to_Q = false);

// Inverse of simplex_vertices: b_ij = min over the vertex set of
// alpha_ij.  The input must be the vertex set of a maximal simplex.
SimplexB b_of_simplex(const std::vector<ApartmentVertex>& vertices);

// Projection onto the quartier: sort coordinates ascending, then
// canonicalize.  Fixes Q pointwise and is constant on W-orbits.
ApartmentVertex pr_Q(const ApartmentVertex& x);
ApartmentPoint pr_Q(const ApartmentPoint& x);
bool in_Q(const ApartmentVertex& x);   // ascending representative
bool in_Q(const ApartmentPoint& x);

// Translation by an integer vector (the (pi^{a_1},...,pi^{a_n}) action).
ApartmentVertex translate(const std::vector<std::int64_t>& a,
                          const ApartmentVertex& x);
ApartmentPoint translate(const std::vector<std::int64_t>& a,
                         const ApartmentPoint& x);

// x v y = { [L_1 + L_2] }: coordinate-wise minima over all relative
// shifts of representatives.  x ^ y = { [L_1 n L_2] }: coordinate-wise
// maxima.  Both are finite sets of classes.
std::set<ApartmentVertex> join(const ApartmentVertex& x,
                               const ApartmentVertex& y);
std::set<ApartmentVertex> meet(const ApartmentVertex& x,
                               const ApartmentVertex& y);

// Enclos of a nonempty finite vertex set: all classes x with
// min_M alpha_ij <= alpha_ij(x) <= max_M alpha_ij for every root.
std::set<ApartmentVertex> enclos(const std::set<ApartmentVertex>& M);

// Dual lattice class: negate exponents, canonicalize.  Involution with
// alpha_ij(dual x) = -alpha_ij(x).
ApartmentVertex dual_vertex(const ApartmentVertex& x);
ApartmentPoint dual_point(const ApartmentPoint& x);

// Vertex label [L_origin : L] mod n.
int label(const ApartmentVertex& x, const ApartmentVertex& origin);
int label(const ApartmentVertex& x);  // relative to the zero class

// The cyclic rotation group of a chamber: for each shift a in Z/n the
// permutation of `chamber` (as an index map) sending the vertex with
// label l to the vertex with label l + a.  Requires a chamber (n
// vertices with pairwise-distinct labels forming a maximal simplex).
std::vector<std::vector<int>> rotation_group(
    const std::vector<ApartmentVertex>& chamber);

}  // namespace newtb

#endif  // NEWTB_BUILDING_HPP
