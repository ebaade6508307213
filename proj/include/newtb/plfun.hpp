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

#ifndef NEWTB_PLFUN_HPP
#define NEWTB_PLFUN_HPP

#include <utility>
#include <vector>

#include "newtb/rational.hpp"

namespace newtb {

// Continuous piecewise-linear function on a rational interval.
//
// The function is stored in canonical form: breakpoints with strictly
// increasing abscissae and no three collinear consecutive points.  The
// domain is [lo, hi] with hi = +inf allowed; on an unbounded domain the
// function continues past the last breakpoint with slope `tail`.
// Two PLFun compare equal iff their canonical forms are identical,
// which makes the Legendre involution and composition identities exact
// equalities of representations.
//
// Sign convention for duality (fixed once, used everywhere): for a
// convex f the dual is
//     f^*(s) = sup { t | f(x) >= -s x + t  for all x }
//            = inf_x ( f(x) + s x ),
// a concave function of the slope parameter s, and for a concave g the
// inverse construction is
//     g^*(x) = sup_s ( g(s) - s x ),
// convex again.  legendre_dual() picks the orientation from its input,
// so applying it twice returns the original function on its domain.
class PLFun {
public:
  using Point = std::pair<Rational, Rational>;  // (x, y), y finite

  // Convexity flag.  When set it is verified against the chord slopes;
  // legendre_dual uses it to orient affine functions, for which the
  // shape alone cannot tell the two dual constructions apart.
  enum class Shape { unmarked, convex, concave };

  PLFun() = default;

  // Bounded graph through `pts` (x strictly increasing after sorting).
  static PLFun bounded(std::vector<Point> pts);
  // Unbounded graph: breakpoints, then slope `tail` on [last x, +inf).
  static PLFun unbounded(std::vector<Point> pts, Rational tail);
  // The affine segment from (x0,y0) to (x1,y1).
  static PLFun segment(const Rational& x0, const Rational& y0,
                       const Rational& x1, const Rational& y1);
  // Constant c on [lo, hi] (hi may be +inf).
  static PLFun constant(const Rational& lo, const Rational& hi,
                        const Rational& c);
  // x |-> x on [lo, hi].
  static PLFun identity(const Rational& lo, const Rational& hi);

  bool is_unbounded() const { return unbounded_; }
  const Rational& domain_lo() const { return pts_.front().first; }
  // +inf when the domain is unbounded.
  Rational domain_hi() const {
    return unbounded_ ? Rational::inf() : pts_.back().first;
  }
  const std::vector<Point>& breakpoints() const { return pts_; }
  const Rational& tail_slope() const { return tail_; }

  bool contains(const Rational& x) const;
  Rational operator()(const Rational& x) const;  // exact interpolation

  // Chord slopes, one per segment, tail slope appended when unbounded.
  std::vector<Rational> slopes() const;
  bool is_convex() const;
  bool is_concave() const;
  // Non-decreasing / strictly increasing as a function.
  bool is_nondecreasing() const;
  bool is_strictly_increasing() const;

  // Value approached at the top end of the domain; +inf if the function
  // grows without bound.
  Rational sup_value() const;

  PLFun restrict(const Rational& lo, const Rational& hi) const;

  Shape shape_hint() const { return shape_; }
  // Marks the function; the flag is verified against the graph.
  PLFun marked(Shape s) const;

  // Equality is equality of canonical forms; the shape flag is
  // advisory and does not participate.
  bool operator==(const PLFun& o) const {
    return unbounded_ == o.unbounded_ && pts_ == o.pts_ &&
           (!unbounded_ || tail_ == o.tail_);
  }
  bool operator!=(const PLFun& o) const { return !(*this == o); }

private:
  void canonicalize();

  std::vector<Point> pts_;
  bool unbounded_ = false;
  Rational tail_;
  Shape shape_ = Shape::unmarked;
};

// Lower convex envelope of a finite point set.  Points with y = +inf
// are admitted only on the left of the finite support (x <= min finite
// x) where they act as a wall and do not affect the envelope; anywhere
// else they raise an argument error.  At least two distinct finite
// abscissae are required.
PLFun lower_convex_hull(std::vector<std::pair<Rational, Rational>> points);

// Legendre dual in the Appendix-style convention described above.
// Affine inputs are treated as convex.
PLFun legendre_dual(const PLFun& f);

// Exact composition f o g for non-decreasing g whose range lies in the
// domain of f.
PLFun compose(const PLFun& f, const PLFun& g);

// Inverse of a strictly increasing function.
PLFun inverse(const PLFun& f);

// Right-continuous step function: value values[i] on [xs[i], xs[i+1]),
// and values.back() on [xs.back(), hi] (hi may be +inf).  Only used
// where a function is integrated, so the convention at the jumps is
// immaterial.
class StepFun {
public:
  StepFun(std::vector<Rational> xs, std::vector<Rational> values,
          Rational hi);

  const std::vector<Rational>& xs() const { return xs_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& domain_lo() const { return xs_.front(); }
  const Rational& domain_hi() const { return hi_; }
  Rational operator()(const Rational& x) const;

private:
  std::vector<Rational> xs_;
  std::vector<Rational> values_;
  Rational hi_;
};

// Exact integral of a step function over [a, b], a <= b, both within
// the domain.
Rational integrate_step(const StepFun& g, const Rational& a,
                        const Rational& b);

// Integral of g from its domain start, as a PLFun (used to build
// Herbrand functions from counting functions).
PLFun integrate_to_plfun(const StepFun& g);

}  // namespace newtb

#endif  // NEWTB_PLFUN_HPP
