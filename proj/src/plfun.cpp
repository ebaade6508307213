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

#include "newtb/plfun.hpp"

#include <algorithm>

namespace newtb {

namespace {

Rational chord_slope(const PLFun::Point& a, const PLFun::Point& b) {
  return (b.second - a.second) / (b.first - a.first);
}

}  // namespace

PLFun PLFun::bounded(std::vector<Point> pts) {
  PLFun f;
  f.pts_ = std::move(pts);
  f.unbounded_ = false;
  f.canonicalize();
  return f;
}

PLFun PLFun::unbounded(std::vector<Point> pts, Rational tail) {
  PLFun f;
  f.pts_ = std::move(pts);
  f.unbounded_ = true;
  f.tail_ = std::move(tail);
  NEWTB_REQUIRE(!f.tail_.is_inf(), "plfun: +inf tail slope");
  f.canonicalize();
  return f;
}

PLFun PLFun::segment(const Rational& x0, const Rational& y0,
                     const Rational& x1, const Rational& y1) {
  return bounded({{x0, y0}, {x1, y1}});
}

PLFun PLFun::constant(const Rational& lo, const Rational& hi,
                      const Rational& c) {
  if (hi.is_inf()) return unbounded({{lo, c}}, Rational(0));
  return bounded({{lo, c}, {hi, c}});
}

PLFun PLFun::identity(const Rational& lo, const Rational& hi) {
  if (hi.is_inf()) return unbounded({{lo, lo}}, Rational(1));
  return bounded({{lo, lo}, {hi, hi}});
}

void PLFun::canonicalize() {
  NEWTB_REQUIRE(!pts_.empty(), "plfun: no breakpoints");
  std::sort(pts_.begin(), pts_.end(),
            [](const Point& a, const Point& b) { return a.first < b.first; });
  for (const Point& p : pts_) {
    NEWTB_REQUIRE(!p.first.is_inf() && !p.second.is_inf(),
                  "plfun: infinite breakpoint");
  }
  for (size_t i = 0; i + 1 < pts_.size(); ++i) {
    NEWTB_REQUIRE(pts_[i].first != pts_[i + 1].first,
                  "plfun: duplicate abscissa");
  }
  NEWTB_REQUIRE(unbounded_ || pts_.size() >= 2 || pts_.size() == 1,
                "plfun: empty graph");
  // Merge collinear interior points; drop a terminal point that merely
  // continues the tail.
  std::vector<Point> out;
  out.reserve(pts_.size());
  for (const Point& p : pts_) {
    while (out.size() >= 2 &&
           chord_slope(out[out.size() - 2], out.back()) ==
               chord_slope(out.back(), p)) {
      out.pop_back();
    }
    out.push_back(p);
  }
  if (unbounded_) {
    while (out.size() >= 2 &&
           chord_slope(out[out.size() - 2], out.back()) == tail_) {
      out.pop_back();
    }
  }
  pts_ = std::move(out);
}

bool PLFun::contains(const Rational& x) const {
  if (x.is_inf()) return false;
  if (x < domain_lo()) return false;
  return unbounded_ || x <= pts_.back().first;
}

Rational PLFun::operator()(const Rational& x) const {
  NEWTB_REQUIRE(contains(x), "plfun: evaluation outside domain");
  if (unbounded_ && x >= pts_.back().first) {
    return pts_.back().second + tail_ * (x - pts_.back().first);
  }
  // Rightmost breakpoint with abscissa <= x.
  size_t lo = 0, hi = pts_.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi + 1) / 2;
    if (pts_[mid].first <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (pts_[lo].first == x) return pts_[lo].second;
  NEWTB_CHECK(lo + 1 < pts_.size(), "plfun: interpolation index");
  return pts_[lo].second +
         chord_slope(pts_[lo], pts_[lo + 1]) * (x - pts_[lo].first);
}

std::vector<Rational> PLFun::slopes() const {
  std::vector<Rational> s;
  for (size_t i = 0; i + 1 < pts_.size(); ++i) {
    s.push_back(chord_slope(pts_[i], pts_[i + 1]));
  }
  if (unbounded_) s.push_back(tail_);
  return s;
}

bool PLFun::is_convex() const {
  std::vector<Rational> s = slopes();
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] > s[i + 1]) return false;
  }
  return true;
}

bool PLFun::is_concave() const {
  std::vector<Rational> s = slopes();
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] < s[i + 1]) return false;
  }
  return true;
}

bool PLFun::is_nondecreasing() const {
  for (const Rational& s : slopes()) {
    if (s.is_negative()) return false;
  }
  return true;
}

bool PLFun::is_strictly_increasing() const {
  std::vector<Rational> s = slopes();
  if (s.empty()) return false;
  for (const Rational& v : s) {
    if (!v.is_positive()) return false;
  }
  return true;
}

Rational PLFun::sup_value() const {
  if (!unbounded_) return pts_.back().second;
  if (tail_.is_positive()) return Rational::inf();
  NEWTB_CHECK(!tail_.is_negative() || true, "");
  return pts_.back().second;  // tail <= 0: supremum at the last breakpoint
}

PLFun PLFun::restrict(const Rational& lo, const Rational& hi) const {
  NEWTB_REQUIRE(contains(lo), "plfun: restriction start outside domain");
  NEWTB_REQUIRE(hi.is_inf() ? unbounded_ : (contains(hi) && lo < hi),
                "plfun: bad restriction interval");
  std::vector<Point> pts;
  pts.push_back({lo, (*this)(lo)});
  for (const Point& p : pts_) {
    if (p.first > lo && (hi.is_inf() || p.first < hi)) pts.push_back(p);
  }
  if (hi.is_inf()) return PLFun::unbounded(std::move(pts), tail_).marked(shape_);
  pts.push_back({hi, (*this)(hi)});
  return PLFun::bounded(std::move(pts)).marked(shape_);
}

PLFun PLFun::marked(Shape s) const {
  if (s == Shape::convex) {
    NEWTB_REQUIRE(is_convex(), "plfun: convex flag on a non-convex graph");
  } else if (s == Shape::concave) {
    NEWTB_REQUIRE(is_concave(), "plfun: concave flag on a non-concave graph");
  }
  PLFun out = *this;
  out.shape_ = s;
  return out;
}

PLFun lower_convex_hull(std::vector<std::pair<Rational, Rational>> points) {
  // Split the walls (y = +inf) from the finite support.
  std::vector<PLFun::Point> finite;
  std::vector<Rational> walls;
  for (auto& p : points) {
    NEWTB_REQUIRE(!p.first.is_inf(), "hull: infinite abscissa");
    if (p.second.is_inf()) {
      walls.push_back(p.first);
    } else {
      finite.push_back(std::move(p));
    }
  }
  std::sort(finite.begin(), finite.end());
  // Keep the lowest point per abscissa.
  std::vector<PLFun::Point> uniq;
  for (const auto& p : finite) {
    if (!uniq.empty() && uniq.back().first == p.first) {
      if (p.second < uniq.back().second) uniq.back().second = p.second;
    } else {
      uniq.push_back(p);
    }
  }
  NEWTB_REQUIRE(uniq.size() >= 2, "hull: need two distinct finite abscissae");
  for (const Rational& w : walls) {
    NEWTB_REQUIRE(w <= uniq.front().first,
                  "hull: wall point inside the finite support");
  }
  // Monotone chain, lower hull only.
  std::vector<PLFun::Point> hull;
  for (const auto& p : uniq) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Drop b unless it makes a strict right turn below chord a-p.
      Rational lhs = (b.second - a.second) * (p.first - a.first);
      Rational rhs = (p.second - a.second) * (b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return PLFun::bounded(std::move(hull));
}

PLFun legendre_dual(const PLFun& f) {
  // Orientation: the verified flag wins; unmarked affine inputs are
  // treated as convex.
  bool convex;
  if (f.shape_hint() == PLFun::Shape::convex) {
    convex = true;
    NEWTB_REQUIRE(f.is_convex(), "legendre_dual: stale convex flag");
  } else if (f.shape_hint() == PLFun::Shape::concave) {
    convex = false;
    NEWTB_REQUIRE(f.is_concave(), "legendre_dual: stale concave flag");
  } else {
    convex = f.is_convex();
    NEWTB_REQUIRE(convex || f.is_concave(),
                  "legendre_dual: input neither convex nor concave");
  }
  const auto& pts = f.breakpoints();
  NEWTB_REQUIRE(pts.size() >= 2 || f.is_unbounded(),
                "legendre_dual: degenerate single-point domain");
  std::vector<Rational> slopes = f.slopes();

  // The dual is an envelope of one affine function per breakpoint:
  //   convex  f:  s |-> min_i ( y_i + s x_i )   (concave result)
  //   concave f:  x |-> max_i ( y_i - x s_i )   (convex result)
  // with kinks exactly at the (negated) segment slopes of f.  The
  // domain starts where the envelope stops being finite, except that a
  // bounded input keeps its boundary-supported linear piece down to 0
  // so that the Herbrand functions live on [0, +inf).
  Rational extreme = slopes.empty() ? Rational(0) : slopes.back();
  Rational start;  // left end of the dual domain
  if (convex) {
    start = f.is_unbounded() ? -f.tail_slope()
                             : newtb::min(Rational(0), -extreme);
  } else {
    start = f.is_unbounded() ? f.tail_slope()
                             : newtb::min(Rational(0), extreme);
  }

  auto line_at = [&](size_t i, const Rational& s) {
    return convex ? pts[i].second + s * pts[i].first
                  : pts[i].second - s * pts[i].first;
  };

  // Kink abscissae of the dual, in increasing order.  For convex f the
  // active breakpoint at s in [-slope_j, -slope_{j-1}] is P_j; for
  // concave f the active breakpoint at x in [slope_j, slope_{j-1}] is
  // P_j as well (slopes are decreasing there).
  std::vector<Rational> kinks;
  for (size_t j = 0; j < slopes.size(); ++j) {
    Rational k = convex ? -slopes[j] : slopes[j];
    if (k > start) kinks.push_back(k);
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

  auto envelope = [&](const Rational& s) {
    Rational best = line_at(0, s);
    for (size_t i = 1; i < pts.size(); ++i) {
      Rational v = line_at(i, s);
      if (convex ? v < best : v > best) best = v;
    }
    return best;
  };

  std::vector<PLFun::Point> out;
  out.push_back({start, envelope(start)});
  for (const Rational& k : kinks) out.push_back({k, envelope(k)});
  // Final slope: the first breakpoint stays active for large parameter.
  Rational tail = convex ? pts.front().first : -pts.front().first;
  return PLFun::unbounded(std::move(out), tail)
      .marked(convex ? PLFun::Shape::concave : PLFun::Shape::convex);
}

PLFun compose(const PLFun& f, const PLFun& g) {
  NEWTB_REQUIRE(g.is_nondecreasing(), "compose: inner function decreases");
  NEWTB_REQUIRE(f.contains(g(g.domain_lo())),
                "compose: range of g leaves the domain of f");
  Rational gsup = g.sup_value();
  if (gsup.is_inf()) {
    NEWTB_REQUIRE(f.is_unbounded(),
                  "compose: range of g leaves the domain of f");
  } else {
    NEWTB_REQUIRE(f.contains(gsup),
                  "compose: range of g leaves the domain of f");
  }

  // Candidate breakpoints: those of g, plus preimages under g of the
  // breakpoints of f.
  std::vector<Rational> xs;
  for (const auto& p : g.breakpoints()) xs.push_back(p.first);
  const auto& gp = g.breakpoints();
  auto add_preimages = [&](const Rational& y) {
    for (size_t i = 0; i + 1 < gp.size(); ++i) {
      const Rational& y0 = gp[i].second;
      const Rational& y1 = gp[i + 1].second;
      if (y0 < y && y < y1) {
        Rational slope = (y1 - y0) / (gp[i + 1].first - gp[i].first);
        xs.push_back(gp[i].first + (y - y0) / slope);
      }
    }
    if (g.is_unbounded() && g.tail_slope().is_positive() &&
        y > gp.back().second) {
      xs.push_back(gp.back().first + (y - gp.back().second) / g.tail_slope());
    }
  };
  for (const auto& p : f.breakpoints()) add_preimages(p.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<PLFun::Point> pts;
  for (const Rational& x : xs) pts.push_back({x, f(g(x))});
  if (!g.is_unbounded()) return PLFun::bounded(std::move(pts));
  Rational tail = Rational(0);
  if (g.tail_slope().is_positive()) {
    tail = f.tail_slope() * g.tail_slope();
  } else if (g.tail_slope().is_zero()) {
    tail = Rational(0);
  } else {
    throw_argument("compose: inner function decreases");
  }
  return PLFun::unbounded(std::move(pts), tail);
}

PLFun inverse(const PLFun& f) {
  NEWTB_REQUIRE(f.is_strictly_increasing(),
                "inverse: function not strictly increasing");
  std::vector<PLFun::Point> pts;
  for (const auto& p : f.breakpoints()) pts.push_back({p.second, p.first});
  if (f.is_unbounded()) {
    return PLFun::unbounded(std::move(pts), Rational(1) / f.tail_slope());
  }
  return PLFun::bounded(std::move(pts));
}

StepFun::StepFun(std::vector<Rational> xs, std::vector<Rational> values,
                 Rational hi)
    : xs_(std::move(xs)), values_(std::move(values)), hi_(std::move(hi)) {
  NEWTB_REQUIRE(!xs_.empty() && xs_.size() == values_.size(),
                "stepfun: malformed data");
  for (size_t i = 0; i + 1 < xs_.size(); ++i) {
    NEWTB_REQUIRE(xs_[i] < xs_[i + 1], "stepfun: abscissae not increasing");
  }
  NEWTB_REQUIRE(hi_.is_inf() || hi_ >= xs_.back(), "stepfun: bad domain end");
}

Rational StepFun::operator()(const Rational& x) const {
  NEWTB_REQUIRE(x >= xs_.front() && (hi_.is_inf() || x <= hi_),
                "stepfun: evaluation outside domain");
  size_t i = 0;
  while (i + 1 < xs_.size() && xs_[i + 1] <= x) ++i;
  return values_[i];
}

Rational integrate_step(const StepFun& g, const Rational& a,
                        const Rational& b) {
  NEWTB_REQUIRE(a <= b, "integrate_step: reversed bounds");
  NEWTB_REQUIRE(a >= g.domain_lo() &&
                    (g.domain_hi().is_inf() || b <= g.domain_hi()),
                "integrate_step: bounds outside domain");
  if (a == b) return Rational(0);
  Rational total(0);
  const auto& xs = g.xs();
  const auto& vs = g.values();
  for (size_t i = 0; i < xs.size(); ++i) {
    Rational seg_lo = newtb::max(xs[i], a);
    Rational seg_hi = (i + 1 < xs.size()) ? newtb::min(xs[i + 1], b) : b;
    if (seg_lo < seg_hi) total += vs[i] * (seg_hi - seg_lo);
  }
  return total;
}

PLFun integrate_to_plfun(const StepFun& g) {
  std::vector<PLFun::Point> pts;
  Rational acc(0);
  const auto& xs = g.xs();
  const auto& vs = g.values();
  pts.push_back({xs.front(), acc});
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    acc += vs[i] * (xs[i + 1] - xs[i]);
    pts.push_back({xs[i + 1], acc});
  }
  if (g.domain_hi().is_inf()) {
    return PLFun::unbounded(std::move(pts), vs.back());
  }
  acc += vs.back() * (g.domain_hi() - xs.back());
  if (g.domain_hi() > xs.back()) pts.push_back({g.domain_hi(), acc});
  return PLFun::bounded(std::move(pts));
}

}  // namespace newtb
