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

#include "newtb/ultrametric.hpp"

#include <algorithm>
#include <numeric>

namespace newtb {

UltrametricRoots::UltrametricRoots(
    std::vector<Rational> valuations,
    std::vector<std::vector<Rational>> distances)
    : v_(std::move(valuations)), d_(std::move(distances)) {
  const int m = static_cast<int>(v_.size());
  NEWTB_REQUIRE(m >= 1, "roots: empty root set");
  NEWTB_REQUIRE(static_cast<int>(d_.size()) == m, "roots: bad matrix shape");
  for (int i = 0; i < m; ++i) {
    NEWTB_REQUIRE(static_cast<int>(d_[i].size()) == m,
                  "roots: bad matrix shape");
    NEWTB_REQUIRE(d_[i][i].is_inf(), "roots: d_ii must be +inf");
    NEWTB_REQUIRE(!v_[i].is_negative(), "roots: negative valuation");
    for (int j = 0; j < m; ++j) {
      NEWTB_REQUIRE(d_[i][j] == d_[j][i], "roots: matrix not symmetric");
      if (i != j) {
        NEWTB_REQUIRE(!d_[i][j].is_inf(),
                      "roots: off-diagonal distance must be finite");
        NEWTB_REQUIRE(!d_[i][j].is_negative(), "roots: negative distance");
      }
    }
  }
  // Ultrametric inequality.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        NEWTB_REQUIRE(d_[i][j] >= newtb::min(d_[i][k], d_[k][j]),
                      "roots: ultrametric inequality fails");
      }
    }
  }
  // Compatibility with the valuations: v_i >= min(d_ij, v_j), equality
  // when d_ij != v_j.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Rational lo = newtb::min(d_[i][j], v_[j]);
      NEWTB_REQUIRE(v_[i] >= lo, "roots: valuations incompatible");
      if (d_[i][j] != v_[j]) {
        NEWTB_REQUIRE(v_[i] == lo, "roots: valuations incompatible");
      }
    }
  }
}

Rational newt_star(const UltrametricRoots& roots, const Rational& s) {
  NEWTB_REQUIRE(!s.is_negative(), "newt_star: s must be >= 0");
  Rational total(0);
  for (const Rational& v : roots.v()) total += newtb::min(s, v);
  return total;
}

std::vector<BallComponent> ball_components(const UltrametricRoots& roots,
                                           const Rational& eps) {
  NEWTB_REQUIRE(!eps.is_negative(), "ball_components: eps must be >= 0");
  const int m = roots.m();
  // Work with the per-class budget eta_C = eps - sum_{j' outside C}
  // d(j', j); the literal refinement threshold of the display is then
  // eta_C / |C|.  Splitting a class into threshold-cliques keeps the
  // budget well defined on each part.
  struct Cls {
    std::vector<int> members;
    Rational budget;
  };
  std::vector<Cls> classes;
  {
    Cls all;
    all.members.resize(m);
    std::iota(all.members.begin(), all.members.end(), 0);
    all.budget = eps;
    classes.push_back(std::move(all));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Cls> next;
    for (const Cls& cls : classes) {
      const auto& mem = cls.members;
      Rational threshold = cls.budget / Rational((long long)mem.size());
      // Partition mem by the relation d_ij >= threshold (an
      // equivalence within the class by the ultrametric inequality).
      std::vector<int> part(mem.size(), -1);
      int nparts = 0;
      for (size_t a = 0; a < mem.size(); ++a) {
        if (part[a] != -1) continue;
        part[a] = nparts;
        for (size_t b = a + 1; b < mem.size(); ++b) {
          if (part[b] == -1 && roots.d(mem[a], mem[b]) >= threshold) {
            part[b] = nparts;
          }
        }
        ++nparts;
      }
      // Sanity: the relation really is transitive on this data.
      for (size_t a = 0; a < mem.size(); ++a) {
        for (size_t b = a + 1; b < mem.size(); ++b) {
          bool related = roots.d(mem[a], mem[b]) >= threshold;
          NEWTB_CHECK(related == (part[a] == part[b]),
                      "ball_components: refinement relation not transitive");
        }
      }
      if (nparts == 1) {
        next.push_back(cls);
        continue;
      }
      changed = true;
      for (int p = 0; p < nparts; ++p) {
        Cls sub;
        for (size_t a = 0; a < mem.size(); ++a) {
          if (part[a] == p) sub.members.push_back(mem[a]);
        }
        // New budget: subtract distances to the split-off siblings
        // (reference-point independent within the sub-class).
        Rational debit(0);
        int ref = sub.members.front();
        for (size_t a = 0; a < mem.size(); ++a) {
          if (part[a] != p) debit += roots.d(mem[a], ref);
        }
        for (int r : sub.members) {
          Rational check(0);
          for (size_t a = 0; a < mem.size(); ++a) {
            if (part[a] != p) check += roots.d(mem[a], r);
          }
          NEWTB_CHECK(check == debit,
                      "ball_components: budget depends on the reference");
        }
        sub.budget = cls.budget - debit;
        next.push_back(std::move(sub));
      }
    }
    classes = std::move(next);
  }
  std::vector<BallComponent> out;
  for (const Cls& cls : classes) {
    BallComponent bc;
    bc.members = cls.members;
    std::sort(bc.members.begin(), bc.members.end());
    bc.radius = cls.budget / Rational((long long)cls.members.size());
    // Direct characterization of the components: the budget telescopes
    // to eps - sum over roots outside the class, and the class is a
    // d-clique at or above its radius.
    Rational outside(0);
    for (int j = 0; j < m; ++j) {
      if (std::find(bc.members.begin(), bc.members.end(), j) ==
          bc.members.end()) {
        outside += roots.d(bc.members.front(), j);
      }
    }
    NEWTB_CHECK(bc.radius ==
                    (eps - outside) / Rational((long long)bc.members.size()),
                "ball_components: radius disagrees with the direct formula");
    for (int a : bc.members) {
      for (int b : bc.members) {
        if (a != b) {
          NEWTB_CHECK(roots.d(a, b) >= bc.radius,
                      "ball_components: class is not a clique above radius");
        }
      }
    }
    out.push_back(std::move(bc));
  }
  std::sort(out.begin(), out.end(),
            [](const BallComponent& a, const BallComponent& b) {
              return a.members.front() < b.members.front();
            });
  return out;
}

namespace {

void require_zero_root(const UltrametricRoots& roots, int zero_index) {
  NEWTB_REQUIRE(zero_index >= 0 && zero_index < roots.m(),
                "herbrand: zero root index out of range");
  NEWTB_REQUIRE(roots.v()[zero_index].is_inf(),
                "herbrand: distinguished root must have valuation +inf");
  for (int j = 0; j < roots.m(); ++j) {
    if (j != zero_index) {
      NEWTB_REQUIRE(roots.d(zero_index, j) == roots.v()[j],
                    "herbrand: d_0j must equal v_j");
    }
  }
}

}  // namespace

PLFun herbrand_eta_from_roots(const UltrametricRoots& roots, int zero_index) {
  require_zero_root(roots, zero_index);
  // eta(s) = s + sum min(s, d_0j): concave increasing with integer
  // slope drops at the d_0j.
  std::vector<Rational> kinks;
  for (int j = 0; j < roots.m(); ++j) {
    if (j != zero_index) kinks.push_back(roots.d(zero_index, j));
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  auto value = [&](const Rational& s) {
    Rational t = s;
    for (int j = 0; j < roots.m(); ++j) {
      if (j != zero_index) t += newtb::min(s, roots.d(zero_index, j));
    }
    return t;
  };
  std::vector<PLFun::Point> pts{{Rational(0), Rational(0)}};
  for (const Rational& k : kinks) pts.push_back({k, value(k)});
  return PLFun::unbounded(std::move(pts), Rational(1))
      .marked(PLFun::Shape::concave);
}

PLFun herbrand_psi_from_roots(const UltrametricRoots& roots, int zero_index) {
  return inverse(herbrand_eta_from_roots(roots, zero_index));
}

Rational component_of_zero(const UltrametricRoots& roots, int zero_index,
                           const Rational& eps) {
  require_zero_root(roots, zero_index);
  std::vector<BallComponent> comps = ball_components(roots, eps);
  Rational radius;
  bool found = false;
  for (const auto& bc : comps) {
    if (std::find(bc.members.begin(), bc.members.end(), zero_index) !=
        bc.members.end()) {
      radius = bc.radius;
      found = true;
    }
  }
  NEWTB_CHECK(found, "component_of_zero: zero root not in any class");
  Rational expected = herbrand_psi_from_roots(roots, zero_index)(eps);
  NEWTB_CHECK(radius == expected,
              "component_of_zero: R-iteration disagrees with psi(eps)");
  return radius;
}

std::vector<Rational> composed_root_valuations(
    const std::vector<Rational>& f_vals,
    const std::vector<Rational>& g_vals) {
  // Polygon of g: going left from (m, 0), add one unit-width segment
  // per finite root valuation in ascending order; +inf roots form the
  // wall on the left.
  std::vector<Rational> finite;
  for (const Rational& v : g_vals) {
    if (!v.is_inf()) {
      NEWTB_REQUIRE(!v.is_negative(), "composed roots: negative valuation");
      finite.push_back(v);
    }
  }
  std::sort(finite.begin(), finite.end());
  const int m = static_cast<int>(g_vals.size());
  std::vector<PLFun::Point> graph;
  {
    Rational y(0);
    graph.push_back({Rational(m), y});
    for (size_t t = 0; t < finite.size(); ++t) {
      y += finite[t];
      graph.push_back({Rational(m - 1 - (long long)t), y});
    }
  }
  std::vector<Rational> out;
  for (const Rational& b : f_vals) {
    if (b.is_inf()) {
      // Preimages of 0 under g are the roots of g themselves.
      for (const Rational& v : g_vals) out.push_back(v);
      continue;
    }
    // Slopes of the envelope of the polygon of g and (0, b), with
    // multiplicity equal to the abscissa width: the deg(g) preimage
    // valuations of a point of valuation b.
    std::vector<std::pair<Rational, Rational>> pts = {{Rational(0), b}};
    for (const auto& p : graph) pts.push_back(p);
    PLFun hull = lower_convex_hull(std::move(pts));
    const auto& hp = hull.breakpoints();
    for (size_t s = 0; s + 1 < hp.size(); ++s) {
      Rational drop = (hp[s].second - hp[s + 1].second) /
                      (hp[s + 1].first - hp[s].first);
      Rational width = hp[s + 1].first - hp[s].first;
      NEWTB_CHECK(width.den() == 1, "composed roots: non-integer width");
      long long w = static_cast<long long>(width.num());
      for (long long r = 0; r < w; ++r) out.push_back(drop);
    }
  }
  return out;
}

namespace {

PLFun star_of_valuations(const std::vector<Rational>& vals) {
  std::vector<Rational> kinks;
  for (const Rational& v : vals) {
    if (!v.is_inf()) kinks.push_back(v);
  }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  auto value = [&](const Rational& s) {
    Rational t(0);
    for (const Rational& v : vals) t += newtb::min(s, v);
    return t;
  };
  std::vector<PLFun::Point> pts{{Rational(0), Rational(0)}};
  for (const Rational& k : kinks) pts.push_back({k, value(k)});
  Rational tail(0);
  for (const Rational& v : vals) {
    if (v.is_inf()) tail += Rational(1);
  }
  return PLFun::unbounded(std::move(pts), tail);
}

}  // namespace

bool compose_star_check(const std::vector<Rational>& f_vals,
                        const std::vector<Rational>& g_vals) {
  PLFun lhs = star_of_valuations(composed_root_valuations(f_vals, g_vals));
  PLFun rhs = compose(star_of_valuations(f_vals), star_of_valuations(g_vals));
  return lhs == rhs;
}

std::vector<Rational> pi_multiplication_root_valuations(
    const NewtonPolygon& P) {
  std::vector<Rational> vals{Rational::inf()};
  const Context& c = P.ctx();
  for (int i = 1; i <= c.n; ++i) {
    Int count = c.layer(i);
    for (Int r = 0; r < count; ++r) vals.push_back(P.slope(i));
  }
  return vals;
}

}  // namespace newtb
