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

#include "newtb/skeleton.hpp"

#include <algorithm>
#include <sstream>

#include "newtb/torsion.hpp"

namespace newtb {

namespace {

// Exact Gaussian elimination: solve A t = rhs for a consistent system
// with a unique solution.  A is m x k (m >= k) given by rows.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A,
                                  std::vector<Rational> rhs) {
  const size_t m = A.size();
  NEWTB_REQUIRE(m >= 1 && rhs.size() == m, "solve: malformed system");
  const size_t k = A[0].size();
  size_t row = 0;
  std::vector<int> pivot_of_col(k, -1);
  for (size_t col = 0; col < k && row < m; ++col) {
    size_t p = row;
    while (p < m && A[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(rhs[p], rhs[row]);
    Rational inv = Rational(1) / A[row][col];
    for (size_t c = col; c < k; ++c) A[row][c] *= inv;
    rhs[row] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || A[r][col].is_zero()) continue;
      Rational f = A[r][col];
      for (size_t c = col; c < k; ++c) A[r][c] -= f * A[row][c];
      rhs[r] -= f * rhs[row];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  for (size_t c = 0; c < k; ++c) {
    NEWTB_CHECK(pivot_of_col[c] >= 0, "solve: singular system");
  }
  for (size_t r = row; r < m; ++r) {
    NEWTB_CHECK(rhs[r].is_zero(), "solve: inconsistent system");
  }
  std::vector<Rational> t(k);
  for (size_t c = 0; c < k; ++c) t[c] = rhs[pivot_of_col[c]];
  return t;
}

// Barycentric weights of P among the vertex polygons of its chamber.
std::vector<Rational> solve_weights(
    const NewtonPolygon& P, const std::vector<NewtonPolygon>& verts) {
  const int n = P.n();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> arow;
    for (const NewtonPolygon& V : verts) arow.push_back(V.slopes()[i]);
    A.push_back(std::move(arow));
    rhs.push_back(P.slopes()[i]);
  }
  A.push_back(std::vector<Rational>(verts.size(), Rational(1)));
  rhs.push_back(Rational(1));
  std::vector<Rational> t = solve_exact(std::move(A), std::move(rhs));
  for (const Rational& w : t) {
    NEWTB_CHECK(!w.is_negative(),
                "psi: negative barycentric weight in the located chamber");
  }
  return t;
}

}  // namespace

ChamberCoordinates chamber_coordinates(const NewtonPolygon& P) {
  Chamber S = chamber_of(P);
  ChamberCoordinates out;
  out.vertices = simplex_vertices(S.b);
  std::vector<NewtonPolygon> polys;
  for (const ApartmentVertex& v : out.vertices) {
    polys.push_back(vertex_polygon(P.ctx(), v));
  }
  out.weights = solve_weights(P, polys);

  // For the fundamental chamber, cross-check the solve against the
  // mu-coordinates mu_i = q^i (l_i - l_{i+1}), mu_n = q^n l_n - l_1.
  bool fundamental = true;
  for (std::int64_t b : S.b.lex()) {
    if (b != 0) fundamental = false;
  }
  if (fundamental) {
    const Context& c = P.ctx();
    const int n = c.n;
    for (int i = 1; i <= n; ++i) {
      Rational mu;
      ApartmentVertex vtx = (i == n)
          ? ApartmentVertex(std::vector<std::int64_t>(n, 0))
          : [&] {
              std::vector<std::int64_t> e(n, 0);
              for (int j = i; j < n; ++j) e[j] = 1;
              return ApartmentVertex(std::move(e));
            }();
      if (i == n) {
        mu = Rational(c.qi(n)) * P.slope(n) - P.slope(1);
      } else {
        mu = Rational(c.qi(i)) * (P.slope(i) - P.slope(i + 1));
      }
      for (size_t m = 0; m < out.vertices.size(); ++m) {
        if (out.vertices[m] == vtx) {
          NEWTB_CHECK(out.weights[m] == mu,
                      "psi: mu-coordinates disagree with the linear solve");
        }
      }
    }
  }
  return out;
}

ApartmentPoint psi_map(const NewtonPolygon& P) {
  ChamberCoordinates cc = chamber_coordinates(P);
  const int n = P.n();
  std::vector<Rational> coords(n, Rational(0));
  for (size_t m = 0; m < cc.vertices.size(); ++m) {
    for (int i = 0; i < n; ++i) {
      coords[i] += cc.weights[m] * Rational(cc.vertices[m].c()[i]);
    }
  }
  ApartmentPoint out(std::move(coords));
  NEWTB_CHECK(in_Q(out), "psi: image left the quartier");
  return out;
}

NewtonPolygon psi_inv(const Context& ctx, const ApartmentPoint& x) {
  NEWTB_REQUIRE(x.n() == ctx.n, "psi_inv: dimension mismatch");
  NEWTB_REQUIRE(in_Q(x), "psi_inv: point outside the quartier");
  const int n = ctx.n;
  // Chamber containing x: b_ij = floor(alpha_ij(x)) is always a valid
  // b-matrix, and x lies in its closed realization.
  std::vector<std::int64_t> b_lex;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      b_lex.push_back(
          static_cast<std::int64_t>(alpha(i, j, x).floor()));
    }
  }
  SimplexB S(n, std::move(b_lex));
  std::vector<ApartmentVertex> verts = simplex_vertices(S);
  // Solve x = sum t_m v_m modulo the diagonal: unknowns t_1..t_n and
  // the diagonal shift d.
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> arow;
    for (const ApartmentVertex& v : verts) arow.push_back(Rational(v.c()[i]));
    arow.push_back(Rational(1));  // diagonal
    A.push_back(std::move(arow));
    rhs.push_back(x.c()[i]);
  }
  {
    std::vector<Rational> arow(verts.size(), Rational(1));
    arow.push_back(Rational(0));
    A.push_back(std::move(arow));
    rhs.push_back(Rational(1));
  }
  std::vector<Rational> t = solve_exact(std::move(A), std::move(rhs));
  std::vector<Rational> weights(t.begin(), t.end() - 1);
  std::vector<NewtonPolygon> polys;
  for (const ApartmentVertex& v : verts) {
    NEWTB_CHECK(!weights[polys.size()].is_negative(),
                "psi_inv: point escapes its floor chamber");
    polys.push_back(vertex_polygon(ctx, v));
  }
  return barycenter(weights, polys);
}

bool canonical_subgroup_exists(const NewtonPolygon& P, int r, long long k) {
  NEWTB_REQUIRE(r >= 1 && r < P.n(), "canonical subgroup: rank out of range");
  NEWTB_REQUIRE(k >= 1, "canonical subgroup: level must be >= 1");
  bool slope_test = lambda_iter(P, P.slope(r), k) > P.slope(r + 1);
  bool wall_test = alpha(r, r + 1, psi_map(P)) > Rational(k - 1);
  NEWTB_CHECK(slope_test == wall_test,
              "canonical subgroup: slope and half-apartment tests disagree");
  return slope_test;
}

std::set<ApartmentVertex> hecke_orbit(const ApartmentVertex& x,
                                      std::int64_t bound) {
  NEWTB_REQUIRE(in_Q(x), "hecke_orbit: vertex outside the quartier");
  NEWTB_REQUIRE(bound >= 0, "hecke_orbit: negative bound");
  const int n = x.n();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::set<ApartmentVertex> orbit;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::int64_t> t(n, -bound);
    bool done = false;
    while (!done) {
      std::vector<std::int64_t> c(n);
      for (int i = 0; i < n; ++i) c[i] = x.c()[perm[i]] + t[i];
      orbit.insert(pr_Q(ApartmentVertex(std::move(c))));
      done = true;
      for (int i = 0; i < n; ++i) {
        if (++t[i] <= bound) {
          done = false;
          break;
        }
        t[i] = -bound;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orbit;
}

std::vector<GrossHopkinsPoint> gh_polytope(const Context& ctx) {
  const int n = ctx.n;
  NEWTB_REQUIRE(n >= 1, "gh_polytope: bad context");
  NewtonPolygon P0 = flat_polygon(ctx);
  std::vector<GrossHopkinsPoint> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> subset;
    for (int i = 1; i <= n - 1; ++i) {
      if (mask & (1u << (i - 1))) subset.push_back(i);
    }
    // P_A: hull through (1,1), (q^{i_k}, 1 - i_k/n), (q^n, 0).
    std::vector<std::pair<Rational, Rational>> pts;
    pts.push_back({Rational(1), Rational(1)});
    for (int ik : subset) {
      pts.push_back({Rational(ctx.qi(ik)), Rational(1) - Rational(ik, n)});
    }
    pts.push_back({Rational(ctx.qi(n)), Rational(0)});
    PLFun hull = lower_convex_hull(pts);
    // The Gross-Hopkins coordinates must sit on the hull.
    for (const auto& p : pts) {
      NEWTB_CHECK(hull(p.first) == p.second,
                  "gh_polytope: a prescribed point fell above the hull");
    }
    std::vector<Rational> slopes;
    for (int i = 1; i <= n; ++i) {
      Rational x0(ctx.qi(i - 1)), x1(ctx.qi(i));
      slopes.push_back((hull(x0) - hull(x1)) / (x1 - x0));
    }
    GrossHopkinsPoint pt{subset, NewtonPolygon(ctx, std::move(slopes)), {}};

    // Coefficients from the display, with i_0 = 0 and the successor of
    // the last element being n.
    const int r = static_cast<int>(pt.subset.size());
    std::vector<Rational> coeffs(r + 1);
    Rational a0(1);
    for (int k = 1; k <= r; ++k) {
      int ik = pt.subset[k - 1];
      int prev = (k == 1) ? 0 : pt.subset[k - 2];
      int next = (k == r) ? n : pt.subset[k];
      Rational ak =
          Rational(ctx.qi(ik)) / Rational(n) *
          (Rational(ik - prev) / Rational(ctx.qi(ik) - ctx.qi(prev)) -
           Rational(next - ik) / Rational(ctx.qi(next) - ctx.qi(ik)));
      coeffs[k] = ak;
      a0 -= ak;
    }
    coeffs[0] = a0;
    pt.coefficients = coeffs;

    // Validate: P_A = a_0 P_0 + sum a_k P(omega_{i_k}), and the same
    // coefficients fall out of an independent linear solve.
    std::vector<NewtonPolygon> basis{P0};
    for (int ik : pt.subset) {
      std::vector<std::int64_t> e(n, 0);
      for (int j = ik; j < n; ++j) e[j] = 1;
      basis.push_back(vertex_polygon(ctx, ApartmentVertex(std::move(e))));
    }
    NEWTB_CHECK(barycenter(coeffs, basis) == pt.polygon,
                "gh_polytope: displayed coefficients fail to reconstruct P_A");
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> rhs;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> arow;
      for (const NewtonPolygon& B : basis) arow.push_back(B.slopes()[i]);
      A.push_back(std::move(arow));
      rhs.push_back(pt.polygon.slopes()[i]);
    }
    A.push_back(std::vector<Rational>(basis.size(), Rational(1)));
    rhs.push_back(Rational(1));
    NEWTB_CHECK(solve_exact(std::move(A), std::move(rhs)) == coeffs,
                "gh_polytope: independent solve disagrees with the display");
    out.push_back(std::move(pt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility

bool fm_feasible(std::vector<LinIneq> system, int num_vars) {
  for (const LinIneq& q : system) {
    NEWTB_REQUIRE(static_cast<int>(q.coeffs.size()) == num_vars,
                  "fm: inconsistent arity");
  }
  for (int v = num_vars - 1; v >= 0; --v) {
    std::vector<LinIneq> pos, neg, zero;
    for (LinIneq& q : system) {
      const Rational& c = q.coeffs[v];
      if (c.is_zero()) {
        zero.push_back(std::move(q));
      } else if (c.is_positive()) {
        pos.push_back(std::move(q));
      } else {
        neg.push_back(std::move(q));
      }
    }
    system = std::move(zero);
    // q_pos: c t_v >= r - rest  ->  t_v >= (r - rest)/c   (lower bound)
    // q_neg gives an upper bound; combine all pairs.
    for (const LinIneq& lo : pos) {
      for (const LinIneq& hi : neg) {
        LinIneq comb;
        comb.coeffs.assign(num_vars, Rational(0));
        // lower bound L <= t_v <= U upper: require U - L >= 0 (or > 0).
        Rational cl = lo.coeffs[v], ch = hi.coeffs[v];
        for (int i = 0; i < num_vars; ++i) {
          if (i == v) continue;
          comb.coeffs[i] = lo.coeffs[i] / cl - hi.coeffs[i] / ch;
        }
        comb.rhs = lo.rhs / cl - hi.rhs / ch;
        comb.strict = lo.strict || hi.strict;
        // The combined inequality reads: sum comb.coeffs t >= comb.rhs
        // after multiplying through by -1 (U - L >= 0 becomes
        // -(lo/cl - hi/ch) . t >= -(rl/cl - rh/ch)).
        for (auto& c : comb.coeffs) c = -c;
        comb.rhs = -comb.rhs;
        system.push_back(std::move(comb));
      }
    }
  }
  for (const LinIneq& q : system) {
    // 0 >= rhs (or 0 > rhs).
    if (q.strict ? !(Rational(0) > q.rhs) : !(Rational(0) >= q.rhs)) {
      return false;
    }
  }
  return true;
}

namespace {

std::vector<int> rotation_barycentric_perm(const Context& ctx, int shift) {
  // Vertex order of |S_0|: origin (label 0), omega_1 (label n-1), ...,
  // omega_{n-1} (label 1).  The label-shift rotation permutes the
  // barycentric slots accordingly: slot with label l feeds the slot
  // with label l + shift.
  const int n = ctx.n;
  auto label_of_slot = [&](int m) { return (m == 0) ? 0 : (n - m) % n; };
  std::vector<int> slot_of_label(n);
  for (int m = 0; m < n; ++m) slot_of_label[label_of_slot(m)] = m;
  std::vector<int> perm(n);
  for (int m = 0; m < n; ++m) {
    perm[m] = slot_of_label[(label_of_slot(m) + shift) % n];
  }
  return perm;
}

LinIneq permuted(const LinIneq& q, const std::vector<int>& perm) {
  // (sigma D) holds at t iff D holds at sigma^{-1} t: coefficient of
  // t_{perm[i]} becomes coeffs[i].
  LinIneq out;
  out.coeffs.assign(q.coeffs.size(), Rational(0));
  for (size_t i = 0; i < q.coeffs.size(); ++i) {
    out.coeffs[perm[i]] = q.coeffs[i];
  }
  out.rhs = q.rhs;
  out.strict = q.strict;
  return out;
}

std::string ineq_text(const LinIneq& q) {
  std::ostringstream os;
  for (size_t i = 0; i < q.coeffs.size(); ++i) {
    if (i) os << ",";
    os << q.coeffs[i].str();
  }
  os << (q.strict ? " > " : " >= ") << q.rhs.str();
  return os.str();
}

}  // namespace

DomainCheck fundamental_domain_check(const Context& ctx,
                                     const std::vector<LinIneq>& D) {
  const int n = ctx.n;
  // Simplex constraints on the barycentric coordinates, with the sum
  // constraint eliminated by substituting t_n = 1 - t_1 - ... - t_{n-1}
  // inside fm_feasible calls.
  auto reduce = [&](const LinIneq& q) {
    LinIneq out;
    out.coeffs.assign(n - 1, Rational(0));
    Rational cn = q.coeffs[n - 1];
    for (int i = 0; i < n - 1; ++i) out.coeffs[i] = q.coeffs[i] - cn;
    out.rhs = q.rhs - cn;
    out.strict = q.strict;
    return out;
  };
  std::vector<LinIneq> simplex;
  for (int i = 0; i < n; ++i) {
    LinIneq q;
    q.coeffs.assign(n, Rational(0));
    q.coeffs[i] = Rational(1);
    q.rhs = Rational(0);
    simplex.push_back(q);
  }

  // sigma_a D for every rotation.
  std::vector<std::vector<LinIneq>> images;
  for (int a = 0; a < n; ++a) {
    std::vector<int> perm = rotation_barycentric_perm(ctx, a);
    std::vector<LinIneq> img;
    for (const LinIneq& q : D) img.push_back(permuted(q, perm));
    images.push_back(std::move(img));
  }

  DomainCheck out;
  // covers: no point of |S_0| avoids every rotated copy.  The avoided
  // region is a union over choices of one violated inequality per copy.
  // An empty inequality list describes the whole simplex.
  bool uncovered_found = false;
  if (D.empty()) {
    uncovered_found = false;
  } else {
    std::vector<size_t> choice(n, 0);
    bool done = false;
    while (!done && !uncovered_found) {
      std::vector<LinIneq> sys;
      for (const LinIneq& q : simplex) sys.push_back(reduce(q));
      for (int a = 0; a < n; ++a) {
        const LinIneq& viol = images[a][choice[a]];
        LinIneq neg;
        neg.coeffs.clear();
        for (const Rational& c : viol.coeffs) neg.coeffs.push_back(-c);
        neg.rhs = -viol.rhs;
        neg.strict = !viol.strict;
        sys.push_back(reduce(neg));
      }
      if (fm_feasible(std::move(sys), n - 1)) uncovered_found = true;
      done = true;
      for (int a = 0; a < n; ++a) {
        if (++choice[a] < images[a].size()) {
          done = false;
          break;
        }
        choice[a] = 0;
      }
    }
  }
  out.covers = !uncovered_found;

  for (int a = 0; a < n; ++a) {
    std::ostringstream os;
    os << "sigma^" << a << ":";
    for (const LinIneq& q : D) os << " " << ineq_text(q) << ";";
    for (const LinIneq& q : images[a]) os << " " << ineq_text(q) << ";";
    out.faces.push_back(os.str());
  }
  return out;
}

ApartmentPoint hodge_tate_point(const NewtonPolygon& P) {
  NEWTB_REQUIRE(P.n() >= 2, "hodge_tate_point: need n >= 2");
  const int n = P.n();
  std::vector<Rational> coords;
  for (int i = 1; i <= n; ++i) coords.push_back(-hodge_tate_norm(P, i));
  ApartmentPoint pt(std::move(coords));
  // Containment in |S^dual|: the dual simplex realization is cut out
  // by -b_ij - 1 <= alpha_ij <= -b_ij with equality on tight walls.
  RamSimplex S = ram_simplex(P);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Rational a = alpha(i, j, pt);
      Rational b(S.b.b(i, j));
      bool tight = false;
      for (auto [wi, wj] : S.walls) {
        if (wi == i && wj == j) tight = true;
      }
      if (tight) {
        NEWTB_CHECK(a == -b, "hodge_tate_point: point off a tight wall");
      } else {
        NEWTB_CHECK(-b - Rational(1) <= a && a <= -b,
                    "hodge_tate_point: point outside |S^dual|");
      }
    }
  }
  return pt;
}

}  // namespace newtb
