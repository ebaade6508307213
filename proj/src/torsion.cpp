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

#include "newtb/torsion.hpp"

#include <algorithm>
#include <map>

namespace newtb {

namespace {

// Multiplicity of the exact pi-order k among the scalars O/pi^m:
// A(0) = 1, A(k) = q^k - q^{k-1}.
Int order_multiplicity(std::int64_t q, long long k) {
  NEWTB_REQUIRE(k >= 0, "A(k): negative order");
  if (k == 0) return 1;
  return int_pow(Int(q), k) - int_pow(Int(q), k - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// GaloisField

GaloisField::GaloisField(std::int64_t q) : q_(q) {
  NEWTB_REQUIRE(q >= 2, "field: q must be >= 2");
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  p_ = p;
  r_ = 0;
  std::int64_t t = q;
  while (t > 1) {
    NEWTB_REQUIRE(t % p == 0, "field: q must be a prime power");
    t /= p;
    ++r_;
  }
  if (r_ == 1) {
    modulus_ = {0, 1};  // x - 0 placeholder, unused
    return;
  }
  // Find a monic irreducible of degree r over F_p: no monic divisor of
  // degree 1..r/2.
  auto poly_mod = [&](std::vector<int> a, const std::vector<int>& b) {
    // a mod b, b monic, coefficients low-first
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      int c = a[i];
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) {
        a[i - db + j] = static_cast<int>(
            ((a[i - db + j] - (long long)c * b[j]) % p_ + p_) % p_);
      }
    }
    a.resize(db);
    return a;
  };
  auto enumerate_monic = [&](int deg, auto&& fn) {
    std::vector<int> c(deg + 1, 0);
    c[deg] = 1;
    std::int64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p_;
    for (std::int64_t code = 0; code < count; ++code) {
      std::int64_t t2 = code;
      for (int i = 0; i < deg; ++i) {
        c[i] = static_cast<int>(t2 % p_);
        t2 /= p_;
      }
      if (fn(c)) return true;
    }
    return false;
  };
  bool found = enumerate_monic(r_, [&](const std::vector<int>& cand) {
    for (int d = 1; d <= r_ / 2; ++d) {
      bool has_divisor = enumerate_monic(d, [&](const std::vector<int>& div) {
        std::vector<int> rem = poly_mod(cand, div);
        for (int v : rem) {
          if (v != 0) return false;
        }
        return true;
      });
      if (has_divisor) return false;
    }
    modulus_ = cand;
    return true;
  });
  NEWTB_CHECK(found, "field: no irreducible polynomial found");
}

int GaloisField::add(int a, int b) const {
  int out = 0;
  std::int64_t mult = 1;
  for (int i = 0; i < r_; ++i) {
    int da = static_cast<int>((a / mult) % p_);
    int db = static_cast<int>((b / mult) % p_);
    out += static_cast<int>(((da + db) % p_) * mult);
    mult *= p_;
  }
  return out;
}

int GaloisField::neg(int a) const {
  int out = 0;
  std::int64_t mult = 1;
  for (int i = 0; i < r_; ++i) {
    int da = static_cast<int>((a / mult) % p_);
    out += static_cast<int>(((p_ - da) % p_) * mult);
    mult *= p_;
  }
  return out;
}

int GaloisField::sub(int a, int b) const { return add(a, neg(b)); }

int GaloisField::raw_mul(int a, int b) const {
  if (r_ == 1) return static_cast<int>(((long long)a * b) % p_);
  std::vector<int> da(r_), db(r_);
  std::int64_t mult = 1;
  for (int i = 0; i < r_; ++i) {
    da[i] = static_cast<int>((a / mult) % p_);
    db[i] = static_cast<int>((b / mult) % p_);
    mult *= p_;
  }
  std::vector<int> prod(2 * r_ - 1, 0);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < r_; ++j) {
      prod[i + j] =
          static_cast<int>((prod[i + j] + (long long)da[i] * db[j]) % p_);
    }
  }
  // Reduce modulo the monic irreducible.
  for (int i = 2 * r_ - 2; i >= r_; --i) {
    int c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < r_; ++j) {
      prod[i - r_ + j] = static_cast<int>(
          ((prod[i - r_ + j] - (long long)c * modulus_[j]) % p_ + p_) % p_);
    }
    prod[i] = 0;
  }
  int out = 0;
  mult = 1;
  for (int i = 0; i < r_; ++i) {
    out += static_cast<int>(prod[i] * mult);
    mult *= p_;
  }
  return out;
}

int GaloisField::mul(int a, int b) const { return raw_mul(a, b); }

// ---------------------------------------------------------------------------
// TorsionVector

TorsionVector::TorsionVector(std::shared_ptr<const GaloisField> field, int n,
                             int level)
    : field_(std::move(field)), level_(level) {
  NEWTB_REQUIRE(n >= 1 && level >= 0, "torsion vector: bad shape");
  coords_.assign(n, std::vector<int>(level, 0));
}

void TorsionVector::set_coeff(int i, int j, int v) {
  NEWTB_REQUIRE(i >= 0 && i < n() && j >= 0 && j < level_,
                "torsion vector: index out of range");
  NEWTB_REQUIRE(v >= 0 && v < field_->q(), "torsion vector: bad field value");
  coords_[i][j] = v;
}

int TorsionVector::coordinate_order(int i) const {
  const auto& c = coords_[i];
  for (int j = 0; j < level_; ++j) {
    if (c[j] != 0) return level_ - j;
  }
  return 0;
}

int TorsionVector::order() const {
  int m = 0;
  for (int i = 0; i < n(); ++i) m = std::max(m, coordinate_order(i));
  return m;
}

bool TorsionVector::is_zero() const { return order() == 0; }

TorsionVector TorsionVector::operator+(const TorsionVector& o) const {
  NEWTB_REQUIRE(level_ == o.level_ && n() == o.n() &&
                    field_->q() == o.field_->q(),
                "torsion vector: incompatible operands");
  TorsionVector out(field_, n(), level_);
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j < level_; ++j) {
      out.coords_[i][j] = field_->add(coords_[i][j], o.coords_[i][j]);
    }
  }
  return out;
}

TorsionVector TorsionVector::operator-(const TorsionVector& o) const {
  NEWTB_REQUIRE(level_ == o.level_ && n() == o.n() &&
                    field_->q() == o.field_->q(),
                "torsion vector: incompatible operands");
  TorsionVector out(field_, n(), level_);
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j < level_; ++j) {
      out.coords_[i][j] = field_->sub(coords_[i][j], o.coords_[i][j]);
    }
  }
  return out;
}

TorsionVector TorsionVector::scalar_mul(int c) const {
  TorsionVector out(field_, n(), level_);
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j < level_; ++j) {
      out.coords_[i][j] = field_->mul(coords_[i][j], c);
    }
  }
  return out;
}

TorsionVector TorsionVector::pi_mul() const {
  // Multiplication by pi shifts coefficients to higher degree and
  // drops the overflow: the order decreases by one.
  TorsionVector out(field_, n(), level_);
  for (int i = 0; i < n(); ++i) {
    for (int j = level_ - 1; j >= 1; --j) {
      out.coords_[i][j] = coords_[i][j - 1];
    }
    if (level_ > 0) out.coords_[i][0] = 0;
  }
  return out;
}

TorsionVector TorsionVector::lift_to_level(int new_level) const {
  NEWTB_REQUIRE(new_level >= level_, "torsion vector: lift must not truncate");
  TorsionVector out(field_, n(), new_level);
  int shift = new_level - level_;
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j < level_; ++j) {
      out.coords_[i][j + shift] = coords_[i][j];
    }
  }
  return out;
}

TorsionVector TorsionVector::basis_point(
    std::shared_ptr<const GaloisField> field, int n, int level, int i,
    int order) {
  NEWTB_REQUIRE(order >= 1 && order <= level && i >= 1 && i <= n,
                "basis_point: bad order or index");
  TorsionVector x(std::move(field), n, level);
  x.set_coeff(i - 1, level - order, 1);
  return x;
}

// ---------------------------------------------------------------------------
// Valuation and filtrations

Rational valuation(const NewtonPolygon& P, const TorsionVector& x) {
  NEWTB_REQUIRE(P.ctx().q == x.field().q() && P.n() == x.n(),
                "valuation: polygon and vector shapes differ");
  Rational v = Rational::inf();
  for (int i = 1; i <= x.n(); ++i) {
    int c = x.coordinate_order(i - 1);
    v = newtb::min(v, lambda_iter(P, P.slope(i), c));
  }
  return v;
}

std::vector<std::int64_t> lower_fil_exponents(const NewtonPolygon& P,
                                              const Rational& mu) {
  NEWTB_REQUIRE(mu.is_positive(), "lower_fil: mu must be positive");
  PLFun psi = psi_pi_torsion(P);
  std::vector<std::int64_t> k(P.n());
  for (int i = 1; i <= P.n(); ++i) {
    std::int64_t count = 0;
    Rational v = P.slope(i);
    while (v >= mu) {
      ++count;
      v = psi(v);
    }
    k[i - 1] = count;
  }
  for (int i = 0; i + 1 < P.n(); ++i) {
    NEWTB_CHECK(k[i] >= k[i + 1], "lower_fil: exponents not non-increasing");
  }
  return k;
}

std::vector<std::int64_t> upper_fil_exponents(const NewtonPolygon& P,
                                              const Rational& mu) {
  NEWTB_REQUIRE(mu.is_positive() && !mu.is_inf(),
                "upper_fil: mu must be positive and finite");
  PLFun psi = psi_pi_torsion(P);
  std::vector<std::int64_t> l(P.n());
  for (int i = 1; i <= P.n(); ++i) {
    std::int64_t count = 0;
    Rational v = psi(mu);  // mu^{(l+2)} at l = 0
    while (P.slope(i) < v) {
      ++count;
      v = psi(v);
    }
    l[i - 1] = count;
  }
  for (int i = 0; i + 1 < P.n(); ++i) {
    NEWTB_CHECK(l[i] <= l[i + 1], "upper_fil: exponents not non-decreasing");
  }
  return l;
}

ApartmentVertex lower_fil_class(const NewtonPolygon& P, const Rational& mu) {
  std::vector<std::int64_t> k = lower_fil_exponents(P, mu);
  for (auto& v : k) v = -v;
  return ApartmentVertex(std::move(k));
}

ApartmentVertex upper_fil_class(const NewtonPolygon& P, const Rational& mu) {
  return ApartmentVertex(upper_fil_exponents(P, mu));
}

RamSimplex ram_simplex(const NewtonPolygon& P) {
  const int n = P.n();
  PLFun psi = psi_pi_torsion(P);
  std::vector<std::int64_t> b_lex;
  std::vector<std::pair<int, int>> walls;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Largest m >= 1 with lambda_i^{(m)} >= lambda_j, minus one.
      std::int64_t m = 0;
      Rational v = P.slope(i);
      Rational last = v;
      while (v >= P.slope(j)) {
        ++m;
        last = v;
        v = psi(v);
      }
      NEWTB_CHECK(m >= 1, "ram_simplex: lambda_i < lambda_j for i < j");
      b_lex.push_back(m - 1);
      if (last == P.slope(j)) walls.push_back({i, j});
    }
  }
  RamSimplex out{SimplexB(n, std::move(b_lex)), std::move(walls), {}};

  // Vertex sweep over one period (lambda_n / q^n, lambda_n]: each slope
  // orbit meets it exactly once, and the filtration repeats modulo the
  // diagonal below it.
  Rational eps = P.slope(n);
  Rational lo = eps / Rational(P.ctx().qi(n));
  std::set<Rational> sauts{eps};
  for (int i = 1; i <= n; ++i) {
    Rational v = P.slope(i);
    while (v > eps) v = psi(v);
    NEWTB_CHECK(v > lo, "ram_simplex: orbit skipped the period");
    sauts.insert(v);
  }
  std::set<ApartmentVertex> verts;
  for (const Rational& mu : sauts) verts.insert(lower_fil_class(P, mu));

  // Cross-check against the half-apartment description: S is the face
  // of the b-chamber where the tight walls hold with equality.
  std::set<ApartmentVertex> face;
  for (const ApartmentVertex& v : simplex_vertices(out.b)) {
    bool on_walls = true;
    for (auto [i, j] : out.walls) {
      if (alpha(i, j, v) != out.b.b(i, j)) on_walls = false;
    }
    if (on_walls) face.insert(v);
  }
  NEWTB_CHECK(face == verts,
              "ram_simplex: sweep disagrees with the wall description");

  out.vertices.assign(verts.begin(), verts.end());
  return out;
}

std::pair<std::set<ApartmentVertex>, std::set<ApartmentVertex>>
filtration_class_sets(const NewtonPolygon& P) {
  const int n = P.n();
  PLFun psi = psi_pi_torsion(P);
  PLFun eta = eta_pi_torsion(P);
  Rational period_lo = P.slope(n) / Rational(P.ctx().qi(n));

  // Lower sweep: all sauts above one full period, plus a point above
  // lambda_1 where the filtration is the full Tate module.
  std::set<Rational> lower_mus{P.slope(1) + Rational(1)};
  for (int i = 1; i <= n; ++i) {
    Rational v = P.slope(i);
    while (v > period_lo) {
      lower_mus.insert(v);
      v = psi(v);
    }
  }
  std::set<ApartmentVertex> lower;
  for (const Rational& mu : lower_mus) lower.insert(lower_fil_class(P, mu));

  // Upper sweep: jump values eta^{o m}(lambda_i) within (0, lambda_1+1]
  // (beyond that the classes repeat modulo the diagonal), plus a point
  // below the first jump.
  Rational upper_hi = P.slope(1) + Rational(1);
  std::set<Rational> upper_mus{eta(P.slope(n)) / Rational(2)};
  for (int i = 1; i <= n; ++i) {
    Rational v = eta(P.slope(i));
    while (v <= upper_hi) {
      upper_mus.insert(v);
      v = eta(v);
    }
  }
  std::set<ApartmentVertex> upper;
  for (const Rational& mu : upper_mus) upper.insert(upper_fil_class(P, mu));

  // Reconstruction from the ramification simplex (the propositions on
  // the lower/upper class sets).
  RamSimplex S = ram_simplex(P);
  ApartmentVertex origin(std::vector<std::int64_t>(n, 0));
  std::set<ApartmentVertex> lower_rec, upper_rec;
  for (const ApartmentVertex& x : S.vertices) {
    for (const auto& v : join(x, origin)) lower_rec.insert(v);
    for (const auto& v : meet(x, origin)) upper_rec.insert(v);
  }
  NEWTB_CHECK(lower == lower_rec,
              "filtration classes: lower sweep != join reconstruction");
  NEWTB_CHECK(upper == upper_rec,
              "filtration classes: upper sweep != meet reconstruction");
  return {lower, upper};
}

// ---------------------------------------------------------------------------
// Subgroups and isogeny valuations

FiniteSubgroup subgroup(const NewtonPolygon& P,
                        const std::vector<std::int64_t>& a,
                        std::uint64_t enum_cap) {
  const int n = P.n();
  NEWTB_REQUIRE(static_cast<int>(a.size()) == n, "subgroup: bad index size");
  std::int64_t total = 0;
  std::int64_t level = 0;
  for (std::int64_t ai : a) {
    NEWTB_REQUIRE(ai >= 0, "subgroup: negative exponent");
    total += ai;
    level = std::max(level, ai);
  }
  Int size = int_pow(Int(P.ctx().q), total);
  NEWTB_REQUIRE(size <= Int(enum_cap),
                "subgroup: enumeration cap exceeded (see NEWTB_ENUM_CAP)");
  auto field = std::make_shared<const GaloisField>(P.ctx().q);
  FiniteSubgroup C;
  C.a = a;
  C.level = static_cast<int>(level);
  // Mixed-radix enumeration of the scalar tuples (c_1, ..., c_n),
  // c_i in O/pi^{a_i}; coordinate i holds c_i pi^{level - a_i}.
  std::vector<int> digits(static_cast<size_t>(total), 0);
  const std::int64_t q = P.ctx().q;
  bool done = false;
  while (!done) {
    TorsionVector x(field, n, C.level);
    size_t pos = 0;
    for (int i = 0; i < n; ++i) {
      for (std::int64_t j = 0; j < a[i]; ++j) {
        // Coefficient j of c_i lands at pi-degree (level - a_i) + j.
        if (digits[pos] != 0) {
          x.set_coeff(i, static_cast<int>(C.level - a[i] + j), digits[pos]);
        }
        ++pos;
      }
    }
    C.elements.push_back(std::move(x));
    done = true;
    for (size_t d = 0; d < digits.size(); ++d) {
      if (++digits[d] < q) {
        done = false;
        break;
      }
      digits[d] = 0;
    }
    if (digits.empty()) done = true;
  }
  NEWTB_CHECK(Int((std::uint64_t)C.elements.size()) == size,
              "subgroup: enumeration size mismatch");
  return C;
}

Rational kernel_valuation_sum(const NewtonPolygon& P,
                              const FiniteSubgroup& C) {
  Rational total(0);
  for (const TorsionVector& x : C.elements) {
    if (!x.is_zero()) total += valuation(P, x);
  }
  return total;
}

Rational isogeny_point_valuation(const NewtonPolygon& P,
                                 const FiniteSubgroup& C,
                                 const TorsionVector& x) {
  int level = std::max(x.level(), C.level);
  TorsionVector xl = x.lift_to_level(level);
  Rational total(0);
  for (const TorsionVector& a : C.elements) {
    Rational v = valuation(P, xl - a.lift_to_level(level));
    if (v.is_inf()) return Rational::inf();
    total += v;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Hodge-Tate norms

Rational complement_torsion_valuation_sum(const NewtonPolygon& P, int i,
                                          int k) {
  const int n = P.n();
  NEWTB_REQUIRE(i >= 1 && i <= n, "complement sum: index out of range");
  NEWTB_REQUIRE(k >= 0, "complement sum: negative level");
  if (k == 0 || n == 1) return Rational(0);
  // Order profiles (c_j)_{j != i} in {0..k}^{n-1}: each contributes
  // prod A(c_j) points of valuation min_j lambda_j^{(c_j)}.
  std::vector<int> js;
  for (int j = 1; j <= n; ++j) {
    if (j != i) js.push_back(j);
  }
  const std::int64_t q = P.ctx().q;
  std::vector<int> profile(js.size(), 0);
  Rational total(0);
  bool done = false;
  while (!done) {
    bool all_zero = true;
    for (int c : profile) {
      if (c != 0) all_zero = false;
    }
    if (!all_zero) {
      Int mult = 1;
      Rational v = Rational::inf();
      for (size_t t = 0; t < js.size(); ++t) {
        mult *= order_multiplicity(q, profile[t]);
        v = newtb::min(v, lambda_iter(P, P.slope(js[t]), profile[t]));
      }
      total += Rational(mult) * v;
    }
    done = true;
    for (size_t t = 0; t < profile.size(); ++t) {
      if (++profile[t] <= k) {
        done = false;
        break;
      }
      profile[t] = 0;
    }
  }
  return total;
}

Rational hodge_tate_norm(const NewtonPolygon& P, int i) {
  const int n = P.n();
  NEWTB_REQUIRE(i >= 1 && i <= n, "hodge_tate_norm: index out of range");
  if (n == 1) return Rational(0);
  const Rational qr(P.ctx().q);
  const Rational qn_lambda_n = Rational(P.ctx().qi(n)) * P.slope(n);
  int j0 = (i == 1) ? 2 : 1;  // carries the largest order-k valuations in M
  Rational prev = complement_torsion_valuation_sum(P, i, 0);
  Rational cur = complement_torsion_valuation_sum(P, i, 1);
  Rational f_prev = (qr * cur - prev) / (qr - Rational(1));
  for (int k = 2; k <= 500; ++k) {
    Rational next = complement_torsion_valuation_sum(P, i, k);
    Rational f_cur = (qr * next - cur) / (qr - Rational(1));
    bool sufficient = lambda_iter(P, P.slope(j0), k - 1) <= qn_lambda_n;
    if (f_cur == f_prev && sufficient) return f_cur;
    prev = cur;
    cur = next;
    f_prev = f_cur;
  }
  throw_invariant("hodge_tate_norm: stabilization not reached");
}

Rational hodge_tate_norm_of_covector(const NewtonPolygon& P,
                                     const std::vector<std::int64_t>& phi) {
  NEWTB_REQUIRE(static_cast<int>(phi.size()) == P.n(),
                "covector: bad coordinate count");
  Rational best = Rational::inf();
  for (int i = 1; i <= P.n(); ++i) {
    if (phi[i - 1] < 0) continue;  // zero coordinate
    best = newtb::min(best, Rational(phi[i - 1]) + hodge_tate_norm(P, i));
  }
  NEWTB_REQUIRE(!best.is_inf(), "covector: zero covector");
  return best;
}

namespace {

// ||phi||_lambda = min_i ( v(phi_i) - k(i, lambda) ): the additive norm
// with unit ball (Fil_lambda)^dual.
Rational lower_dual_norm(const std::vector<std::int64_t>& phi,
                         const std::vector<std::int64_t>& k) {
  Rational best = Rational::inf();
  for (size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] < 0) continue;
    best = newtb::min(best, Rational(phi[i] - k[i]));
  }
  return best;
}

Rational upper_dual_norm(const std::vector<std::int64_t>& phi,
                         const std::vector<std::int64_t>& l) {
  Rational best = Rational::inf();
  for (size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] < 0) continue;
    best = newtb::min(best, Rational(phi[i] + l[i]));
  }
  return best;
}

}  // namespace

Rational hodge_tate_norm_integral_lower(const NewtonPolygon& P,
                                        const std::vector<std::int64_t>& phi,
                                        const Rational& mu) {
  const int n = P.n();
  NEWTB_REQUIRE(static_cast<int>(phi.size()) == n, "integral: bad covector");
  NEWTB_REQUIRE(mu.is_positive() && mu <= P.slope(n),
                "integral: need 0 < mu <= lambda_n");
  const Rational q(P.ctx().q);
  Rational lo = mu / Rational(P.ctx().qi(n));
  // Breakpoints: the sauts lambda_i^{(k)} inside [lo, mu].
  PLFun psi = psi_pi_torsion(P);
  std::set<Rational> cuts{lo, mu};
  for (int i = 1; i <= n; ++i) {
    Rational v = P.slope(i);
    while (v > lo) {
      if (v < mu) cuts.insert(v);
      v = psi(v);
    }
  }
  std::vector<Rational> grid(cuts.begin(), cuts.end());
  Rational norm_mu = lower_dual_norm(phi, lower_fil_exponents(P, mu));
  NEWTB_REQUIRE(!norm_mu.is_inf(), "integral: zero covector");
  Rational integral(0);
  for (size_t t = 0; t + 1 < grid.size(); ++t) {
    // k(i, .) is constant on (grid[t], grid[t+1]]; evaluate there.
    std::vector<std::int64_t> k = lower_fil_exponents(P, grid[t + 1]);
    Int ksum = 0;
    for (auto v : k) ksum += v;
    Rational f = rat_pow(Int(P.ctx().q), static_cast<long long>(ksum));
    Rational norm_l = lower_dual_norm(phi, k);
    Rational diff = norm_l - norm_mu;
    NEWTB_CHECK(diff.den() == 1, "integral: non-integer norm difference");
    Rational weight = rat_pow(Int(P.ctx().q),
                              static_cast<long long>(diff.num()));
    integral += f * weight * (grid[t + 1] - grid[t]);
  }
  return q / (q - Rational(1)) * integral + norm_mu;
}

Rational hodge_tate_norm_integral_upper(const NewtonPolygon& P,
                                        const std::vector<std::int64_t>& phi,
                                        const Rational& mu) {
  const int n = P.n();
  NEWTB_REQUIRE(static_cast<int>(phi.size()) == n, "integral: bad covector");
  NEWTB_REQUIRE(mu >= P.slope(1) + Rational(1),
                "integral: upper variant needs mu >= lambda_1 + 1");
  const Rational q(P.ctx().q);
  Rational lo = mu - Rational(1);
  // Breakpoints: the jump values eta^{o m}(lambda_i) inside [lo, mu].
  PLFun eta = eta_pi_torsion(P);
  std::set<Rational> cuts{lo, mu};
  for (int i = 1; i <= n; ++i) {
    Rational v = eta(P.slope(i));
    while (v <= mu) {
      if (v > lo) cuts.insert(v);
      v = eta(v);
    }
  }
  std::vector<Rational> grid(cuts.begin(), cuts.end());
  Rational norm_mu = upper_dual_norm(phi, upper_fil_exponents(P, mu));
  NEWTB_REQUIRE(!norm_mu.is_inf(), "integral: zero covector");
  Rational integral(0);
  for (size_t t = 0; t + 1 < grid.size(); ++t) {
    std::vector<std::int64_t> l = upper_fil_exponents(P, grid[t + 1]);
    Rational norm_l = upper_dual_norm(phi, l);
    Rational diff = norm_l - norm_mu;
    NEWTB_CHECK(diff.den() == 1, "integral: non-integer norm difference");
    Rational weight = rat_pow(Int(P.ctx().q),
                              static_cast<long long>(diff.num()));
    integral += weight * (grid[t + 1] - grid[t]);
  }
  return q / (q - Rational(1)) * integral + norm_mu;
}

StepFun torsion_counting(const NewtonPolygon& P, int k) {
  const int n = P.n();
  NEWTB_REQUIRE(k >= 0, "torsion_counting: negative level");
  const std::int64_t q = P.ctx().q;
  // Aggregate multiplicities of each valuation over the order profiles.
  std::map<Rational, Int> by_valuation;
  std::vector<int> profile(n, 0);
  bool done = false;
  while (!done) {
    bool all_zero = true;
    for (int c : profile) {
      if (c != 0) all_zero = false;
    }
    if (!all_zero) {
      Int mult = 1;
      Rational v = Rational::inf();
      for (int i = 0; i < n; ++i) {
        mult *= order_multiplicity(q, profile[i]);
        v = newtb::min(v, lambda_iter(P, P.slope(i + 1), profile[i]));
      }
      by_valuation[v] += mult;
    }
    done = true;
    for (int i = 0; i < n; ++i) {
      if (++profile[i] <= k) {
        done = false;
        break;
      }
      profile[i] = 0;
    }
  }
  // N(t) = 1 + number of points of valuation >= t.
  std::vector<Rational> xs{Rational(0)};
  std::vector<Rational> vals;
  Int above = 0;
  for (const auto& [v, c] : by_valuation) above += c;
  vals.push_back(Rational(above + 1));
  for (const auto& [v, c] : by_valuation) {
    above -= c;
    xs.push_back(v);
    vals.push_back(Rational(above + 1));
  }
  return StepFun(std::move(xs), std::move(vals), Rational::inf());
}

}  // namespace newtb
