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

#include "newtb/building.hpp"

#include <algorithm>
#include <map>

namespace newtb {

namespace {

// Index of (i,j), 1 <= i < j <= n, in lexicographic order.
int pair_index(int n, int i, int j) {
  NEWTB_REQUIRE(1 <= i && i < j && j <= n, "root index out of range");
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += n - a;
  return idx + (j - i - 1);
}

}  // namespace

ApartmentVertex::ApartmentVertex(std::vector<std::int64_t> exponents)
    : c_(std::move(exponents)) {
  NEWTB_REQUIRE(!c_.empty(), "vertex: empty coordinate vector");
  std::int64_t m = *std::min_element(c_.begin(), c_.end());
  for (auto& v : c_) v -= m;
}

ApartmentPoint::ApartmentPoint(std::vector<Rational> coords)
    : c_(std::move(coords)) {
  NEWTB_REQUIRE(!c_.empty(), "point: empty coordinate vector");
  Rational m = c_.front();
  for (const auto& v : c_) {
    NEWTB_REQUIRE(!v.is_inf(), "point: infinite coordinate");
    m = newtb::min(m, v);
  }
  for (auto& v : c_) v -= m;
}

ApartmentPoint::ApartmentPoint(const ApartmentVertex& v) {
  for (std::int64_t e : v.c()) c_.push_back(Rational(e));
}

SimplexB::SimplexB(int n, std::vector<std::int64_t> b_lex)
    : n_(n), b_(std::move(b_lex)) {
  NEWTB_REQUIRE(n_ >= 1, "simplexB: n must be >= 1");
  NEWTB_REQUIRE(static_cast<int>(b_.size()) == n_ * (n_ - 1) / 2,
                "simplexB: wrong number of root values");
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      for (int k = j + 1; k <= n_; ++k) {
        std::int64_t d = b(i, k) - b(i, j) - b(j, k);
        NEWTB_REQUIRE(d == 0 || d == 1,
                      "simplexB: b_ik not in {b_ij+b_jk, b_ij+b_jk+1}");
      }
    }
  }
}

std::int64_t SimplexB::b(int i, int j) const {
  return b_[pair_index(n_, i, j)];
}

std::int64_t alpha(int i, int j, const ApartmentVertex& x) {
  NEWTB_REQUIRE(1 <= i && i < j && j <= x.n(), "alpha: index out of range");
  return x.c()[j - 1] - x.c()[i - 1];
}

Rational alpha(int i, int j, const ApartmentPoint& x) {
  NEWTB_REQUIRE(1 <= i && i < j && j <= x.n(), "alpha: index out of range");
  return x.c()[j - 1] - x.c()[i - 1];
}

std::vector<ApartmentVertex> simplex_vertices(const SimplexB& S,
                                              bool restrict_to_Q) {
  const int n = S.n();
  // Gauge c_1 = 0; then c_j in {b_1j, b_1j + 1} for j >= 2.  Filter the
  // 2^{n-1} candidates by the remaining pair constraints; a valid
  // b-matrix admits exactly n of them.
  std::vector<ApartmentVertex> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<std::int64_t> c(n, 0);
    for (int j = 2; j <= n; ++j) {
      c[j - 1] = S.b(1, j) + ((mask >> (j - 2)) & 1u);
    }
    bool ok = true;
    for (int i = 2; i <= n && ok; ++i) {
      for (int j = i + 1; j <= n && ok; ++j) {
        std::int64_t d = c[j - 1] - c[i - 1] - S.b(i, j);
        ok = (d == 0 || d == 1);
      }
    }
    if (ok) out.push_back(ApartmentVertex(std::move(c)));
  }
  NEWTB_CHECK(static_cast<int>(out.size()) == n,
              "simplexB: vertex count != n");
  std::sort(out.begin(), out.end());
  if (restrict_to_Q) {
    std::vector<ApartmentVertex> q;
    for (const auto& v : out) {
      if (in_Q(v)) q.push_back(v);
    }
    return q;
  }
  return out;
}

SimplexB b_of_simplex(const std::vector<ApartmentVertex>& vertices) {
  NEWTB_REQUIRE(!vertices.empty(), "b_of_simplex: empty vertex set");
  const int n = vertices.front().n();
  NEWTB_REQUIRE(static_cast<int>(vertices.size()) == n,
                "b_of_simplex: a maximal simplex has n vertices");
  std::vector<std::int64_t> b;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::int64_t m = alpha(i, j, vertices.front());
      for (const auto& v : vertices) {
        m = std::min(m, alpha(i, j, v));
      }
      b.push_back(m);
    }
  }
  SimplexB S(n, std::move(b));
  // Round-trip validation: rejects vertex sets that are not a maximal
  // simplex.
  std::vector<ApartmentVertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  NEWTB_REQUIRE(simplex_vertices(S) == sorted,
                "b_of_simplex: input is not the vertex set of a simplex");
  return S;
}

ApartmentVertex pr_Q(const ApartmentVertex& x) {
  std::vector<std::int64_t> c = x.c();
  std::sort(c.begin(), c.end());
  return ApartmentVertex(std::move(c));
}

ApartmentPoint pr_Q(const ApartmentPoint& x) {
  std::vector<Rational> c = x.c();
  std::sort(c.begin(), c.end());
  return ApartmentPoint(std::move(c));
}

bool in_Q(const ApartmentVertex& x) {
  return std::is_sorted(x.c().begin(), x.c().end());
}

bool in_Q(const ApartmentPoint& x) {
  return std::is_sorted(x.c().begin(), x.c().end());
}

ApartmentVertex translate(const std::vector<std::int64_t>& a,
                          const ApartmentVertex& x) {
  NEWTB_REQUIRE(static_cast<int>(a.size()) == x.n(),
                "translate: size mismatch");
  std::vector<std::int64_t> c = x.c();
  for (int i = 0; i < x.n(); ++i) c[i] += a[i];
  return ApartmentVertex(std::move(c));
}

ApartmentPoint translate(const std::vector<std::int64_t>& a,
                         const ApartmentPoint& x) {
  NEWTB_REQUIRE(static_cast<int>(a.size()) == x.n(),
                "translate: size mismatch");
  std::vector<Rational> c = x.c();
  for (int i = 0; i < x.n(); ++i) c[i] += Rational(a[i]);
  return ApartmentPoint(std::move(c));
}

namespace {

// {[combine(c + t, d)] : t in Z} stabilizes for |t| large; sweep the
// window where both arguments interact.
std::set<ApartmentVertex> shift_family(const ApartmentVertex& x,
                                       const ApartmentVertex& y,
                                       bool use_min) {
  NEWTB_REQUIRE(x.n() == y.n(), "join/meet: size mismatch");
  const int n = x.n();
  std::int64_t lo = y.c()[0] - x.c()[0], hi = lo;
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, y.c()[i] - x.c()[i]);
    hi = std::max(hi, y.c()[i] - x.c()[i]);
  }
  std::set<ApartmentVertex> out;
  for (std::int64_t t = lo - 1; t <= hi + 1; ++t) {
    std::vector<std::int64_t> c(n);
    for (int i = 0; i < n; ++i) {
      std::int64_t a = x.c()[i] + t, b = y.c()[i];
      c[i] = use_min ? std::min(a, b) : std::max(a, b);
    }
    out.insert(ApartmentVertex(std::move(c)));
  }
  return out;
}

}  // namespace

std::set<ApartmentVertex> join(const ApartmentVertex& x,
                               const ApartmentVertex& y) {
  // L_1 + L_2 takes coordinate-wise min of exponents.
  return shift_family(x, y, /*use_min=*/true);
}

std::set<ApartmentVertex> meet(const ApartmentVertex& x,
                               const ApartmentVertex& y) {
  // L_1 n L_2 takes coordinate-wise max of exponents.
  return shift_family(x, y, /*use_min=*/false);
}

std::set<ApartmentVertex> enclos(const std::set<ApartmentVertex>& M) {
  NEWTB_REQUIRE(!M.empty(), "enclos: empty set");
  const int n = M.begin()->n();
  // Bounds on every root value over M.
  std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> box;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::int64_t lo = alpha(i, j, *M.begin()), hi = lo;
      for (const auto& v : M) {
        lo = std::min(lo, alpha(i, j, v));
        hi = std::max(hi, alpha(i, j, v));
      }
      box[{i, j}] = {lo, hi};
    }
  }
  // Gauge c_1 = 0 and enumerate c_j within the alpha_1j bounds.
  std::set<ApartmentVertex> out;
  std::vector<std::int64_t> c(n, 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      out.insert(ApartmentVertex(c));
      return;
    }
    auto [lo, hi] = box[{1, j}];
    for (std::int64_t v = lo; v <= hi; ++v) {
      c[j - 1] = v;
      bool ok = true;
      for (int i = 2; i < j && ok; ++i) {
        auto [l2, h2] = box[{i, j}];
        std::int64_t a = c[j - 1] - c[i - 1];
        ok = (l2 <= a && a <= h2);
      }
      if (ok) self(self, j + 1);
    }
  };
  if (n == 1) {
    out.insert(*M.begin());
  } else {
    rec(rec, 2);
  }
  return out;
}

ApartmentVertex dual_vertex(const ApartmentVertex& x) {
  std::vector<std::int64_t> c;
  for (std::int64_t v : x.c()) c.push_back(-v);
  return ApartmentVertex(std::move(c));
}

ApartmentPoint dual_point(const ApartmentPoint& x) {
  std::vector<Rational> c;
  for (const Rational& v : x.c()) c.push_back(-v);
  return ApartmentPoint(std::move(c));
}

int label(const ApartmentVertex& x, const ApartmentVertex& origin) {
  NEWTB_REQUIRE(x.n() == origin.n(), "label: size mismatch");
  const int n = x.n();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) s += x.c()[i] - origin.c()[i];
  std::int64_t r = s % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

int label(const ApartmentVertex& x) {
  return label(x, ApartmentVertex(std::vector<std::int64_t>(x.n(), 0)));
}

std::vector<std::vector<int>> rotation_group(
    const std::vector<ApartmentVertex>& chamber) {
  NEWTB_REQUIRE(!chamber.empty(), "rotation_group: empty chamber");
  const int n = chamber.front().n();
  NEWTB_REQUIRE(static_cast<int>(chamber.size()) == n,
                "rotation_group: a chamber has n vertices");
  b_of_simplex(chamber);  // validates the simplex structure
  std::vector<int> by_label(n, -1);
  for (int m = 0; m < n; ++m) {
    int l = label(chamber[m]);
    NEWTB_REQUIRE(by_label[l] == -1, "rotation_group: repeated label");
    by_label[l] = m;
  }
  std::vector<std::vector<int>> rotations;
  for (int a = 0; a < n; ++a) {
    std::vector<int> perm(n);
    for (int m = 0; m < n; ++m) {
      int l = label(chamber[m]);
      perm[m] = by_label[(l + a) % n];
    }
    rotations.push_back(std::move(perm));
  }
  return rotations;
}

}  // namespace newtb
