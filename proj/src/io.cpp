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

#include "newtb/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace newtb {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Int parse_int(const std::string& text) {
  std::string t = strip(text);
  NEWTB_REQUIRE(!t.empty(), "parse: empty integer");
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  NEWTB_REQUIRE(i < t.size(), "parse: bad integer '" + text + "'");
  for (; i < t.size(); ++i) {
    NEWTB_REQUIRE(std::isdigit(static_cast<unsigned char>(t[i])),
                  "parse: bad integer '" + text + "'");
  }
  return Int(t);
}

// "key=value" fields of a canonical text form.
std::string field(const std::string& text, const std::string& key) {
  std::string pat = key + "=";
  size_t pos = text.find(pat);
  NEWTB_REQUIRE(pos != std::string::npos,
                "parse: missing field '" + key + "' in '" + text + "'");
  size_t start = pos + pat.size();
  size_t end = start;
  int depth = 0;
  while (end < text.size() && (depth > 0 || text[end] != ' ')) {
    if (text[end] == '(') ++depth;
    if (text[end] == ')') --depth;
    ++end;
  }
  return text.substr(start, end - start);
}

std::string parenthesized(const std::string& v) {
  NEWTB_REQUIRE(v.size() >= 2 && v.front() == '(' && v.back() == ')',
                "parse: expected parenthesized list, got '" + v + "'");
  return v.substr(1, v.size() - 2);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string t = strip(text);
  NEWTB_REQUIRE(!t.empty(), "parse: empty rational");
  if (t == "inf") return Rational::inf();
  size_t slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_int(t));
  Int num = parse_int(t.substr(0, slash));
  Int den = parse_int(t.substr(slash + 1));
  NEWTB_REQUIRE(den != 0, "parse: zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : split(text, ',')) {
    out.push_back(Rational::parse(part));
  }
  return out;
}

std::vector<std::int64_t> parse_int_csv(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const std::string& part : split(text, ',')) {
    Int v = parse_int(part);
    NEWTB_REQUIRE(v >= std::numeric_limits<std::int64_t>::min() &&
                      v <= std::numeric_limits<std::int64_t>::max(),
                  "parse: integer out of range");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

std::string rational_csv(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  return os.str();
}

std::string int_csv(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string to_text(const PLFun& f) {
  std::ostringstream os;
  os << "plfun lo=" << f.domain_lo().str() << " hi=" << f.domain_hi().str()
     << " pts=(";
  const auto& pts = f.breakpoints();
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ";";
    os << pts[i].first.str() << ":" << pts[i].second.str();
  }
  os << ") tail=" << (f.is_unbounded() ? f.tail_slope().str() : "0");
  return os.str();
}

PLFun parse_plfun(const std::string& text) {
  NEWTB_REQUIRE(text.rfind("plfun ", 0) == 0, "parse: not a plfun");
  Rational lo = Rational::parse(field(text, "lo"));
  std::string hi_text = field(text, "hi");
  Rational tail = Rational::parse(field(text, "tail"));
  std::vector<PLFun::Point> pts;
  for (const std::string& part : split(parenthesized(field(text, "pts")),
                                       ';')) {
    std::vector<std::string> xy = split(part, ':');
    NEWTB_REQUIRE(xy.size() == 2, "parse: bad plfun point '" + part + "'");
    pts.push_back({Rational::parse(xy[0]), Rational::parse(xy[1])});
  }
  PLFun f = (hi_text == "inf") ? PLFun::unbounded(std::move(pts), tail)
                               : PLFun::bounded(std::move(pts));
  NEWTB_REQUIRE(f.domain_lo() == lo, "parse: plfun lo mismatch");
  if (hi_text != "inf") {
    NEWTB_REQUIRE(f.domain_hi() == Rational::parse(hi_text),
                  "parse: plfun hi mismatch");
  }
  return f;
}

std::string to_text(const NewtonPolygon& P) {
  std::ostringstream os;
  os << "newt q=" << P.ctx().q << " n=" << P.ctx().n
     << " slopes=" << rational_csv(P.slopes());
  return os.str();
}

NewtonPolygon parse_polygon(const std::string& text) {
  NEWTB_REQUIRE(text.rfind("newt ", 0) == 0, "parse: not a polygon");
  Int q = parse_int(field(text, "q"));
  Int n = parse_int(field(text, "n"));
  NEWTB_REQUIRE(q <= Int(std::numeric_limits<std::int64_t>::max()) && n <= 64,
                "parse: polygon context out of range");
  Context ctx(static_cast<std::int64_t>(q), static_cast<int>(n));
  return NewtonPolygon(ctx, parse_rational_csv(field(text, "slopes")));
}

std::string to_text(const ApartmentVertex& x) {
  std::ostringstream os;
  os << "vtx " << int_csv(x.c());
  return os.str();
}

ApartmentVertex parse_vertex(const std::string& text) {
  NEWTB_REQUIRE(text.rfind("vtx ", 0) == 0, "parse: not a vertex");
  return ApartmentVertex(parse_int_csv(strip(text.substr(4))));
}

std::string to_text(const ApartmentPoint& x) {
  std::ostringstream os;
  os << "pt " << rational_csv(x.c());
  return os.str();
}

std::string to_text(const SimplexB& S) {
  std::ostringstream os;
  os << "simplexB n=" << S.n() << " b=(" << int_csv(S.lex()) << ")";
  return os.str();
}

SimplexB parse_simplexB(const std::string& text) {
  NEWTB_REQUIRE(text.rfind("simplexB ", 0) == 0, "parse: not a simplexB");
  Int n = parse_int(field(text, "n"));
  NEWTB_REQUIRE(n >= 1 && n <= 64, "parse: simplexB size out of range");
  return SimplexB(static_cast<int>(n),
                  parse_int_csv(parenthesized(field(text, "b"))));
}

std::string to_text(const UltrametricRoots& r) {
  std::ostringstream os;
  os << "roots m=" << r.m() << " v=";
  for (int i = 0; i < r.m(); ++i) {
    if (i) os << ";";
    os << r.v()[i].str();
  }
  os << " d=(";
  bool first = true;
  for (int i = 0; i < r.m(); ++i) {
    for (int j = i + 1; j < r.m(); ++j) {
      if (!first) os << ";";
      first = false;
      os << (i + 1) << "," << (j + 1) << ":" << r.d(i, j).str();
    }
  }
  os << ")";
  return os.str();
}

UltrametricRoots parse_roots(const std::string& text) {
  NEWTB_REQUIRE(text.rfind("roots ", 0) == 0, "parse: not root data");
  Int m_big = parse_int(field(text, "m"));
  NEWTB_REQUIRE(m_big >= 1 && m_big <= 64, "parse: root count out of range");
  const int m = static_cast<int>(m_big);
  std::vector<Rational> v;
  for (const std::string& part : split(field(text, "v"), ';')) {
    v.push_back(Rational::parse(part));
  }
  NEWTB_REQUIRE(static_cast<int>(v.size()) == m,
                "parse: root valuation count mismatch");
  std::vector<std::vector<Rational>> d(m, std::vector<Rational>(m));
  std::vector<std::vector<bool>> have(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    d[i][i] = Rational::inf();
    have[i][i] = true;
  }
  std::string dlist = parenthesized(field(text, "d"));
  if (!strip(dlist).empty()) {
    for (const std::string& part : split(dlist, ';')) {
      std::vector<std::string> kv = split(part, ':');
      NEWTB_REQUIRE(kv.size() == 2, "parse: bad distance entry '" + part + "'");
      std::vector<std::string> ij = split(kv[0], ',');
      NEWTB_REQUIRE(ij.size() == 2, "parse: bad distance key '" + part + "'");
      Int bi = parse_int(ij[0]), bj = parse_int(ij[1]);
      NEWTB_REQUIRE(bi >= 1 && bi <= m && bj >= 1 && bj <= m && bi != bj,
                    "parse: distance index out of range");
      int i = static_cast<int>(bi) - 1, j = static_cast<int>(bj) - 1;
      d[i][j] = d[j][i] = Rational::parse(kv[1]);
      have[i][j] = have[j][i] = true;
    }
  }
  // Fill omitted pairs: first from the valuations (d_ij = min(v_i, v_j)
  // whenever v_i != v_j), then by the max-min ultrametric closure.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!have[i][j] && v[i] != v[j]) {
        d[i][j] = d[j][i] = newtb::min(v[i], v[j]);
        have[i][j] = have[j][i] = true;
      }
    }
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (have[i][j] || i == j) continue;
        for (int k = 0; k < m; ++k) {
          if (k == i || k == j || !have[i][k] || !have[k][j]) continue;
          // d_ij = min(d_ik, d_kj) whenever the two differ.
          if (d[i][k] != d[k][j]) {
            d[i][j] = d[j][i] = newtb::min(d[i][k], d[k][j]);
            have[i][j] = have[j][i] = true;
            progress = true;
            break;
          }
        }
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      NEWTB_REQUIRE(have[i][j],
                    "parse: distance pair left undetermined by the closure");
    }
  }
  return UltrametricRoots(std::move(v), std::move(d));
}

}  // namespace newtb
