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

#include "newtb/commands.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include "newtb/hecke.hpp"
#include "newtb/io.hpp"
#include "newtb/iwahori.hpp"
#include "newtb/skeleton.hpp"
#include "newtb/torsion.hpp"
#include "newtb/ultrametric.hpp"

namespace newtb {

namespace {

using Options = std::map<std::string, std::string>;

const std::string& req(const Options& opts, const std::string& key) {
  auto it = opts.find(key);
  NEWTB_REQUIRE(it != opts.end(), "missing option '" + key + "='");
  return it->second;
}

std::string opt_or(const Options& opts, const std::string& key,
                   const std::string& dflt) {
  auto it = opts.find(key);
  return it == opts.end() ? dflt : it->second;
}

std::int64_t to_i64(const std::string& s) {
  Rational r = Rational::parse(s);
  NEWTB_REQUIRE(!r.is_inf() && r.den() == 1, "expected an integer, got " + s);
  NEWTB_REQUIRE(r.num() >= std::numeric_limits<std::int64_t>::min() &&
                    r.num() <= std::numeric_limits<std::int64_t>::max(),
                "integer out of range");
  return static_cast<std::int64_t>(r.num());
}

Context parse_ctx(const Options& opts) {
  return Context(to_i64(req(opts, "q")), static_cast<int>(to_i64(req(opts,
                                                                     "n"))));
}

NewtonPolygon parse_P(const Options& opts, const Context& ctx) {
  // P is given as the slope csv.
  return NewtonPolygon(ctx, parse_rational_csv(req(opts, "P")));
}

std::uint64_t enum_cap() {
  if (const char* env = std::getenv("NEWTB_ENUM_CAP")) {
    return static_cast<std::uint64_t>(to_i64(env));
  }
  return kDefaultEnumCap;
}

// Inequality list "c1,...,cn>=r;..." (or ">" for strict) over the n
// barycentric coordinates; "D=empty" denotes the empty polyhedron.
std::vector<LinIneq> parse_domain(const std::string& text, int n) {
  std::vector<LinIneq> out;
  if (text == "empty") {
    LinIneq q;
    q.coeffs.assign(n, Rational(0));
    q.rhs = Rational(0);
    q.strict = true;  // 0 > 0: infeasible
    out.push_back(q);
    return out;
  }
  std::string cur;
  std::vector<std::string> clauses;
  for (char ch : text) {
    if (ch == ';') {
      clauses.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) clauses.push_back(cur);
  for (const std::string& clause : clauses) {
    size_t ge = clause.find(">=");
    LinIneq q;
    std::string lhs;
    if (ge != std::string::npos) {
      lhs = clause.substr(0, ge);
      q.rhs = Rational::parse(clause.substr(ge + 2));
      q.strict = false;
    } else {
      size_t gt = clause.find('>');
      NEWTB_REQUIRE(gt != std::string::npos,
                    "domain clause needs '>=' or '>': " + clause);
      lhs = clause.substr(0, gt);
      q.rhs = Rational::parse(clause.substr(gt + 1));
      q.strict = true;
    }
    q.coeffs = parse_rational_csv(lhs);
    NEWTB_REQUIRE(static_cast<int>(q.coeffs.size()) == n,
                  "domain clause arity != n");
    out.push_back(std::move(q));
  }
  return out;
}

std::string svg_decomposition(const Context& ctx, const Rational& v_max,
                              long long resolution);
int selftest(std::ostream& os);

std::string run_verb(const std::string& verb, const Options& opts) {
  std::ostringstream os;
  if (verb == "newt") {
    Context ctx = parse_ctx(opts);
    NewtonPolygon P = opts.count("v")
        ? from_coordinates(ctx, parse_rational_csv(req(opts, "v")))
        : parse_P(opts, ctx);
    os << to_text(P) << "\n";
    if (opts.count("t")) {
      os << "value " << eval(P, Rational::parse(req(opts, "t"))).str()
         << "\n";
    }
  } else if (verb == "lambda") {
    Context ctx = parse_ctx(opts);
    NewtonPolygon P = parse_P(opts, ctx);
    Rational lam = Rational::parse(req(opts, "lam"));
    std::int64_t k = to_i64(req(opts, "k"));
    os << lambda_iter(P, lam, k).str() << "\n";
  } else if (verb == "fil") {
    Context ctx = parse_ctx(opts);
    NewtonPolygon P = parse_P(opts, ctx);
    if (opts.count("mu")) {
      Rational mu = Rational::parse(req(opts, "mu"));
      os << "#schema: mu\tlower_exponents\tlower_class\tupper_exponents\t"
            "upper_class\n";
      os << mu.str() << "\t" << int_csv(lower_fil_exponents(P, mu)) << "\t"
         << to_text(lower_fil_class(P, mu)) << "\t"
         << int_csv(upper_fil_exponents(P, mu)) << "\t"
         << to_text(upper_fil_class(P, mu)) << "\n";
    } else {
      auto [lower, upper] = filtration_class_sets(P);
      os << "#schema: kind\tvertex_class\n";
      for (const auto& v : lower) os << "lower\t" << to_text(v) << "\n";
      for (const auto& v : upper) os << "upper\t" << to_text(v) << "\n";
    }
  } else if (verb == "simplex") {
    if (opts.count("b")) {
      Context ctx = parse_ctx(opts);
      SimplexB S(ctx.n, parse_int_csv(req(opts, "b")));
      os << to_text(S) << "\n";
      for (const auto& v :
           simplex_vertices(S, opt_or(opts, "Q", "0") == "1")) {
        os << to_text(v) << "\n";
      }
    } else {
      Context ctx = parse_ctx(opts);
      NewtonPolygon P = parse_P(opts, ctx);
      RamSimplex S = ram_simplex(P);
      os << to_text(S.b) << "\n";
      os << "#schema: wall_i\twall_j\n";
      for (auto [i, j] : S.walls) os << i << "\t" << j << "\n";
      os << "#schema: vertex\n";
      for (const auto& v : S.vertices) os << to_text(v) << "\n";
    }
  } else if (verb == "hecke") {
    Context ctx = parse_ctx(opts);
    NewtonPolygon P = parse_P(opts, ctx);
    HeckeImage img = hecke_apply(P, parse_int_csv(req(opts, "a")));
    std::vector<std::int64_t> sig(img.sigma.begin(), img.sigma.end());
    os << to_text(img.polygon) << " sigma=" << int_csv(sig) << "\n";
  } else if (verb == "vertexpoly") {
    Context ctx = parse_ctx(opts);
    ApartmentVertex x = pr_Q(ApartmentVertex(parse_int_csv(req(opts,
                                                               "vtx"))));
    os << to_text(vertex_polygon(ctx, x)) << "\n";
  } else if (verb == "psi") {
    Context ctx = parse_ctx(opts);
    os << to_text(psi_map(parse_P(opts, ctx))) << "\n";
  } else if (verb == "psiinv") {
    Context ctx = parse_ctx(opts);
    ApartmentPoint x(parse_rational_csv(req(opts, "pt")));
    os << to_text(psi_inv(ctx, x)) << "\n";
  } else if (verb == "canonical") {
    Context ctx = parse_ctx(opts);
    NewtonPolygon P = parse_P(opts, ctx);
    bool ok = canonical_subgroup_exists(
        P, static_cast<int>(to_i64(req(opts, "r"))), to_i64(req(opts, "k")));
    os << (ok ? "true" : "false") << "\n";
  } else if (verb == "orbit") {
    ApartmentVertex x =
        pr_Q(ApartmentVertex(parse_int_csv(req(opts, "vtx"))));
    std::int64_t bound = to_i64(req(opts, "bound"));
    os << "#schema: vertex\n";
    for (const auto& v : hecke_orbit(x, bound)) os << to_text(v) << "\n";
  } else if (verb == "gh") {
    Context ctx = parse_ctx(opts);
    os << "#schema: subset\tslopes\tcoefficients\n";
    for (const auto& pt : gh_polytope(ctx)) {
      os << "{";
      for (size_t i = 0; i < pt.subset.size(); ++i) {
        if (i) os << ",";
        os << pt.subset[i];
      }
      os << "}\t" << rational_csv(pt.polygon.slopes()) << "\t"
         << rational_csv(pt.coefficients) << "\n";
    }
  } else if (verb == "domain-check") {
    Context ctx = parse_ctx(opts);
    DomainCheck res =
        fundamental_domain_check(ctx, parse_domain(req(opts, "D"), ctx.n));
    os << "covers " << (res.covers ? "true" : "false") << "\n";
    for (const std::string& f : res.faces) os << "face " << f << "\n";
  } else if (verb == "delta") {
    Context ctx = parse_ctx(opts);
    DeltaPoint v(ctx, parse_rational_csv(req(opts, "v")));
    os << to_text(newton_of_delta(v)) << "\n";
    os << to_text(delta_to_apartment(v)) << "\n";
  } else if (verb == "balls") {
    UltrametricRoots roots = parse_roots(req(opts, "roots"));
    Rational eps = Rational::parse(req(opts, "eps"));
    os << "#schema: members\tradius\n";
    for (const auto& bc : ball_components(roots, eps)) {
      for (size_t i = 0; i < bc.members.size(); ++i) {
        if (i) os << ",";
        os << bc.members[i] + 1;
      }
      os << "\t" << bc.radius.str() << "\n";
    }
    if (opts.count("zero")) {
      int zi = static_cast<int>(to_i64(req(opts, "zero"))) - 1;
      os << "zero_radius " << component_of_zero(roots, zi, eps).str()
         << "\n";
    }
  } else if (verb == "svg-decomposition") {
    Context ctx = parse_ctx(opts);
    NEWTB_REQUIRE(ctx.n == 3, "svg-decomposition: only n=3 is supported");
    Rational vmax = Rational::parse(opt_or(opts, "vmax", "2"));
    long long res = to_i64(opt_or(opts, "res", "24"));
    NEWTB_REQUIRE(res >= 2 && res <= 512, "svg-decomposition: bad res");
    os << svg_decomposition(ctx, vmax, res);
  } else if (verb == "hodgetate") {
    Context ctx = parse_ctx(opts);
    os << to_text(hodge_tate_point(parse_P(opts, ctx))) << "\n";
  } else if (verb == "valuation") {
    Context ctx = parse_ctx(opts);
    NewtonPolygon P = parse_P(opts, ctx);
    std::vector<std::int64_t> a = parse_int_csv(req(opts, "a"));
    FiniteSubgroup C = subgroup(P, a, enum_cap());
    os << "kernel_valuation_sum "
       << kernel_valuation_sum(P, C).str() << "\n";
  } else if (verb == "selftest") {
    int rc = selftest(os);
    NEWTB_CHECK(rc == 0, "selftest failed");
  } else {
    throw_argument("unknown verb '" + verb + "'");
  }
  return os.str();
}

}  // namespace

std::string usage_text() {
  return
      "newtb <verb> key=value ...\n"
      "\n"
      "All numbers are exact rationals: 'a/b', 'a', or 'inf'.\n"
      "TSV tables are preceded by a '#schema:' header line.\n"
      "\n"
      "verbs:\n"
      "  newt q= n= (v=<r,..> | P=<r,..>) [t=<r>]   build and evaluate a\n"
      "      polygon (v: coordinate valuations; P: slopes)\n"
      "  lambda q= n= P= lam= k=                    iterated slope l^(k)\n"
      "  fil q= n= P= [mu=]                         ramification filtration\n"
      "      report (single level, or all distinct classes)\n"
      "  simplex q= n= (P= | b=<ints> [Q=1])        ramification simplex of\n"
      "      a polygon, or vertex enumeration of a b-matrix\n"
      "  hecke q= n= P= a=<ints>                    apply (pi^{-a_1},...)\n"
      "  vertexpoly q= n= vtx=<ints>                vertex polygon P(x)\n"
      "  psi q= n= P=                               skeleton bijection\n"
      "  psiinv q= n= pt=<r,..>                     inverse bijection\n"
      "  canonical q= n= P= r= k=                   canonical subgroup test\n"
      "  orbit vtx=<ints> bound=<int>               affine Weyl orbit in Q\n"
      "  gh q= n=                                   Gross-Hopkins polytope\n"
      "  domain-check q= n= D=<ineqs|empty>         fundamental domain test\n"
      "      (ineq: 'c1,..,cn>=r' or '...>r', ';'-separated, barycentric)\n"
      "  delta q= n= v=<r,..>                       Iwahori skeleton point\n"
      "  balls roots=<spec> eps=<r> [zero=<i>]      ball components\n"
      "  hodgetate q= n= P=                         Hodge-Tate point\n"
      "  valuation q= n= P= a=<ints>                kernel valuation sum\n"
      "  svg-decomposition q= n=3 [vmax=] [res=]    chamber figure (SVG)\n"
      "  selftest                                   run the property suite\n"
      "\n"
      "exit codes: 0 ok, 2 input error, 3 internal invariant violation\n"
      "env: NEWTB_ENUM_CAP overrides the torsion enumeration cap\n";
}

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult res;
  if (args.empty() || args[0] == "help" || args[0] == "--help") {
    res.output = usage_text();
    res.exit_code = args.empty() ? 2 : 0;
    return res;
  }
  Options opts;
  for (size_t i = 1; i < args.size(); ++i) {
    size_t eq = args[i].find('=');
    if (eq == std::string::npos) {
      res.exit_code = 2;
      res.output = "error: options must be key=value, got '" + args[i] +
                   "'\n" + usage_text();
      return res;
    }
    opts[args[i].substr(0, eq)] = args[i].substr(eq + 1);
  }
  try {
    res.output = run_verb(args[0], opts);
    res.exit_code = 0;
  } catch (const Error& e) {
    res.exit_code = (e.kind() == Error::Kind::Invariant) ? 3 : 2;
    res.output = std::string("error: ") + e.what() + "\n";
    if (res.exit_code == 2 && std::string(e.what()).find("unknown verb") !=
                                  std::string::npos) {
      res.output += usage_text();
    }
  } catch (const std::exception& e) {
    res.exit_code = 3;
    res.output = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

namespace {

// ---------------------------------------------------------------------------
// SVG rendering of the simplicial decomposition (n = 3): the square
// (0, vmax]^2 of coordinate valuations (v(x_1), v(x_2)), each cell
// colored by the chamber of its center polygon, walls drawn between
// cells of distinct chambers.  Coordinates are emitted as integers on
// a fixed-denominator grid (scale cells-per-unit), so the output stays
// exact and byte-deterministic.

std::string chamber_key(const NewtonPolygon& P) {
  Chamber ch = chamber_of(P);
  std::string key = int_csv(ch.b.lex());
  for (auto [i, j] : ch.walls) {
    key += "|w" + std::to_string(i) + std::to_string(j);
  }
  return key;
}

std::string svg_decomposition(const Context& ctx, const Rational& v_max,
                              long long resolution) {
  NEWTB_REQUIRE(v_max.is_positive(), "svg: vmax must be positive");
  const long long R = resolution;
  const long long cell_px = 16;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
     << "width=\"" << R * cell_px << "\" height=\"" << R * cell_px
     << "\" viewBox=\"0 0 " << R * cell_px << " " << R * cell_px << "\">\n";
  os << "<!-- cell (i,j) covers v(x_1) in (i, i+1]*vmax/" << R
     << ", v(x_2) in (j, j+1]*vmax/" << R << "; y axis points up -->\n";
  static const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759",
                                   "#76b7b2", "#59a14f", "#edc948",
                                   "#b07aa1", "#ff9da7", "#9c755f",
                                   "#bab0ac"};
  // Chamber key per cell, colored by first-appearance order (keeps the
  // output independent of hashing details).
  std::vector<std::vector<std::string>> keys(
      R, std::vector<std::string>(R));
  std::map<std::string, int> color_of;
  for (long long i = 0; i < R; ++i) {
    for (long long j = 0; j < R; ++j) {
      Rational v1 = v_max * Rational(2 * i + 1, 2 * R);
      Rational v2 = v_max * Rational(2 * j + 1, 2 * R);
      NewtonPolygon P = from_coordinates(ctx, {v1, v2});
      keys[i][j] = chamber_key(P);
      if (!color_of.count(keys[i][j])) {
        int next = static_cast<int>(color_of.size());
        color_of[keys[i][j]] = next;
      }
    }
  }
  for (long long i = 0; i < R; ++i) {
    for (long long j = 0; j < R; ++j) {
      const char* fill = kPalette[color_of[keys[i][j]] % 10];
      os << "<rect x=\"" << i * cell_px << "\" y=\""
         << (R - 1 - j) * cell_px << "\" width=\"" << cell_px
         << "\" height=\"" << cell_px << "\" fill=\"" << fill
         << "\"><title>" << keys[i][j] << "</title></rect>\n";
    }
  }
  // Wall strokes between cells of different chambers.
  os << "<g stroke=\"#222222\" stroke-width=\"2\">\n";
  for (long long i = 0; i < R; ++i) {
    for (long long j = 0; j < R; ++j) {
      if (i + 1 < R && keys[i][j] != keys[i + 1][j]) {
        os << "<line x1=\"" << (i + 1) * cell_px << "\" y1=\""
           << (R - 1 - j) * cell_px << "\" x2=\"" << (i + 1) * cell_px
           << "\" y2=\"" << (R - j) * cell_px << "\"/>\n";
      }
      if (j + 1 < R && keys[i][j] != keys[i][j + 1]) {
        os << "<line x1=\"" << i * cell_px << "\" y1=\""
           << (R - 1 - j) * cell_px << "\" x2=\"" << (i + 1) * cell_px
           << "\" y2=\"" << (R - 1 - j) * cell_px << "\"/>\n";
      }
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Built-in property suite (fast subset; the full suites live in the
// test binaries).

int selftest(std::ostream& os) {
  int failures = 0;
  auto check = [&](bool ok, const char* what) {
    os << (ok ? "ok " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  Context c22(2, 2);
  NewtonPolygon flat = flat_polygon(c22);
  NewtonPolygon steep(c22, {Rational(2, 3), Rational(1, 6)});
  check(eval(flat, Rational(2)) == Rational(2, 3), "flat polygon value");
  check(lambda_iter(flat, Rational(1, 3), 2) == Rational(1, 12),
        "Psi iteration");
  check(hecke_apply(flat, {1, 0}).polygon == steep, "hecke apply");
  check(vertex_polygon(c22, ApartmentVertex({0, 1})) == steep,
        "vertex polygon");
  check(to_text(psi_map(flat)) == "pt 0,0", "psi at the flat polygon");
  check(to_text(psi_map(steep)) == "pt 0,1", "psi at a vertex polygon");
  check(psi_inv(c22, psi_map(steep)) == steep, "psi round-trip");
  check(hodge_tate_norm(flat, 1) == Rational(2, 3), "Hodge-Tate norm");
  auto C = subgroup(flat, {1, 0});
  check(kernel_valuation_sum(flat, C) == Rational(1, 3),
        "kernel valuation sum");
  auto field = C.elements.front().field_ptr();
  check(isogeny_point_valuation(
            flat, C, TorsionVector::basis_point(field, 2, 1, 2, 1)) ==
            Rational(2, 3),
        "isogeny point valuation");
  DeltaPoint d(c22, {Rational(2, 3), Rational(1, 3)});
  check(newton_of_delta(d) == steep, "Iwahori slope formula");
  check(compose_star_check(pi_multiplication_root_valuations(flat),
                           pi_multiplication_root_valuations(flat)),
        "composition of duals");
  return failures == 0 ? 0 : 1;
}

}  // namespace

}  // namespace newtb
