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

#include "newtb.h"

#include <cstring>
#include <string>

#include "newtb/commands.hpp"
#include "newtb/hecke.hpp"
#include "newtb/io.hpp"
#include "newtb/skeleton.hpp"

using namespace newtb;

struct nb_polygon {
  NewtonPolygon value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nb_status status_of(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::Argument:
      return NB_ERR_ARGUMENT;
    case Error::Kind::Resource:
      return NB_ERR_RESOURCE;
    case Error::Kind::Invariant:
      return NB_ERR_INTERNAL;
  }
  return NB_ERR_INTERNAL;
}

template <typename Fn>
nb_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NB_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NB_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* nb_status_name(nb_status status) {
  switch (status) {
    case NB_OK:
      return "ok";
    case NB_ERR_ARGUMENT:
      return "argument error";
    case NB_ERR_INTERNAL:
      return "internal invariant violation";
    case NB_ERR_RESOURCE:
      return "resource cap exceeded";
  }
  return "unknown status";
}

const char* nb_last_error(void) { return g_last_error.c_str(); }

void nb_string_free(char* s) { delete[] s; }

void nb_polygon_free(nb_polygon* p) { delete p; }

nb_status nb_polygon_parse(const char* text, nb_polygon** out) {
  return guarded([&] {
    NEWTB_REQUIRE(text && out, "null argument");
    *out = new nb_polygon{parse_polygon(text)};
  });
}

nb_status nb_polygon_from_coordinates(int64_t q, int32_t n,
                                      const char* coords_csv,
                                      nb_polygon** out) {
  return guarded([&] {
    NEWTB_REQUIRE(coords_csv && out, "null argument");
    Context ctx(q, n);
    *out = new nb_polygon{
        from_coordinates(ctx, parse_rational_csv(coords_csv))};
  });
}

nb_status nb_polygon_format(const nb_polygon* p, char** out) {
  return guarded([&] {
    NEWTB_REQUIRE(p && out, "null argument");
    *out = dup_string(to_text(p->value));
  });
}

nb_status nb_polygon_eval(const nb_polygon* p, const char* t, char** out) {
  return guarded([&] {
    NEWTB_REQUIRE(p && t && out, "null argument");
    *out = dup_string(eval(p->value, Rational::parse(t)).str());
  });
}

nb_status nb_lambda_iter(const nb_polygon* p, const char* lambda, int64_t k,
                         char** out) {
  return guarded([&] {
    NEWTB_REQUIRE(p && lambda && out, "null argument");
    *out = dup_string(lambda_iter(p->value, Rational::parse(lambda), k)
                          .str());
  });
}

nb_status nb_hecke_apply(const nb_polygon* p, const char* a_csv,
                         nb_polygon** out, char** sigma_csv) {
  return guarded([&] {
    NEWTB_REQUIRE(p && a_csv && out, "null argument");
    HeckeImage img = hecke_apply(p->value, parse_int_csv(a_csv));
    *out = new nb_polygon{img.polygon};
    if (sigma_csv) {
      std::vector<std::int64_t> sig(img.sigma.begin(), img.sigma.end());
      *sigma_csv = dup_string(int_csv(sig));
    }
  });
}

nb_status nb_vertex_polygon(int64_t q, int32_t n, const char* vtx_csv,
                            nb_polygon** out) {
  return guarded([&] {
    NEWTB_REQUIRE(vtx_csv && out, "null argument");
    Context ctx(q, n);
    ApartmentVertex x = pr_Q(ApartmentVertex(parse_int_csv(vtx_csv)));
    *out = new nb_polygon{vertex_polygon(ctx, x)};
  });
}

nb_status nb_psi(const nb_polygon* p, char** out_point) {
  return guarded([&] {
    NEWTB_REQUIRE(p && out_point, "null argument");
    *out_point = dup_string(to_text(psi_map(p->value)));
  });
}

nb_status nb_psi_inv(int64_t q, int32_t n, const char* point_csv,
                     nb_polygon** out) {
  return guarded([&] {
    NEWTB_REQUIRE(point_csv && out, "null argument");
    Context ctx(q, n);
    ApartmentPoint x(parse_rational_csv(point_csv));
    *out = new nb_polygon{psi_inv(ctx, x)};
  });
}

nb_status nb_run_command(int argc, const char* const* argv, char** out) {
  // Unlike the typed entry points, the payload (or the error text) is
  // always delivered through out, mirroring the CLI behavior.
  try {
    if (argc < 0 || !out || (argc > 0 && !argv)) {
      g_last_error = "null argument";
      return NB_ERR_ARGUMENT;
    }
    std::vector<std::string> args(argv, argv + argc);
    CommandResult res = run_command(args);
    *out = dup_string(res.output);
    if (res.exit_code == 0) {
      g_last_error.clear();
      return NB_OK;
    }
    g_last_error = res.output;
    return res.exit_code == 2 ? NB_ERR_ARGUMENT : NB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NB_ERR_INTERNAL;
  }
}

}  // extern "C"
