/* Copyright 2026 The newtb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the newtb shared library.
 *
 * All numeric values cross the boundary as canonical exact-rational
 * text ("a/b", "a", or "inf"); polygons, vertices and points use the
 * same text forms the CLI prints ("newt q=.. n=.. slopes=..",
 * "vtx c1,..", "pt r1,.."), so every value round-trips losslessly.
 * Handles are opaque; strings returned through out-parameters are
 * heap-allocated and must be released with nb_string_free.
 *
 * Every function returns NB_OK on success.  On failure the out
 * parameters are untouched and nb_last_error() describes the problem
 * (thread-local storage).
 */

#ifndef NEWTB_H
#define NEWTB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nb_status {
  NB_OK = 0,
  NB_ERR_ARGUMENT = 2,  /* precondition or parse failure */
  NB_ERR_INTERNAL = 3,  /* internal invariant violation */
  NB_ERR_RESOURCE = 4   /* enumeration cap exceeded */
} nb_status;

typedef struct nb_polygon nb_polygon;  /* a Newton polygon (immutable) */

const char* nb_status_name(nb_status status);
/* Message of the most recent failure on this thread ("" if none). */
const char* nb_last_error(void);

void nb_string_free(char* s);
void nb_polygon_free(nb_polygon* p);

/* Construction and inspection ------------------------------------- */

/* Parse "newt q=<int> n=<int> slopes=<r>,<r>,...". */
nb_status nb_polygon_parse(const char* text, nb_polygon** out);
/* Slopes read off the hull of the coordinate valuations (csv, n-1
 * entries). */
nb_status nb_polygon_from_coordinates(int64_t q, int32_t n,
                                      const char* coords_csv,
                                      nb_polygon** out);
nb_status nb_polygon_format(const nb_polygon* p, char** out);
/* P(t) for t in [1, q^n]. */
nb_status nb_polygon_eval(const nb_polygon* p, const char* t, char** out);
/* The iterated slope lambda^(k) starting from lambda. */
nb_status nb_lambda_iter(const nb_polygon* p, const char* lambda, int64_t k,
                         char** out);

/* Operators --------------------------------------------------------- */

/* (pi^{-a_1},...,pi^{-a_n}): image polygon plus the transport
 * permutation (csv of sigma(1..n), optional). */
nb_status nb_hecke_apply(const nb_polygon* p, const char* a_csv,
                         nb_polygon** out, char** sigma_csv);
/* Vertex polygon P(x) of the lattice class with the given exponents. */
nb_status nb_vertex_polygon(int64_t q, int32_t n, const char* vtx_csv,
                            nb_polygon** out);
/* Skeleton bijection: "pt r1,...,rn". */
nb_status nb_psi(const nb_polygon* p, char** out_point);
/* Inverse bijection from a quartier point (csv coordinates). */
nb_status nb_psi_inv(int64_t q, int32_t n, const char* point_csv,
                     nb_polygon** out);

/* Batch front end ---------------------------------------------------
 * argv = { "<verb>", "key=value", ... }, exactly the CLI surface; the
 * verb's stdout payload is returned through out.  The status mirrors
 * the CLI exit code. */
nb_status nb_run_command(int argc, const char* const* argv, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NEWTB_H */
