/*
   Copyright 2026 The circle-orbit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface of libcircle_orbit.
 *
 * Every function returns a co_status. Strings returned through char** are
 * NUL-terminated, heap-allocated and released with co_string_free. On
 * failure the out-parameter is left untouched and co_last_error_message()
 * describes the error (per thread, valid until the next call).
 */

#ifndef CIRCLE_ORBIT_H
#define CIRCLE_ORBIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CIRCLE_ORBIT_BUILDING)
#define CO_API __attribute__((visibility("default")))
#else
#define CO_API
#endif

typedef enum co_status {
  CO_OK = 0,
  CO_ERR_INVALID_INPUT = 2,
  CO_ERR_RESOURCE = 3,
  CO_ERR_INTERNAL = 4,
  CO_ERR_IO = 5
} co_status;

typedef struct co_poly co_poly;
typedef struct co_ring co_ring;
typedef struct co_element co_element;
typedef struct co_triple co_triple;
typedef struct co_spec co_spec;

/* Enumeration limits. cap = 0 selects the default of 10^7 vectors. */
typedef struct co_options {
  uint64_t cap;
  unsigned workers;
} co_options;

CO_API const char* co_version(void);
CO_API const char* co_last_error_message(void);
CO_API void co_string_free(char* s);
CO_API uint64_t co_default_cap(void);

/* Polynomials: JSON array ("[\"1\",\"-1\"]" or [1,-1]) or "1,-1,-1,-1,1",
   little-endian. */
CO_API co_status co_poly_parse(const char* text, co_poly** out);
CO_API void co_poly_free(co_poly* p);
CO_API co_status co_poly_to_json(const co_poly* p, char** out);

/* Z[z]/(q) and its elements. */
CO_API co_status co_ring_create(const co_poly* q, co_ring** out);
CO_API void co_ring_free(co_ring* r);
CO_API co_status co_ring_power(const co_ring* r, long long m, co_element** out);
CO_API co_status co_element_create(const co_ring* r, const long long* coeffs, size_t count, co_element** out);
CO_API void co_element_free(co_element* e);
CO_API co_status co_element_mul(const co_element* a, const co_element* b, co_element** out);
CO_API co_status co_element_to_json(const co_element* e, char** out);
/* exact = 1 when the verdict is an equivalence (certified irreducible modulus). */
CO_API co_status co_element_on_unit_circle(const co_element* e, int* on_circle, int* exact);

/* Inner-product triple: {"D": 2, "alpha": [a, b], "beta": ..., "gamma": ..., "n": 1}. */
CO_API co_status co_triple_parse(const char* json, co_triple** out);
CO_API void co_triple_free(co_triple* t);

/* Group specs for graph work. */
CO_API co_status co_spec_ring(const co_poly* q, size_t embedding, co_spec** out);
CO_API co_status co_spec_triple(const co_triple* t, co_spec** out);
CO_API void co_spec_free(co_spec* s);
CO_API co_status co_spec_dimension(const co_spec* s, int* out);
CO_API co_status co_degree_of_origin(const co_spec* s, long long bound, const co_options* opt, size_t* out);

/* Reports. precision is a rational string such as "1/1000000"; NULL selects
   the default. format is "json", "dot", "svg" or "csv" as each command allows. */
CO_API co_status co_analyze(const co_poly* q, const char* precision, int decimals, char** out);
CO_API co_status co_orbit(const co_poly* q, long long m_min, long long m_max, const co_options* opt, char** out);
CO_API co_status co_graph(const co_spec* s, long long bound, const char* format, const co_options* opt, char** out);
CO_API co_status co_circle_points(const co_spec* s, long long bound, const char* format, const co_options* opt,
                                  char** out);
CO_API co_status co_rank3(const co_triple* t, const long long* schedule, size_t count, const co_options* opt,
                          char** out);
CO_API co_status co_scan(long long bound, const char* precision, const char* format, const co_options* opt,
                         char** out);
CO_API co_status co_egyptian(long long bound, const char* format, const co_options* opt, char** out);
CO_API co_status co_egyptian_point(long long x, long long y, long long z, char** out);
/* abc: three integer strings; base: three rational strings. */
CO_API co_status co_case_polys(const char* const abc[3], const char* const base[3], char** out);
CO_API co_status co_case_polys_from_triple(const co_triple* t, long long bound, const co_options* opt, char** out);

CO_API co_status co_write_file(const char* path, const char* text);

#ifdef __cplusplus
}
#endif

#endif /* CIRCLE_ORBIT_H */
