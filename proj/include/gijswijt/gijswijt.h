/*
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
#ifndef GIJSWIJT_GIJSWIJT_H_
#define GIJSWIJT_GIJSWIJT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(GJ_BUILDING_LIBRARY)
#define GJ_API __attribute__((visibility("default")))
#else
#define GJ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Big integers cross this boundary as decimal strings and rationals as
 * "p/q". Every char* or array handed out by the library is owned by the
 * caller and released with the matching gj_*_free function.
 *
 * A context holds the memo tables. Calls on one context may come from
 * several threads, except gj_block_word and gj_structural_sequence, which
 * need a context per thread.
 */

typedef struct gj_context gj_context;

typedef enum gj_status {
  GJ_OK = 0,
  GJ_INVALID_ARGUMENT = 1,
  GJ_CAP_EXCEEDED = 2,
  GJ_INFEASIBLE = 3,
  GJ_INSUFFICIENT_BOUND = 4,
  GJ_INTERNAL = 5
} gj_status;

typedef enum gj_block_kind { GJ_BLOCK_B = 0, GJ_BLOCK_S, GJ_BLOCK_T, GJ_BLOCK_P } gj_block_kind;

typedef enum gj_constant { GJ_NU = 0, GJ_EPSILON = 1 } gj_constant;

typedef enum gj_form { GJ_FORM_EXACT = 0, GJ_FORM_FLOOR = 1, GJ_FORM_TOWER = 2 } gj_form;

typedef struct gj_config {
  uint64_t max_set_bound;
  uint64_t max_pair_bound;
  uint64_t digit_budget;
  uint64_t max_exact_index;
  unsigned max_refinements;
} gj_config;

GJ_API const char* gj_version(void);
GJ_API gj_config gj_default_config(void);

/* cfg may be NULL for the defaults. Returns NULL on allocation failure. */
GJ_API gj_context* gj_context_create(const gj_config* cfg);
GJ_API void gj_context_destroy(gj_context* ctx);

/* Message of the last failed call on this context, "" if none. */
GJ_API const char* gj_last_error(const gj_context* ctx);
/* For GJ_CAP_EXCEEDED: the length that was refused, as a decimal string. */
GJ_API const char* gj_last_error_length(const gj_context* ctx);
/* For GJ_INSUFFICIENT_BOUND: the bound the request needed. */
GJ_API uint64_t gj_last_error_required(const gj_context* ctx);

GJ_API void gj_string_free(char* s);
GJ_API void gj_symbols_free(uint32_t* s);
GJ_API void gj_u64_free(uint64_t* v);

/* Words. A cap of 0 selects the default cap. */
GJ_API gj_status gj_naive_sequence(gj_context* ctx, uint32_t m, uint64_t n_terms, uint64_t cap,
                                   uint32_t** out, size_t* len);
GJ_API gj_status gj_structural_sequence(gj_context* ctx, uint32_t m, uint64_t n_terms,
                                        uint32_t** out, size_t* len);
GJ_API gj_status gj_curling_number(gj_context* ctx, const uint32_t* w, size_t len, uint64_t* k,
                                   uint64_t* y_len);

/* Digits */
GJ_API gj_status gj_ruler(gj_context* ctx, uint64_t m, uint64_t n_terms, uint64_t** out,
                          size_t* len);
GJ_API gj_status gj_chi(gj_context* ctx, uint64_t m, const char* n, char** out);

/* Blocks */
GJ_API gj_status gj_block_length(gj_context* ctx, uint64_t m, uint64_t t, gj_block_kind kind,
                                 char** out);
GJ_API gj_status gj_block_word(gj_context* ctx, uint64_t m, uint64_t t, gj_block_kind kind,
                               uint64_t cap, uint32_t** out, size_t* len);
GJ_API gj_status gj_rho(gj_context* ctx, uint64_t m, uint64_t n, char** out);
GJ_API gj_status gj_glue(gj_context* ctx, uint64_t m, uint64_t t, uint64_t* u, int* plus_one);

/* iota */
GJ_API gj_status gj_iota(gj_context* ctx, uint64_t m, uint64_t t, char** out);
GJ_API gj_status gj_iota_inv(gj_context* ctx, uint64_t m, const char* p, char** out);
GJ_API gj_status gj_in_image(gj_context* ctx, uint64_t m, const char* a, int* member);
/* Terms joined by ','; *start_level receives the level of the first term. */
GJ_API gj_status gj_level_expansion(gj_context* ctx, uint64_t m, const char* a,
                                    uint64_t* start_level, char** out);
GJ_API gj_status gj_v_set(gj_context* ctx, uint64_t m, uint64_t bound, uint64_t** out, size_t* len);
GJ_API gj_status gj_q_set(gj_context* ctx, uint64_t bound, uint64_t** out, size_t* len);
/* Pairs flattened as a0 b0 a1 b1 ...; *len counts pairs. */
GJ_API gj_status gj_r_set(gj_context* ctx, uint64_t b_bound, uint64_t** out, size_t* len);

/* Constants. lo and hi may be NULL. */
GJ_API gj_status gj_constant_digits(gj_context* ctx, gj_constant which, uint64_t m,
                                    unsigned decimals, char** digits, char** lo, char** hi);
GJ_API gj_status gj_approximant(gj_context* ctx, gj_constant which, uint64_t m, uint64_t n,
                                char** numerator, char** denominator, char** gap_bound, int* sign);

/* First occurrences */
GJ_API gj_status gj_t_first(gj_context* ctx, uint64_t m, uint64_t n, gj_form* form, char** out);
GJ_API gj_status gj_phi(gj_context* ctx, uint64_t m, uint64_t n, gj_form* form, char** out);
GJ_API gj_status gj_epsilon_floor(gj_context* ctx, uint64_t m, uint64_t exponent, char** out);
GJ_API gj_status gj_first_pair(gj_context* ctx, uint64_t n, char** start, char** end);
GJ_API gj_status gj_count_in_block(gj_context* ctx, uint64_t m, uint64_t t, uint64_t s, char** out);
/* Enclosure endpoints rounded outward to the given number of decimals. */
GJ_API gj_status gj_density(gj_context* ctx, uint64_t m, uint64_t n, uint64_t depth,
                            unsigned decimals, char** lo, char** hi, int* certified);
GJ_API gj_status gj_mean_value(gj_context* ctx, uint64_t m, uint64_t depth, unsigned decimals,
                               char** lo, char** hi);

/* Golden tables */
typedef void (*gj_check_fn)(const char* name, int passed, const char* detail, void* user);
/* Calls fn once per table; *all_passed is 1 when every table matched. */
GJ_API gj_status gj_verify(gj_context* ctx, gj_check_fn fn, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* GIJSWIJT_GIJSWIJT_H_ */
