/* Copyright 2026 The riemannlab Authors
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

/* C interface to the riemannlab shared library.
 *
 * Every function returns an rml_status; results travel through output
 * pointers.  On failure rml_last_error() describes the most recent error
 * on the calling thread.  Objects returned through rml_*create/rml_*_run
 * functions are owned by the caller and released with the matching
 * rml_*_free; output pointers are written only on RML_OK.
 */

#ifndef RIEMANNLAB_RIEMANNLAB_H_
#define RIEMANNLAB_RIEMANNLAB_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rml_status {
  RML_OK = 0,
  RML_ERR_DOMAIN = 1,   /* argument outside the function's domain */
  RML_ERR_RANGE = 2,    /* index/size outside the supported range */
  RML_ERR_CONTRACT = 3, /* a completion-point contract was violated */
  RML_ERR_IO = 4,       /* filesystem failure */
  RML_ERR_NOMEM = 5,    /* allocation failure */
  RML_ERR_INTERNAL = 6  /* unexpected failure; see rml_last_error() */
} rml_status;

typedef enum rml_tag_rule {
  RML_TAG_LEFT = 0,
  RML_TAG_RIGHT = 1,
  RML_TAG_MIDPOINT = 2,
  RML_TAG_RANDOM = 3
} rml_tag_rule;

typedef enum rml_verdict {
  RML_VERDICT_CAUCHY = 0,   /* consecutive sums met the tolerance */
  RML_VERDICT_EXHAUSTED = 1 /* schedule ran out first */
} rml_verdict;

typedef struct rml_poly rml_poly;
typedef struct rml_partition rml_partition;
typedef struct rml_report rml_report;

/* Library semantic version, e.g. "0.1.0". */
const char* rml_version(void);

/* Message for the last error on this thread; empty string if none. */
const char* rml_last_error(void);

/* ----- polynomials (elements of the incomplete space) ----- */

rml_status rml_poly_create(const double* coeffs, size_t count,
                           rml_poly** out);
void rml_poly_free(rml_poly* poly);
rml_status rml_poly_degree(const rml_poly* poly, int* out);
rml_status rml_poly_coefficient(const rml_poly* poly, size_t k, double* out);
rml_status rml_poly_eval(const rml_poly* poly, double t, double* out);
/* Certified sup norm on [0, 1]: |true norm - *value| <= *radius and
 * *radius <= tol. */
rml_status rml_poly_sup_norm(const rml_poly* poly, double tol, double* value,
                             double* radius);
/* Comma-separated coefficients, constant term first, shortest round-trip
 * formatting.  Writes a NUL-terminated string when cap suffices; *needed
 * always receives the required capacity including the NUL. */
rml_status rml_poly_to_csv(const rml_poly* poly, char* buf, size_t cap,
                           size_t* needed);
rml_status rml_poly_from_csv(const char* csv, rml_poly** out);

/* Partial sums of the exponential series and the sup norm of their
 * tails; the series is the completion limit the experiments chase. */
rml_status rml_exp_partial(unsigned n, rml_poly** out);
rml_status rml_exp_remainder_sup(unsigned n, double* out);

/* ----- the cascade map ----- */

/* Index n of the dyadic block [2^-(n+1), 2^-n] containing x in (0, 1]. */
rml_status rml_block_index(double x, unsigned* out);
rml_status rml_tent_coefficient(unsigned n, double x, double* out);
/* The map itself: x in [-1, 1] to a polynomial. */
rml_status rml_f_eval(double x, rml_poly** out);
/* The surface (x, t) -> value of the map at x evaluated at t. */
rml_status rml_phi(double x, double t, double* out);
rml_status rml_block_integral(unsigned n, rml_poly** out);
/* Closed-form integrals: over [a, 1], over [a, b] in (0, 1], and over any
 * [a, b] in [-1, 1] where one exists.  rml_exact_integral sets *out to
 * NULL (and returns RML_OK) when the interval has exactly one endpoint at
 * 0, where the map is not integrable in the polynomial space. */
rml_status rml_integral_from(double a, rml_poly** out);
rml_status rml_integral_on(double a, double b, rml_poly** out);
rml_status rml_exact_integral(double a, double b, rml_poly** out);

/* ----- tagged partitions and Riemann sums ----- */

rml_status rml_regular_partition(double a, double b, size_t n,
                                 rml_tag_rule rule, uint64_t seed,
                                 rml_partition** out);
void rml_partition_free(rml_partition* partition);
rml_status rml_partition_size(const rml_partition* partition, size_t* out);
/* Breakpoints are indexed 0..size, tags 0..size-1. */
rml_status rml_partition_breakpoint(const rml_partition* partition, size_t i,
                                    double* out);
rml_status rml_partition_tag(const rml_partition* partition, size_t i,
                             double* out);

/* Riemann sum of the cascade map over the partition. */
rml_status rml_riemann_sum_f(const rml_partition* partition, rml_poly** out);
/* Riemann sum of x -> x * direction (the affine benchmark map). */
rml_status rml_riemann_sum_affine(const rml_partition* partition,
                                  const rml_poly* direction, rml_poly** out);

/* ----- convergence reports ----- */

typedef struct rml_converge_row {
  size_t n;
  double sum_norm;
  int has_gap;      /* 0 on the first row */
  double gap_prev;  /* distance to the previous row's sum */
  int has_dist;     /* 0 when no reference was supplied */
  double dist_ref;  /* distance to the reference polynomial */
} rml_converge_row;

/* Refine Riemann sums of the cascade map over [a, b] along the strictly
 * increasing schedule until consecutive sums come within tol.
 * `reference` may be NULL. */
rml_status rml_converge_f(double a, double b, double tol,
                          const size_t* schedule, size_t schedule_len,
                          rml_tag_rule rule, uint64_t seed,
                          const rml_poly* reference, rml_report** out);
void rml_report_free(rml_report* report);
rml_status rml_report_rows(const rml_report* report, size_t* out);
rml_status rml_report_row(const rml_report* report, size_t i,
                          rml_converge_row* out);
rml_status rml_report_verdict(const rml_report* report, rml_verdict* out);
rml_status rml_report_write_csv(const rml_report* report, const char* path);

/* ----- experiment emitters (deterministic artifacts) ----- */

/* Surface samples over [-1, 1] x [0, 1] as CSV "x,t,phi". */
rml_status rml_emit_surface(unsigned xres, unsigned tres, const char* path,
                            size_t* rows);

/* Per-resolution Riemann-sum anatomy as frame_<i>.json files.
 * `interval` is "full", "positive", or "negative". */
rml_status rml_emit_frames(const char* interval, const size_t* schedule,
                           size_t schedule_len, rml_tag_rule rule,
                           uint64_t seed, unsigned samples,
                           const char* outdir, size_t* frames);

/* Convergence study on a preset interval; writes CSV to `path` and, when
 * `out` is non-NULL, also hands back the report. */
rml_status rml_emit_converge(const char* interval, const size_t* schedule,
                             size_t schedule_len, rml_tag_rule rule,
                             uint64_t seed, double tol, const char* path,
                             rml_report** out);

typedef struct rml_chasles_summary {
  size_t n;
  double discrepancy; /* norm(total - (left + right)) */
  double total_norm;
  int total_degree;
  double left_norm;
  int left_degree;
  double right_norm;
  int right_degree;
  int has_total_dist;
  double total_dist; /* distance to the closed form, when one exists */
  int has_left_dist;
  double left_dist;
  int has_right_dist;
  double right_dist;
} rml_chasles_summary;

/* Interval-additivity probe around the split point c, at resolutions n
 * halved down to 16; writes the CSV ladder to `path` and, when `last` is
 * non-NULL, the finest row's summary. */
rml_status rml_emit_chasles(double a, double c, double b, size_t n,
                            rml_tag_rule rule, uint64_t seed,
                            const char* path, rml_chasles_summary* last);

/* ----- self-verification ----- */

typedef void (*rml_verify_callback)(const char* name, int pass,
                                    const char* detail, void* user);

/* Runs the property battery (the witness construction at `depth`), calls
 * `callback` for every check when non-NULL, and stores the number of
 * failed checks in *failures. */
rml_status rml_verify_run(rml_verify_callback callback, void* user,
                          unsigned depth, size_t* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RIEMANNLAB_RIEMANNLAB_H_ */
