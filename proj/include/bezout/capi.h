/* C interface to the Bezout/de Branges solver library.
 *
 * Conventions: every fallible call returns a bz_status and writes its result
 * through out-parameters; BZ_OK means success. On failure bz_last_error()
 * returns a thread-local message. Objects returned through handle
 * out-parameters are owned by the caller and released with the matching
 * *_free function. Complex vectors are passed as separate re/im arrays.
 * Polynomial coefficients are ascending in degree.
 */
#ifndef BEZOUT_CAPI_H
#define BEZOUT_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BEZOUT_API __declspec(dllexport)
#else
#define BEZOUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bz_status {
  BZ_OK = 0,
  BZ_ERR_INVALID_ARGUMENT,
  BZ_ERR_JSON,
  BZ_ERR_BOTH_CONSTANT,
  BZ_ERR_COMMON_ROOTS,
  BZ_ERR_NOT_A_ROOT,
  BZ_ERR_DIVISION_BY_ZERO_POLYNOMIAL,
  BZ_ERR_CONSTANT_POLYNOMIAL,
  BZ_ERR_DUPLICATE_NODES,
  BZ_ERR_NORM_TOO_LARGE,
  BZ_ERR_HYPOTHESIS_VIOLATED,
  BZ_ERR_VECTOR_TOO_SHORT,
  BZ_ERR_EMPTY_INPUT,
  BZ_ERR_NOT_SCHUR_CLASS,
  BZ_ERR_BLASCHKE_PRODUCT,
  BZ_ERR_ODD_CIRCLE_MULTIPLICITY,
  BZ_ERR_COMMON_ROOTS_AFTER_COMBINATION,
  BZ_ERR_INDEX_OUT_OF_RANGE,
  BZ_ERR_SAMPLE_OUTSIDE_DISK,
  BZ_ERR_EXACT_UNAVAILABLE,
  BZ_ERR_NUMERIC
} bz_status;

#define BZ_METHOD_SYLVESTER 0
#define BZ_METHOD_INTERPOLATION 1
#define BZ_MODE_APPROXIMATE 0
#define BZ_MODE_EXACT 1

BEZOUT_API const char* bz_status_name(bz_status status);
/* Nonzero for hypothesis/validation failures (CLI exit 2), zero for internal
 * numerical failures (CLI exit 1). */
BEZOUT_API int bz_status_is_validation(bz_status status);
BEZOUT_API const char* bz_last_error(void);
BEZOUT_API const char* bz_version(void);
BEZOUT_API void bz_string_free(char* s);

typedef struct bz_poly bz_poly;
typedef struct bz_ratfun bz_ratfun;
typedef struct bz_bezout bz_bezout;
typedef struct bz_multi bz_multi;
typedef struct bz_plank bz_plank;
typedef struct bz_mate bz_mate;
typedef struct bz_estimate bz_estimate;
typedef struct bz_sweep bz_sweep;

/* ---- polynomials -------------------------------------------------------- */

BEZOUT_API bz_status bz_poly_create(const double* re, const double* im, size_t n,
                                    bz_poly** out);
/* Accepts arrays of reals, arrays of [re,im] pairs, {"re":..,"im":..} objects
 * or exact {"num_re":..} encodings. With exact != 0 the numbers are parsed
 * from their decimal literals and the handle carries exact coefficients. */
BEZOUT_API bz_status bz_poly_from_json(const char* json_text, int exact, bz_poly** out);
/* Canonical {"re":[..],"im":[..]}; exact handles add num/den integer arrays.
 * Free the string with bz_string_free. */
BEZOUT_API bz_status bz_poly_to_json(const bz_poly* p, char** out);
BEZOUT_API void bz_poly_free(bz_poly* p);
BEZOUT_API size_t bz_poly_length(const bz_poly* p); /* degree + 1, 0 for the zero poly */
BEZOUT_API int bz_poly_is_exact(const bz_poly* p);
BEZOUT_API bz_status bz_poly_coeffs(const bz_poly* p, double* re, double* im,
                                    size_t capacity);
BEZOUT_API bz_status bz_poly_eval(const bz_poly* p, double zre, double zim, double* out_re,
                                  double* out_im);
BEZOUT_API double bz_poly_norm_coeff(const bz_poly* p);
BEZOUT_API double bz_poly_norm_h2(const bz_poly* p);
BEZOUT_API bz_status bz_poly_norm_sup_circle(const bz_poly* p, double radius, double* out);
BEZOUT_API bz_status bz_poly_roots(const bz_poly* p, double* re, double* im, int* mult,
                                   size_t capacity, size_t* count);

/* ---- Sylvester system and minimal solutions ----------------------------- */

BEZOUT_API bz_status bz_sylvester_dim(const bz_poly* a, const bz_poly* b, size_t* dim);
/* Row-major (dim x dim) entries. */
BEZOUT_API bz_status bz_sylvester_entries(const bz_poly* a, const bz_poly* b, double* re,
                                          double* im, size_t capacity);
BEZOUT_API bz_status bz_resultant(const bz_poly* a, const bz_poly* b, int mode,
                                  double* out_re, double* out_im);
BEZOUT_API bz_status bz_solve(const bz_poly* a, const bz_poly* b, int method, int mode,
                              bz_bezout** out);
BEZOUT_API void bz_bezout_free(bz_bezout* sol);
BEZOUT_API bz_status bz_bezout_r(const bz_bezout* sol, bz_poly** out);
BEZOUT_API bz_status bz_bezout_s(const bz_bezout* sol, bz_poly** out);
BEZOUT_API double bz_bezout_residual(const bz_bezout* sol);
BEZOUT_API double bz_bezout_condition(const bz_bezout* sol);
BEZOUT_API const char* bz_bezout_method(const bz_bezout* sol);
BEZOUT_API const char* bz_bezout_mode(const bz_bezout* sol);
BEZOUT_API bz_status bz_rough_bound(const bz_poly* a, const bz_poly* b, double* out);

/* ---- Hermite interpolation ---------------------------------------------- */

/* {"nodes":[...], "orders":[...], "targets":[[...], ...]} */
BEZOUT_API bz_status bz_hermite_interpolate(const char* json_text, bz_poly** out);

/* ---- estimates ----------------------------------------------------------- */

BEZOUT_API bz_status bz_delta_of(const bz_poly* a, const bz_poly* b, double* out);
BEZOUT_API bz_status bz_estimate_compute(const bz_poly* a, const bz_poly* b, int method,
                                 bz_estimate** out);
BEZOUT_API void bz_estimate_free(bz_estimate* rep);
BEZOUT_API double bz_estimate_delta(const bz_estimate* rep);
BEZOUT_API int bz_estimate_max_mult(const bz_estimate* rep);
BEZOUT_API double bz_estimate_joint_norm(const bz_estimate* rep);
BEZOUT_API double bz_estimate_sharp_ratio(const bz_estimate* rep);
BEZOUT_API int bz_estimate_has_rough_bound(const bz_estimate* rep);
BEZOUT_API double bz_estimate_rough_bound(const bz_estimate* rep);
BEZOUT_API double bz_estimate_residual(const bz_estimate* rep);

/* Families: "example12" (needs n), "example24", "mult2". */
BEZOUT_API bz_status bz_sweep_run(const char* family, int n, const double* params,
                                  size_t count, int method, int jobs, bz_sweep** out);
BEZOUT_API void bz_sweep_free(bz_sweep* sweep);
BEZOUT_API size_t bz_sweep_size(const bz_sweep* sweep);
BEZOUT_API bz_status bz_sweep_point(const bz_sweep* sweep, size_t i, double* delta,
                                    double* joint_norm, double* sharp_ratio,
                                    double* residual);
BEZOUT_API double bz_sweep_slope(const bz_sweep* sweep);

/* ---- plank vector and several polynomials -------------------------------- */

/* vectors are row-major n x dim */
BEZOUT_API bz_status bz_plank_compute(const double* vre, const double* vim, size_t n, size_t dim,
                              uint64_t seed, bz_plank** out);
BEZOUT_API void bz_plank_free(bz_plank* cert);
BEZOUT_API bz_status bz_plank_y(const bz_plank* cert, double* re, double* im,
                                size_t capacity);
BEZOUT_API double bz_plank_achieved(const bz_plank* cert);
BEZOUT_API double bz_plank_bound(const bz_plank* cert);

BEZOUT_API bz_status bz_solve_multi(const bz_poly* a, const bz_poly* const* bs, size_t count,
                                    double delta, int method, uint64_t seed, bz_multi** out);
BEZOUT_API void bz_multi_free(bz_multi* sol);
BEZOUT_API bz_status bz_multi_r(const bz_multi* sol, bz_poly** out);
BEZOUT_API size_t bz_multi_count(const bz_multi* sol);
BEZOUT_API bz_status bz_multi_s(const bz_multi* sol, size_t j, bz_poly** out);
BEZOUT_API bz_status bz_multi_combined_b(const bz_multi* sol, bz_poly** out);
BEZOUT_API bz_status bz_multi_y(const bz_multi* sol, double* re, double* im,
                                size_t capacity);
BEZOUT_API double bz_multi_residual(const bz_multi* sol);
BEZOUT_API double bz_multi_joint_norm(const bz_multi* sol);
BEZOUT_API double bz_multi_single_joint_norm(const bz_multi* sol);
BEZOUT_API double bz_multi_plank_achieved(const bz_multi* sol);
BEZOUT_API double bz_multi_plank_bound(const bz_multi* sol);

/* ---- de Branges-Rovnyak data ---------------------------------------------- */

BEZOUT_API bz_status bz_ratfun_create(const bz_poly* num, const bz_poly* den,
                                      bz_ratfun** out);
/* {"num": <poly>, "den": <poly>} */
BEZOUT_API bz_status bz_ratfun_from_json(const char* json_text, bz_ratfun** out);
BEZOUT_API bz_status bz_ratfun_to_json(const bz_ratfun* f, char** out);
BEZOUT_API void bz_ratfun_free(bz_ratfun* f);

BEZOUT_API bz_status bz_mate_compute(const bz_ratfun* b, bz_mate** out);
BEZOUT_API void bz_mate_free(bz_mate* mate);
BEZOUT_API bz_status bz_mate_a(const bz_mate* mate, bz_ratfun** out);
BEZOUT_API bz_status bz_mate_a1(const bz_mate* mate, bz_poly** out);
BEZOUT_API size_t bz_mate_boundary_count(const bz_mate* mate);
BEZOUT_API bz_status bz_mate_boundary_root(const bz_mate* mate, size_t i, double* re,
                                           double* im, int* mult);
BEZOUT_API int bz_mate_n_total(const bz_mate* mate);
BEZOUT_API double bz_mate_identity_dev(const bz_mate* mate);

BEZOUT_API bz_status bz_hb_decompose(const bz_poly* f, const bz_mate* mate,
                                     bz_poly** f_tilde, bz_poly** p);
BEZOUT_API bz_status bz_hb_norm(const bz_poly* f, const bz_mate* mate, double* out);
BEZOUT_API bz_status bz_boundary_bound_check(const bz_poly* f, const bz_mate* mate, int k,
                                             const double* zre, const double* zim,
                                             size_t count, double eta, double* c_k,
                                             double* max_violation);
BEZOUT_API bz_status bz_corona_poly(const bz_mate* mate, const bz_poly* const* ps,
                                    size_t count, double delta, int method, uint64_t seed,
                                    bz_multi** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BEZOUT_CAPI_H */
