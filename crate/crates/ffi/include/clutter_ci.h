#ifndef CLUTTER_CI_H
#define CLUTTER_CI_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CiStatus {
  CI_STATUS_OK = 0,
  CI_STATUS_NULL_POINTER = 1,
  /**
   * The input violates a documented precondition.
   */
  CI_STATUS_INVALID_INPUT = 2,
  CI_STATUS_BUDGET_EXCEEDED = 3,
  /**
   * An internal consistency check failed.
   */
  CI_STATUS_DEFECT = 4,
  CI_STATUS_PANIC = 5,
} CiStatus;

typedef enum CiForm {
  CI_FORM_NOT_CI = 0,
  CI_FORM_I = 1,
  CI_FORM_II = 2,
  CI_FORM_III = 3,
  CI_FORM_IV = 4,
} CiForm;

typedef struct CiIdeal CiIdeal;

typedef struct CiParamSet CiParamSet;

typedef struct CiPointSet CiPointSet;

/**
 * Outcome of [`ci_classify`]. `permutation[i]` is the 0-based variable of
 * I(X) playing the role of `t_{i+1}` in the normal form; entries past
 * `nvars` are unused.
 */
typedef struct CiClassification {
  bool is_ci;
  enum CiForm form;
  /**
   * Divisor of q - 1 for form III, 0 otherwise.
   */
  uint64_t r;
  size_t mu_total;
  size_t height;
  size_t nvars;
  size_t permutation[4];
} CiClassification;

typedef struct CiCodeParameters {
  uint32_t degree;
  size_t length;
  size_t dimension;
  /**
   * False when the codeword sweep exceeded its budget.
   */
  bool has_min_distance;
  size_t min_distance;
} CiCodeParameters;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *ci_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ci_string_free(char *s);

/**
 * Builds a parameterization from `s` exponent rows of length `n`, stored
 * row-major in `exponents`, over GF(p^m).
 *
 * # Safety
 * `exponents` must point to `s * n` readable values and `out` to writable
 * storage for one pointer.
 */
enum CiStatus ci_paramset_new(uint32_t p,
                              uint32_t m,
                              size_t n,
                              size_t s,
                              const uint32_t *exponents,
                              struct CiParamSet **out);

/**
 * Parses a parameterization (`monomials`) or clutter (`edges`) document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum CiStatus ci_paramset_from_json(const char *json, struct CiParamSet **out);

/**
 * # Safety
 * `ps` must be NULL or a live handle.
 */
void ci_paramset_free(struct CiParamSet *ps);

/**
 * Number of monomials; 0 for NULL.
 *
 * # Safety
 * `ps` must be NULL or a live handle.
 */
size_t ci_paramset_s(const struct CiParamSet *ps);

/**
 * # Safety
 * `ps` must be NULL or a live handle.
 */
bool ci_paramset_is_clutter_type(const struct CiParamSet *ps);

/**
 * Enumerates X, visiting at most `budget` parameter tuples.
 *
 * # Safety
 * `ps` must be a live handle and `out` writable.
 */
enum CiStatus ci_enumerate(const struct CiParamSet *ps, uint64_t budget, struct CiPointSet **out);

/**
 * # Safety
 * `x` must be NULL or a live handle.
 */
void ci_pointset_free(struct CiPointSet *x);

/**
 * Number of points; 0 for NULL.
 *
 * # Safety
 * `x` must be NULL or a live handle.
 */
size_t ci_pointset_len(const struct CiPointSet *x);

/**
 * Number of coordinates per point; 0 for NULL.
 *
 * # Safety
 * `x` must be NULL or a live handle.
 */
size_t ci_pointset_dim(const struct CiPointSet *x);

/**
 * Writes the canonical coordinates of point `index` as field element
 * indices (sum of c_i p^i over the coefficient vector) into `coords`.
 *
 * # Safety
 * `x` must be a live handle and `coords` must hold `len` writable bytes.
 */
enum CiStatus ci_pointset_coords(const struct CiPointSet *x,
                                 size_t index,
                                 uint8_t *coords,
                                 size_t len);

/**
 * # Safety
 * `x` must be NULL or a live handle.
 */
bool ci_pointset_monoid_closed(const struct CiPointSet *x);

/**
 * Computes the vanishing ideal of a point set.
 *
 * # Safety
 * `x` must be a live handle and `out` writable.
 */
enum CiStatus ci_vanishing_ideal(const struct CiPointSet *x, struct CiIdeal **out);

/**
 * # Safety
 * `vi` must be NULL or a live handle.
 */
void ci_ideal_free(struct CiIdeal *vi);

/**
 * Number of minimal generators; 0 for NULL.
 *
 * # Safety
 * `vi` must be NULL or a live handle.
 */
size_t ci_ideal_mu_total(const struct CiIdeal *vi);

/**
 * Size of the reduced GRevLex Gröbner basis; 0 for NULL.
 *
 * # Safety
 * `vi` must be NULL or a live handle.
 */
size_t ci_ideal_gb_len(const struct CiIdeal *vi);

/**
 * # Safety
 * `vi` must be NULL or a live handle.
 */
bool ci_ideal_is_binomial(const struct CiIdeal *vi);

/**
 * Hilbert function of S/I(X) in degree `d`; 0 for NULL.
 *
 * # Safety
 * `vi` must be NULL or a live handle.
 */
uint64_t ci_ideal_hilbert(const struct CiIdeal *vi, uint32_t d);

/**
 * Points, minimal generators, reduced basis and Hilbert table as JSON.
 * Release the string with [`ci_string_free`].
 *
 * # Safety
 * `vi` must be a live handle and `out` writable.
 */
enum CiStatus ci_ideal_to_json(const struct CiIdeal *vi, char **out);

/**
 * Complete-intersection classification of a clutter-type parameterization.
 *
 * # Safety
 * `ps` must be a live handle and `out` writable.
 */
enum CiStatus ci_classify(const struct CiParamSet *ps,
                          uint64_t budget,
                          struct CiClassification *out);

/**
 * Parameters of the degree-`d` evaluation code on the points of `vi`,
 * sweeping at most `budget` coefficient vectors for the minimum distance.
 *
 * # Safety
 * `vi` must be a live handle and `out` writable.
 */
enum CiStatus ci_code_parameters(const struct CiIdeal *vi,
                                 uint32_t d,
                                 uint64_t budget,
                                 struct CiCodeParameters *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUTTER_CI_H */
