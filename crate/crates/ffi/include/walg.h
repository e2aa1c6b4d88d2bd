#ifndef WALG_H
#define WALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WalgStatus {
  WALG_STATUS_OK = 0,
  WALG_STATUS_NULL_POINTER = 1,
  WALG_STATUS_INVALID_UTF8 = 2,
  WALG_STATUS_INVALID_ALGEBRA = 3,
  WALG_STATUS_INVALID_NUMBER = 4,
  WALG_STATUS_INVALID_WEIGHT = 5,
  WALG_STATUS_CRITICAL_LEVEL = 6,
  WALG_STATUS_OUT_OF_RANGE = 7,
  WALG_STATUS_INTERNAL = 8,
  WALG_STATUS_PANIC = 9,
} WalgStatus;

typedef enum WalgVerdict {
  WALG_VERDICT_UNITARY = 0,
  WALG_VERDICT_NOT_UNITARY1A = 1,
  WALG_VERDICT_NOT_UNITARY1B = 2,
  WALG_VERDICT_NOT_UNITARY1C = 3,
  WALG_VERDICT_OPEN = 4,
} WalgVerdict;

/**
 * Bit flags selecting the records of [`walg_classify_json`].
 */
typedef enum WalgRecordKinds {
  WALG_RECORD_KINDS_W = 1,
  WALG_RECORD_KINDS_AFFINE = 2,
} WalgRecordKinds;

/**
 * Opaque handle to a built algebra.
 */
typedef struct WalgAlgebra WalgAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the algebra named `name` (`psl2-2`, `spo2-<m>`, `d21-<m>-<n>`, `f4`, `g3`).
 * Honors `WALG_DATA_DIR`. Free the handle with [`walg_algebra_free`].
 *
 * # Safety
 * `name` must be NULL or a valid C string; `out` must be NULL or writable.
 */
enum WalgStatus walg_algebra_new(const char *name, struct WalgAlgebra **out);

/**
 * # Safety
 * `alg` must be NULL or a handle from [`walg_algebra_new`] not yet freed.
 */
void walg_algebra_free(struct WalgAlgebra *alg);

/**
 * Root data and derived constants as JSON.
 *
 * # Safety
 * `alg` must be a live handle; `out` must be writable.
 */
enum WalgStatus walg_algebra_info_json(const struct WalgAlgebra *alg, char **out);

/**
 * Whether `k` lies in the unitarity range.
 *
 * # Safety
 * `alg` must be a live handle; `k` a C string; `out` writable.
 */
enum WalgStatus walg_in_range(const struct WalgAlgebra *alg, const char *k, bool *out);

/**
 * Classification catalog at level `k` as JSON; `kinds` is a bitwise OR of
 * [`WalgRecordKinds`] values (0 means W only).
 *
 * # Safety
 * `alg` must be a live handle; `k` a C string; `out` writable.
 */
enum WalgStatus walg_classify_json(const struct WalgAlgebra *alg,
                                   const char *k,
                                   uint32_t kinds,
                                   char **out);

/**
 * Unitarity verdict for L^W(ν, ℓ₀), ν given by `nu_len` coefficients over
 * the fundamental weights of g^♮.
 *
 * # Safety
 * `alg` must be a live handle; `k`, `ell0` C strings; `nu` readable for
 * `nu_len` elements; `out` writable.
 */
enum WalgStatus walg_verdict(const struct WalgAlgebra *alg,
                             const char *k,
                             const uint32_t *nu,
                             size_t nu_len,
                             const char *ell0,
                             enum WalgVerdict *out);

/**
 * H₀(L(kΛ₀ + hθ + ν)) as JSON: `{"result":"zero"}` or
 * `{"result":{"nu_coeffs":[..],"ell0":"p/q"}}`.
 *
 * # Safety
 * As for [`walg_verdict`], with `h` in place of `ell0`.
 */
enum WalgStatus walg_reduce_json(const struct WalgAlgebra *alg,
                                 const char *k,
                                 const uint32_t *nu,
                                 size_t nu_len,
                                 const char *h,
                                 char **out);

/**
 * Ledger report at level `k` as JSON; `all_pass` receives whether every check passed.
 *
 * # Safety
 * `alg` must be a live handle; `k` a C string; `out` and `all_pass` writable.
 */
enum WalgStatus walg_ledger_json(const struct WalgAlgebra *alg,
                                 const char *k,
                                 char **out,
                                 bool *all_pass);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void walg_string_free(char *s);

/**
 * Message for the last failure on this thread, or NULL. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *walg_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WALG_H */
