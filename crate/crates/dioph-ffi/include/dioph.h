/*
 * dioph C API: solvability, exact solution counts, and Frobenius numbers
 * for a_1 x_1 + ... + a_n x_n = b over non-negative integers.
 *
 * Big integers cross this boundary as decimal strings; every char* the
 * library hands out must be released with dioph_string_free().
 */

#ifndef DIOPH_H
#define DIOPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every API call.
 */
typedef enum {
  /**
   * Success; out pointers are filled.
   */
  DIOPH_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DIOPH_STATUS_NULL_ARGUMENT = 1,
  /**
   * The coefficients do not form a valid tuple (too short, zero
   * entry, or not setwise coprime).
   */
  DIOPH_STATUS_INVALID_TUPLE = 2,
  /**
   * A decimal-string argument did not parse as a non-negative integer.
   */
  DIOPH_STATUS_PARSE_ERROR = 3,
  /**
   * The computation exceeded a configured resource limit.
   */
  DIOPH_STATUS_LIMIT_EXCEEDED = 4,
  /**
   * A panic was caught at the boundary; see the last error message.
   */
  DIOPH_STATUS_INTERNAL_ERROR = 5,
} DiophStatus;

/**
 * Opaque handle to a validated coefficient tuple.
 */
typedef struct DiophTuple DiophTuple;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a tuple from `len` coefficients and stores the handle in
 * `*out`. On any failure `*out` is left untouched.
 *
 * # Safety
 * `coeffs` must point to `len` readable `uint64_t`s and `out` must be a
 * valid pointer.
 */
DiophStatus dioph_tuple_new(const uint64_t *coeffs, uintptr_t len, DiophTuple **out);

/**
 * Releases a handle from [`dioph_tuple_new`]. Null is a no-op.
 *
 * # Safety
 * `t` must be null or a handle from [`dioph_tuple_new`] not yet freed.
 */
void dioph_tuple_free(DiophTuple *t);

/**
 * Exact number of non-negative solutions of `sum(a_i x_i) = b`, written
 * to `*out_count` as a decimal string.
 *
 * # Safety
 * `t` must be a live handle; `b_decimal` a NUL-terminated string;
 * `out_count` a valid pointer. The output string must be released with
 * [`dioph_string_free`].
 */
DiophStatus dioph_count(const DiophTuple *t, const char *b_decimal, char **out_count);

/**
 * Whether `sum(a_i x_i) = b` has a non-negative solution.
 *
 * # Safety
 * As for [`dioph_count`]; `out_solvable` must be a valid pointer.
 */
DiophStatus dioph_solvable(const DiophTuple *t, const char *b_decimal, bool *out_solvable);

/**
 * The Frobenius number of the tuple as a decimal string; `"-1"` when
 * every b >= 0 is representable.
 *
 * # Safety
 * `t` must be a live handle and `out_value` a valid pointer. The output
 * string must be released with [`dioph_string_free`].
 */
DiophStatus dioph_frobenius(const DiophTuple *t, char **out_value);

/**
 * The last error message recorded on this thread, or null when the last
 * call succeeded. The caller owns the returned string.
 *
 * # Safety
 * The returned pointer, when non-null, must be released with
 * [`dioph_string_free`].
 */
char *dioph_last_error_message(void);

/**
 * Releases a string produced by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string pointer produced by this library, not
 * yet freed.
 */
void dioph_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIOPH_H */
