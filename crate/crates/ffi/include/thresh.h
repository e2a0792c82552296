#ifndef THRESH_H
#define THRESH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum ThreshFamily {
  THRESH_FAMILY_FOUR_BLOCK = 0,
  THRESH_FAMILY_SIX_BLOCK = 1,
} ThreshFamily;

typedef enum ThreshStatus {
  THRESH_STATUS_OK = 0,
  THRESH_STATUS_VERIFICATION_FAILED = 1,
  THRESH_STATUS_NULL_POINTER = 2,
  THRESH_STATUS_INVALID_UTF8 = 3,
  THRESH_STATUS_PARSE = 4,
  THRESH_STATUS_DISCONNECTED = 5,
  THRESH_STATUS_OUT_OF_RANGE = 6,
  THRESH_STATUS_INVALID_NUMBER = 7,
  THRESH_STATUS_INTERNAL = 8,
  THRESH_STATUS_PANIC = 9,
} ThreshStatus;

/**
 * Opaque handle to a parsed creation sequence.
 */
typedef struct ThreshSequence ThreshSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static NUL-terminated string.
 */
const char *thresh_version(void);

/**
 * Reason for the last failure on this thread (empty after a success).
 * Valid until the next call into the library from the same thread.
 */
const char *thresh_last_error_message(void);

/**
 * Parses `"0011100011"`, `"(0^2 1^3 0^3 1^2)"` and similar forms.
 *
 * # Safety
 * `text_ptr` must be NUL-terminated; `out` must be writable.
 */
enum ThreshStatus thresh_sequence_parse(const char *text_ptr, struct ThreshSequence **out);

/**
 * # Safety
 * `s` must come from [`thresh_sequence_parse`] and not be freed twice. NULL is ignored.
 */
void thresh_sequence_free(struct ThreshSequence *s);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum ThreshStatus thresh_sequence_order(const struct ThreshSequence *s, size_t *out);

/**
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum ThreshStatus thresh_sequence_is_connected(const struct ThreshSequence *s, bool *out);

/**
 * Compact block form, e.g. `"(0^2 1^3 0^3 1^2)"`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum ThreshStatus thresh_sequence_to_string(const struct ThreshSequence *s, char **out);

/**
 * Multiplicities of the eigenvalues 0 and -1 of a connected graph.
 *
 * # Safety
 * `s` must be a live handle; `m0` and `m_minus1` must be writable.
 */
enum ThreshStatus thresh_multiplicities(const struct ThreshSequence *s,
                                        size_t *m0,
                                        size_t *m_minus1);

/**
 * Characteristic polynomial as a JSON array of integers, constant term first.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum ThreshStatus thresh_char_poly_json(const struct ThreshSequence *s, char **out);

/**
 * Full spectral summary of a connected graph as a JSON object.
 *
 * # Safety
 * `s` must be a live handle; `precision` NUL-terminated (e.g. `"1e-10"`); `out` writable.
 */
enum ThreshStatus thresh_spectral_summary_json(const struct ThreshSequence *s,
                                               const char *precision,
                                               char **out);

/**
 * Energy interval `{"lo": "...", "hi": "..."}` with outward-rounded decimal endpoints.
 *
 * # Safety
 * `s` must be a live handle; `precision` NUL-terminated; `out` writable.
 */
enum ThreshStatus thresh_energy_json(const struct ThreshSequence *s,
                                     const char *precision,
                                     char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` writable.
 */
enum ThreshStatus thresh_is_cospectral(const struct ThreshSequence *a,
                                       const struct ThreshSequence *b,
                                       bool *out);

/**
 * Verification report for one family pair. The JSON is written even when a
 * check fails; the status is then `VERIFICATION_FAILED`.
 *
 * # Safety
 * `tol` NUL-terminated; `out` writable.
 */
enum ThreshStatus thresh_family_verify_json(enum ThreshFamily family,
                                            uint64_t i,
                                            const char *tol,
                                            char **out);

/**
 * Equienergetic search over all connected threshold graphs of order `n`.
 *
 * # Safety
 * `precision` NUL-terminated; `out` writable.
 */
enum ThreshStatus thresh_hunt_json(size_t n, const char *precision, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice. NULL is ignored.
 */
void thresh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THRESH_H */
