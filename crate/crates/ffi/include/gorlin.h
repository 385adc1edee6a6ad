#ifndef GORLIN_H
#define GORLIN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Which differential an entry accessor reads: `b1`, `b2` or `b3`.
typedef enum GorlinMap {
  GORLIN_MAP_B1 = 1,
  GORLIN_MAP_B2 = 2,
  GORLIN_MAP_B3 = 3,
} GorlinMap;

// Result of every fallible call. Values 0 to 3 agree with the CLI exit codes.
typedef enum GorlinStatus {
  GORLIN_STATUS_OK = 0,
  // A verification check failed.
  GORLIN_STATUS_CHECK_FAILED = 1,
  // Malformed input or an out-of-range argument.
  GORLIN_STATUS_INVALID_INPUT = 2,
  // The catalecticant determinant vanishes.
  GORLIN_STATUS_DEGENERATE = 3,
  // The symbolic computation exceeds the supported size.
  GORLIN_STATUS_CAPACITY = 4,
  // A required pointer argument was null.
  GORLIN_STATUS_NULL_POINTER = 5,
  // An internal panic was caught.
  GORLIN_STATUS_PANIC = 6,
} GorlinStatus;

// Opaque handle to a built complex.
typedef struct GorlinResolution GorlinResolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the specialized complex from an inverse-system JSON document
// (`{"n": 3, "coefficients": [{"exponents": [a, b, c], "value": "p/q"}, ...]}`).
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum GorlinStatus gorlin_resolution_from_json(const char *json, struct GorlinResolution **out);

// Builds the symbolic complex over Z[x, y, z, t] for `n` in 2..=3.
//
// # Safety
// `out` must be a writable pointer.
enum GorlinStatus gorlin_resolution_generic(uint32_t n, struct GorlinResolution **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `res` must come from this library and not be used afterwards.
void gorlin_resolution_free(struct GorlinResolution *res);

// The parameter `n`; `Φ` has degree `2n - 2`. Returns 0 for a null handle.
//
// # Safety
// `res` must be null or a live handle.
uint32_t gorlin_resolution_n(const struct GorlinResolution *res);

// 1 for the generic ring, 0 for the specialized one, -1 for a null handle.
//
// # Safety
// `res` must be null or a live handle.
int32_t gorlin_resolution_is_generic(const struct GorlinResolution *res);

// Writes the catalecticant determinant as text.
//
// # Safety
// `res` must be a live handle and `out` writable.
enum GorlinStatus gorlin_resolution_delta(const struct GorlinResolution *res, char **out);

// Writes the row and column counts of one differential.
//
// # Safety
// `res` must be a live handle; `rows` and `cols` writable.
enum GorlinStatus gorlin_resolution_shape(const struct GorlinResolution *res,
                                          enum GorlinMap map,
                                          uintptr_t *rows,
                                          uintptr_t *cols);

// Writes entry `(row, col)` of one differential as text, e.g. `"-54*x"`.
//
// # Safety
// `res` must be a live handle and `out` writable.
enum GorlinStatus gorlin_resolution_entry(const struct GorlinResolution *res,
                                          enum GorlinMap map,
                                          uintptr_t row,
                                          uintptr_t col,
                                          char **out);

// Writes the full JSON dump (twists, T, Q, b1, b2, b3).
//
// # Safety
// `res` must be a live handle and `out` writable.
enum GorlinStatus gorlin_resolution_to_json(const struct GorlinResolution *res, char **out);

// Runs every applicable check. Returns `Ok` when all required checks pass
// and `CheckFailed` otherwise. The JSON report is written to `report` when
// it is non-null.
//
// # Safety
// `res` must be a live handle; `report` null or writable.
enum GorlinStatus gorlin_resolution_verify(const struct GorlinResolution *res, char **report);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void gorlin_string_free(char *s);

// Message for the last failing call on this thread, or null.
const char *gorlin_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *gorlin_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GORLIN_H */
