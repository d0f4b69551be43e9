/* C interface for the wronsk exact-Wronskian library. */

#ifndef WRONSK_H
#define WRONSK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WronskClassTag {
  WRONSK_CLASS_TAG_IDENTICALLY_ZERO = 0,
  WRONSK_CLASS_TAG_NONZERO_CONSTANT = 1,
  WRONSK_CLASS_TAG_NON_CONSTANT = 2,
} WronskClassTag;

typedef enum WronskStatus {
  WRONSK_STATUS_OK = 0,
  WRONSK_STATUS_NULL_ARGUMENT = 1,
  WRONSK_STATUS_INVALID_UTF8 = 2,
  WRONSK_STATUS_PARSE_ERROR = 3,
  WRONSK_STATUS_MATH_ERROR = 4,
} WronskStatus;

// Opaque handle to a Laurent polynomial over Q.
typedef struct WronskPoly WronskPoly;

// Opaque handle to a rational function over Q with a factored denominator.
typedef struct WronskRational WronskRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent error on this thread. The pointer stays
// valid until the next failing call on the same thread; do not free it.
const char *wronsk_last_error_message(void);

// Library version as a static string; do not free.
const char *wronsk_version(void);

// Parses a Laurent polynomial expression.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum WronskStatus wronsk_poly_parse(const char *text, struct WronskPoly **out);

// Renders a polynomial in the canonical text form.
//
// # Safety
// `poly` must be a live handle from this library; `out` must be valid.
enum WronskStatus wronsk_poly_render(const struct WronskPoly *poly, char **out);

// # Safety
// `poly` must be a handle returned by this library, not yet freed.
void wronsk_poly_free(struct WronskPoly *poly);

// Exact Wronskian determinant of `len` polynomials.
//
// # Safety
// `polys` must point to `len` live handles; `out` must be valid.
enum WronskStatus wronsk_wronskian(const struct WronskPoly *const *polys,
                                   uintptr_t len,
                                   struct WronskPoly **out);

// Classifies the Wronskian of the family. `value_out` receives the exact
// constant value (caller-owned string) when the class is
// `NonzeroConstant`, otherwise NULL.
//
// # Safety
// `polys` must point to `len` live handles; both out pointers must be
// valid.
enum WronskStatus wronsk_classify(const struct WronskPoly *const *polys,
                                  uintptr_t len,
                                  enum WronskClassTag *tag_out,
                                  char **value_out);

// Characterization witness as a JSON document with the same schema as the
// CLI: {"constant": bool, "value": .., "A": .., "r": .., "wronskian": ..}.
// A non-constant family is reported inside the JSON, not as an error
// status.
//
// # Safety
// `polys` must point to `len` live handles; `out_json` must be valid.
enum WronskStatus wronsk_characterize_json(const struct WronskPoly *const *polys,
                                           uintptr_t len,
                                           char **out_json);

// Parses a rational function (`num / den` with a factored linear
// denominator, or a plain Laurent expression).
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum WronskStatus wronsk_rational_parse(const char *text, struct WronskRational **out);

// # Safety
// `rf` must be a live handle from this library; `out` must be valid.
enum WronskStatus wronsk_rational_render(const struct WronskRational *rf, char **out);

// # Safety
// `rf` must be a handle returned by this library, not yet freed.
void wronsk_rational_free(struct WronskRational *rf);

// Exact Wronskian of a rational family.
//
// # Safety
// `rfs` must point to `len` live handles; `out` must be valid.
enum WronskStatus wronsk_rational_wronskian(const struct WronskRational *const *rfs,
                                            uintptr_t len,
                                            struct WronskRational **out);

// Two-function impossibility verdict as JSON (the CLI `rational check2`
// schema).
//
// # Safety
// `rf1`, `rf2` must be live handles; `out_json` must be valid.
enum WronskStatus wronsk_check2_json(const struct WronskRational *rf1,
                                     const struct WronskRational *rf2,
                                     char **out_json);

// Runs the seeded conjecture search and returns the deterministic JSON
// report.
//
// # Safety
// `out_json` must be a valid pointer.
enum WronskStatus wronsk_search_json(uintptr_t n,
                                     uint64_t trials,
                                     uint64_t seed,
                                     uint32_t degree_bound,
                                     uint32_t pole_bound,
                                     int64_t coeff_bound,
                                     char **out_json);

// Releases a string produced by this library.
//
// # Safety
// `s` must be a string returned through an out-parameter here, not yet
// freed; NULL is accepted and ignored.
void wronsk_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* WRONSK_H */
