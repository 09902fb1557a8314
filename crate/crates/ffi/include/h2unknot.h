#ifndef H2UNKNOT_H
#define H2UNKNOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum H2uLickorishVerdict {
  H2U_LICKORISH_VERDICT_OBSTRUCTED = 0,
  H2U_LICKORISH_VERDICT_NOT_OBSTRUCTED = 1,
} H2uLickorishVerdict;

// Result code of every call.
typedef enum H2uStatus {
  H2U_STATUS_OK = 0,
  // A required pointer argument was null.
  H2U_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  H2U_STATUS_INVALID_UTF8 = 2,
  // The knot or matrix was rejected; see `h2u_last_error`.
  H2U_STATUS_INVALID_INPUT = 3,
  // A value does not fit the output type.
  H2U_STATUS_OVERFLOW = 4,
  // An internal consistency check failed.
  H2U_STATUS_INTERNAL = 5,
  // The library panicked.
  H2U_STATUS_PANIC = 6,
} H2uStatus;

typedef enum H2uTheoremVerdict {
  H2U_THEOREM_VERDICT_OBSTRUCTED = 0,
  H2U_THEOREM_VERDICT_NOT_OBSTRUCTED = 1,
  // Determinant one: the test says nothing.
  H2U_THEOREM_VERDICT_VACUOUS = 2,
} H2uTheoremVerdict;

// Opaque analysis result.
typedef struct H2uReport H2uReport;

// Externally known bounds. A negative field means "not known".
typedef struct H2uOptions {
  // Crosscap number.
  int64_t gamma;
  // Four-dimensional crosscap number.
  int64_t gamma_star;
  // Number of twisted bands known to unknot the knot.
  int64_t known_band_count;
  // Nonzero to cross-check the M_Q table against a naive scan.
  int32_t oracle;
} H2uOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Analyzes the pretzel knot `P(p, q, r)`.
//
// # Safety
// `options` is null or valid; `out` is valid for writes.
enum H2uStatus h2u_analyze_pretzel(uint64_t p,
                                   uint64_t q,
                                   uint64_t r,
                                   const struct H2uOptions *options,
                                   struct H2uReport **out);

// Analyzes a `k × k` symmetric matrix given row-major in `entries`.
// `k = 0` is the unknot and `entries` may then be null.
//
// # Safety
// `entries` points to `k * k` values; `options` is null or valid; `out` is
// valid for writes.
enum H2uStatus h2u_analyze_matrix(const int64_t *entries,
                                  uintptr_t k,
                                  const struct H2uOptions *options,
                                  struct H2uReport **out);

// Analyzes a PD code such as `"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"`.
// `f0` selects the deleted black face; pass a negative value for the default.
//
// # Safety
// `pd` is a NUL-terminated string; `options` is null or valid; `out` is
// valid for writes.
enum H2uStatus h2u_analyze_pd(const char *pd,
                              int64_t f0,
                              const struct H2uOptions *options,
                              struct H2uReport **out);

// Analyzes a JSON job object: exactly one of `pd`, `pretzel`, `matrix`,
// `unknot`, and optionally `f0`.
//
// # Safety
// `job` is a NUL-terminated string; `options` is null or valid; `out` is
// valid for writes.
enum H2uStatus h2u_analyze_json(const char *job,
                                const struct H2uOptions *options,
                                struct H2uReport **out);

// # Safety
// `report` is null or was returned by an `h2u_analyze_*` call and not yet freed.
void h2u_report_free(struct H2uReport *report);

// Knot determinant, the order of the first homology of the double
// branched cover.
//
// # Safety
// `report` is a live handle; `out` is valid for writes.
enum H2uStatus h2u_report_determinant(const struct H2uReport *report, uint64_t *out);

// # Safety
// `report` is a live handle; `out` is valid for writes.
enum H2uStatus h2u_report_theorem_verdict(const struct H2uReport *report,
                                          enum H2uTheoremVerdict *out);

// # Safety
// `report` is a live handle; `out` is valid for writes.
enum H2uStatus h2u_report_lickorish_verdict(const struct H2uReport *report,
                                            enum H2uLickorishVerdict *out);

// Bounds on the H(2)-unknotting number. `*upper` is -1 when no upper
// bound is known.
//
// # Safety
// `report` is a live handle; `lower` and `upper` are valid for writes.
enum H2uStatus h2u_report_bounds(const struct H2uReport *report, int64_t *lower, int64_t *upper);

// Full report as pretty-printed JSON. Release with `h2u_string_free`.
//
// # Safety
// `report` is a live handle; `out` is valid for writes.
enum H2uStatus h2u_report_to_json(const struct H2uReport *report, char **out);

// # Safety
// `s` is null or was returned by this library and not yet freed.
void h2u_string_free(char *s);

// Message for the last failed call on this thread, or an empty string.
// Valid until the next failing call on the same thread.
const char *h2u_last_error(void);

// Library version, a static string.
const char *h2u_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* H2UNKNOT_H */
