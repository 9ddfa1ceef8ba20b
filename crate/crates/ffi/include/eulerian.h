#ifndef EULERIAN_H
#define EULERIAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible entry point.
 */
typedef enum {
  EULERIAN_STATUS_OK = 0,
  /**
   * Null pointer, malformed UTF-8, or an unknown family/method name.
   */
  EULERIAN_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Parameters outside the family's domain.
   */
  EULERIAN_STATUS_OUT_OF_RANGE = 2,
  /**
   * Requested enumeration exceeds the configured cap.
   */
  EULERIAN_STATUS_CAP_EXCEEDED = 3,
  /**
   * Verification ran and produced at least one failing entry.
   */
  EULERIAN_STATUS_VERIFICATION_FAILED = 4,
} EulerianStatus;

/**
 * Opaque computation context holding caps and memo tables.
 */
typedef struct EulerianCtx EulerianCtx;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a context with the default enumeration caps (n <= 11 for unsigned
 * families, n <= 9 for signed ones).
 */
EulerianCtx *eulerian_ctx_new(void);

/**
 * Create a context with explicit enumeration caps.
 */
EulerianCtx *eulerian_ctx_new_with_caps(uint32_t cap_a, uint32_t cap_b);

/**
 * Destroy a context. Passing null is a no-op.
 *
 * # Safety
 * `ctx` must be null or a pointer previously returned by a constructor,
 * not yet freed.
 */
void eulerian_ctx_free(EulerianCtx *ctx);

/**
 * Release a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer previously handed out by this library,
 * not yet freed.
 */
void eulerian_string_free(char *s);

/**
 * Compute one polynomial and return it as a JSON object
 * `{"family", "n", "last"?, "sign"?, "method", "coeffs"}` with coefficients
 * as decimal strings in ascending degree order.
 *
 * `family` is one of `A`, `B`, `D`, `A_restricted`, `B_restricted`,
 * `D_restricted`, `B_half`, `D_half`. `last` is ignored unless the family
 * is restricted; `sign` (`'+'` or `'-'`) is ignored unless the family is a
 * half family. `method` is `enumerate` or `identity`.
 *
 * # Safety
 * `ctx` must be a live context pointer; `family`, `method` must be valid
 * NUL-terminated strings; `out_json` must be a valid writable pointer.
 */
EulerianStatus eulerian_compute_json(const EulerianCtx *ctx,
                                     const char *family,
                                     uint32_t n,
                                     int32_t last,
                                     char sign,
                                     const char *method,
                                     char **out_json);

/**
 * Run the full identity registry with one rank bound per cost class and
 * return the JSON report. Returns `VerificationFailed` if any entry FAILed
 * (observed disagreements on registered claims do not count).
 *
 * # Safety
 * `ctx` must be a live context pointer and `out_json` a valid writable
 * pointer.
 */
EulerianStatus eulerian_verify_all(const EulerianCtx *ctx,
                                   uint32_t cheap_max,
                                   uint32_t oracle_max,
                                   char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EULERIAN_H */
