#ifndef STRESSLAB_H
#define STRESSLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_ARGUMENT = 1,
  SL_STATUS_INVALID_UTF8 = 2,
  SL_STATUS_PARSE = 3,
  SL_STATUS_INVALID_INPUT = 4,
  SL_STATUS_PRECONDITION = 5,
  SL_STATUS_COMPUTATION = 6,
  SL_STATUS_INTERNAL = 7,
} SlStatus;

// Ring selector for `sl_betti_json`.
typedef enum SlRing {
  SL_RING_R = 0,
  SL_RING_RBAR = 1,
} SlRing;

// Outcome of a verified claim.
typedef enum SlClaimStatus {
  SL_CLAIM_STATUS_VERIFIED = 0,
  SL_CLAIM_STATUS_REFUTED = 1,
  SL_CLAIM_STATUS_REPORTED = 2,
} SlClaimStatus;

// Opaque embedded complex.
typedef struct SlComplex SlComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. Valid until
// the next call into the library on the same thread.
const char *sl_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void sl_string_free(char *s);

// Builds an instance from a builder string such as `"cross:d=4"`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum SlStatus sl_complex_from_builder(const char *spec, struct SlComplex **out);

// Loads an instance from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum SlStatus sl_complex_from_json(const char *json, struct SlComplex **out);

// JSON form of an instance.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum SlStatus sl_complex_to_json(const struct SlComplex *c, char **out);

// # Safety
// `c` must be NULL or a handle from this library that has not been freed.
void sl_complex_free(struct SlComplex *c);

// Number of vertices, or 0 for NULL.
//
// # Safety
// `c` must be NULL or a live handle.
uintptr_t sl_complex_n_vertices(const struct SlComplex *c);

// Ambient dimension `d`, or 0 for NULL.
//
// # Safety
// `c` must be NULL or a live handle.
uintptr_t sl_complex_ambient_dim(const struct SlComplex *c);

// Dimension of the space of affine stresses of the given degree.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum SlStatus sl_stress_dim(const struct SlComplex *c, uintptr_t degree, uintptr_t *out);

// Betti table as JSON `{"ring": ..., "entries": [[i, j, beta], ...]}`.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum SlStatus sl_betti_json(const struct SlComplex *c, enum SlRing ring, char **out);

// Socle dimensions `[r_0, r_1, ...]` as JSON.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum SlStatus sl_socle_json(const struct SlComplex *c, char **out);

// f-, h-, g- and missing-face vectors as JSON.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum SlStatus sl_gvector_json(const struct SlComplex *c, char **out);

// Runs one claim on a handle built from a builder string. Writes the
// certificate JSON to `out` and its outcome to `status`.
//
// # Safety
// `claim` must be a NUL-terminated string, `c` a live handle, and both
// output pointers writable.
enum SlStatus sl_verify(const char *claim,
                        const struct SlComplex *c,
                        enum SlClaimStatus *status,
                        char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRESSLAB_H */
