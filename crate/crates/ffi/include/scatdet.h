#ifndef SCATDET_H
#define SCATDET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Outcome of an `sd_*` call.
 */
typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_POLE = 1,
  SD_STATUS_ZERO = 2,
  SD_STATUS_DOMAIN = 3,
  SD_STATUS_SINGULARITY = 4,
  SD_STATUS_CONVERGENCE = 5,
  SD_STATUS_CONTOUR_TOO_CLOSE = 6,
  SD_STATUS_NON_INTEGER_WINDING = 7,
  /*
   Null pointer, invalid UTF-8, malformed JSON or a too-small buffer.
   */
  SD_STATUS_INVALID_ARGUMENT = 8,
  SD_STATUS_PANIC = 9,
} SdStatus;

/*
 Opaque group descriptor handle.
 */
typedef struct SdDescriptor SdDescriptor;

/*
 Opaque scattering family handle.
 */
typedef struct SdFamily SdFamily;

typedef struct SdCentralValue {
  double germ_value;
  double extrapolated_value;
  int32_t predicted_sign;
  bool matches;
} SdCentralValue;

typedef struct SdDivisor {
  uint32_t zeros;
  uint32_t poles;
} SdDivisor;

typedef struct SdDirichletHead {
  uint32_t cusps;
  double g1;
  double d1;
  double c1;
  double c2;
} SdDirichletHead;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread. Valid until the next
 failing call on the same thread; never null.
 */
const char *sd_last_error_message(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *sd_version(void);

/*
 Frees a string returned by this library. Null is ignored.

 # Safety
 `s` must come from an `sd_*` call and not have been freed already.
 */
void sd_string_free(char *s);

/*
 Creates a family from `kind` ("modular", "gamma0", "gamma0plus") and a
 list of distinct primes.

 # Safety
 `kind` must be a NUL-terminated string, `primes` must point to `n_primes`
 values (may be null when `n_primes` is 0), `out` must be writable.
 */
enum SdStatus sd_family_new(const char *kind,
                            const uint64_t *primes,
                            size_t n_primes,
                            struct SdFamily **out);

/*
 Creates a family from `{"family": ..., "primes": [...]}`.

 # Safety
 `json` must be a NUL-terminated string and `out` writable.
 */
enum SdStatus sd_family_from_json(const char *json, struct SdFamily **out);

/*
 # Safety
 `family` must come from `sd_family_new`/`sd_family_from_json` and not be
 used afterwards. Null is ignored.
 */
void sd_family_free(struct SdFamily *family);

/*
 φ(re + i·im).

 # Safety
 `family` must be a live handle; `out_re` and `out_im` writable.
 */
enum SdStatus sd_phi_eval(const struct SdFamily *family,
                          double re,
                          double im,
                          double *out_re,
                          double *out_im);

/*
 Laurent germ of φ at the real point `a`: writes the order and `depth`
 coefficients into `coeffs` (capacity `capacity` ≥ `depth`).

 # Safety
 `family` must be a live handle; `out_order` writable; `coeffs` must have
 room for `capacity` values.
 */
enum SdStatus sd_germ_at(const struct SdFamily *family,
                         double a,
                         size_t depth,
                         int32_t *out_order,
                         double *coeffs,
                         size_t capacity);

/*
 φ(½) from the germ and by extrapolation, with the predicted sign.

 # Safety
 `family` must be a live handle and `out` writable.
 */
enum SdStatus sd_central_value(const struct SdFamily *family, struct SdCentralValue *out);

/*
 Real zeros N and poles P of φ on (½, ∞).

 # Safety
 `family` must be a live handle and `out` writable.
 */
enum SdStatus sd_count_divisor(const struct SdFamily *family, struct SdDivisor *out);

/*
 Leading Dirichlet data (c, g₁, d(1), c₁, c₂).

 # Safety
 `family` must be a live handle and `out` writable.
 */
enum SdStatus sd_dirichlet_head(const struct SdFamily *family, struct SdDirichletHead *out);

/*
 e^α = g₁ / (π^{c/2} |d(1)|).

 # Safety
 `family` must be a live handle and `out` writable.
 */
enum SdStatus sd_corollary_alpha(const struct SdFamily *family, double *out);

/*
 Full central-value report as JSON; free the string with `sd_string_free`.

 # Safety
 `family` must be a live handle and `out` writable.
 */
enum SdStatus sd_central_value_json(const struct SdFamily *family, char **out);

/*
 Creates a group descriptor (genus, cusps, elliptic orders).

 # Safety
 `orders` must point to `n_orders` values (may be null when 0); `out`
 writable.
 */
enum SdStatus sd_descriptor_new(uint32_t genus,
                                uint32_t cusps,
                                const uint32_t *orders,
                                size_t n_orders,
                                struct SdDescriptor **out);

/*
 # Safety
 `desc` must come from `sd_descriptor_new` and not be used afterwards.
 Null is ignored.
 */
void sd_descriptor_free(struct SdDescriptor *desc);

/*
 Hyperbolic volume.

 # Safety
 `desc` must be a live handle and `out` writable.
 */
enum SdStatus sd_descriptor_volume(const struct SdDescriptor *desc, double *out);

/*
 Trivial-zero multiplicity at s = −n by both formulas.

 # Safety
 `desc` must be a live handle; `out_floor` and `out_sine` writable.
 */
enum SdStatus sd_trivial_multiplicity(const struct SdDescriptor *desc,
                                      uint32_t n,
                                      int64_t *out_floor,
                                      double *out_sine);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SCATDET_H */
