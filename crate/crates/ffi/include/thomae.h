#ifndef THOMAE_H
#define THOMAE_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ThomaeStatus {
  THOMAE_STATUS_OK = 0,
  THOMAE_STATUS_NULL_POINTER = 1,
  THOMAE_STATUS_INVALID_ARGUMENT = 2,
  THOMAE_STATUS_INSUFFICIENT_PRECISION = 3,
  // A result does not fit the C type it is returned in.
  THOMAE_STATUS_OVERFLOW = 4,
  THOMAE_STATUS_PANIC = 5,
} ThomaeStatus;

// Certified continued fraction digits of a [`ThomaeReal`].
typedef struct ThomaeCf ThomaeCf;

// A real number known to lie in a closed rational interval.
typedef struct ThomaeReal ThomaeReal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null after a success.
// The pointer stays valid until the next call on this thread.
const char *thomae_last_error(void);

// Library version as a static NUL-terminated string.
const char *thomae_version(void);

// `f_θ(num/den)` with `θ = theta_num/theta_den`.
//
// # Safety
// `out` must be null or valid for a write of one `double`.
enum ThomaeStatus thomae_eval(int64_t num,
                              int64_t den,
                              int64_t theta_num,
                              int64_t theta_den,
                              double *out);

// One of `sqrt2m1`, `golden_conj`, `e_frac`, `pi_frac` to within `10^-digits`.
//
// # Safety
// `name` must be null or a NUL-terminated string; `out` must be null or
// valid for a write of one pointer.
enum ThomaeStatus thomae_real_constant(const char *name, uint32_t digits, struct ThomaeReal **out);

// The exact rational `num/den`.
//
// # Safety
// `out` must be null or valid for a write of one pointer.
enum ThomaeStatus thomae_real_from_rational(int64_t num, int64_t den, struct ThomaeReal **out);

// An irrational with irrationality exponent `tau`, built from `terms`
// continued fraction digits.
//
// # Safety
// `out` must be null or valid for a write of one pointer.
enum ThomaeStatus thomae_real_synthesize(double tau, size_t terms, struct ThomaeReal **out);

// Midpoint and radius of the enclosing interval, rounded to `double`.
//
// # Safety
// `real` must be null or a live handle; `mid` and `rad` must each be null
// or valid for a write of one `double`.
enum ThomaeStatus thomae_real_midpoint(const struct ThomaeReal *real, double *mid, double *rad);

// # Safety
// `real` must be null or a handle not yet freed.
void thomae_real_free(struct ThomaeReal *real);

// Up to `max_terms` certified digits of `real`.
//
// # Safety
// `real` must be null or a live handle; `out` must be null or valid for a
// write of one pointer.
enum ThomaeStatus thomae_cf_expand(const struct ThomaeReal *real,
                                   size_t max_terms,
                                   struct ThomaeCf **out);

// # Safety
// `cf` must be null or a live handle; `out` must be null or valid for a
// write of one `size_t`.
enum ThomaeStatus thomae_cf_len(const struct ThomaeCf *cf, size_t *out);

// Digit `a_{index+1}`. Fails with `Overflow` above `UINT64_MAX`.
//
// # Safety
// `cf` must be null or a live handle; `out` must be null or valid for a
// write of one `uint64_t`.
enum ThomaeStatus thomae_cf_digit(const struct ThomaeCf *cf, size_t index, uint64_t *out);

// # Safety
// `cf` must be null or a handle not yet freed.
void thomae_cf_free(struct ThomaeCf *cf);

// Tail estimate of the irrationality exponent from up to `max_terms`
// convergents.
//
// # Safety
// `real` must be null or a live handle; `out` must be null or valid for a
// write of one `double`.
enum ThomaeStatus thomae_tau_estimate(const struct ThomaeReal *real, size_t max_terms, double *out);

// Hölder exponent of `f_θ` at `real` from its convergents.
//
// # Safety
// `real` must be null or a live handle; `out` must be null or valid for a
// write of one `double`.
enum ThomaeStatus thomae_holder_convergent(const struct ThomaeReal *real,
                                           int64_t theta_num,
                                           int64_t theta_den,
                                           size_t max_terms,
                                           double *out);

// Hölder exponent of `f_θ` at `real` from oscillations on the scales
// `2^-k_from, ..., 2^-k_to`.
//
// # Safety
// `real` must be null or a live handle; `out` must be null or valid for a
// write of one `double`.
enum ThomaeStatus thomae_holder_oscillation(const struct ThomaeReal *real,
                                            int64_t theta_num,
                                            int64_t theta_den,
                                            uint32_t k_from,
                                            uint32_t k_to,
                                            double *out);

// Spectrum value at `h`, `-INFINITY` where the level set is empty.
//
// # Safety
// `out` must be null or valid for a write of one `double`.
enum ThomaeStatus thomae_spectrum(double h, int64_t theta_num, int64_t theta_den, double *out);

// Upper Darboux sum over `n` equal cells of `[0, 1]`.
//
// # Safety
// `out` must be null or valid for a write of one `double`.
enum ThomaeStatus thomae_upper_darboux(uint64_t n,
                                       int64_t theta_num,
                                       int64_t theta_den,
                                       double *out);

// Boyd indices of `x^θ (|ln x| + 1)^γ` estimated at `x` on the default grid.
//
// # Safety
// `lower` and `upper` must each be null or valid for a write of one `double`.
enum ThomaeStatus thomae_boyd_indices(double theta,
                                      double gamma,
                                      double x,
                                      double *lower,
                                      double *upper);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THOMAE_H */
