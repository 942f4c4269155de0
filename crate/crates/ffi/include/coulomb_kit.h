#ifndef COULOMB_KIT_H
#define COULOMB_KIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CkStatus {
  CK_STATUS_OK = 0,
  CK_STATUS_NULL_POINTER = 1,
  CK_STATUS_POLE = 2,
  CK_STATUS_OVERFLOW = 3,
  CK_STATUS_DOMAIN = 4,
  CK_STATUS_SIZE = 5,
  CK_STATUS_CONFIG = 6,
  CK_STATUS_LADDER_DRIFT = 7,
  CK_STATUS_PANIC = 99,
} CkStatus;

typedef enum CkMethod {
  CK_METHOD_CLOSED_FORM = 0,
  CK_METHOD_REGULARIZED_SERIES = 1,
} CkMethod;

/**
 * Wavenumber and Coulomb strength.
 */
typedef struct CkParams CkParams;

/**
 * Damping schedule, truncation order and extrapolation order.
 */
typedef struct CkSummationConfig CkSummationConfig;

typedef struct CkComplex {
  double re;
  double im;
} CkComplex;

typedef struct CkPartialWave {
  size_t l;
  struct CkComplex s;
  /**
   * Phase shift in (−π, π].
   */
  double delta;
} CkPartialWave;

typedef struct CkAmplitude {
  double theta;
  struct CkComplex f;
  enum CkMethod method;
  double error_estimate;
} CkAmplitude;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null if none.
 * The pointer is valid until the next failing call on the same thread.
 */
const char *ck_last_error_message(void);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_params_new(double k, double beta, struct CkParams **out);

/**
 * Derives `k` and `β` from mass, coupling, energy and ħ.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_params_from_physical(double mu,
                                      double kappa,
                                      double energy,
                                      double hbar,
                                      struct CkParams **out);

/**
 * # Safety
 * `params` must come from a `ck_params_*` constructor or be null.
 */
double ck_params_k(const struct CkParams *params);

/**
 * # Safety
 * `params` must come from a `ck_params_*` constructor or be null.
 */
double ck_params_beta(const struct CkParams *params);

/**
 * # Safety
 * `params` must come from a `ck_params_*` constructor, not yet freed, or be null.
 */
void ck_params_free(struct CkParams *params);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_config_default(struct CkSummationConfig **out);

/**
 * `levels` values `eps_max · ratio^j` with the matching truncation order.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_config_geometric(double eps_max,
                                  double ratio,
                                  size_t levels,
                                  size_t extrapolation_order,
                                  struct CkSummationConfig **out);

/**
 * # Safety
 * `config` must come from a `ck_config_*` constructor.
 */
enum CkStatus ck_config_set_l_max(struct CkSummationConfig *config, size_t l_max);

/**
 * Truncation order, or 0 for a null handle.
 *
 * # Safety
 * `config` must come from a `ck_config_*` constructor or be null.
 */
size_t ck_config_l_max(const struct CkSummationConfig *config);

/**
 * # Safety
 * `config` must come from a `ck_config_*` constructor, not yet freed, or be null.
 */
void ck_config_free(struct CkSummationConfig *config);

/**
 * # Safety
 * `params` must be a live handle and `out` valid for writes.
 */
enum CkStatus ck_s_matrix(const struct CkParams *params, size_t l, struct CkPartialWave *out);

/**
 * # Safety
 * `params` must be a live handle and `out` valid for writes.
 */
enum CkStatus ck_closed_amplitude(const struct CkParams *params,
                                  double theta,
                                  struct CkAmplitude *out);

/**
 * Pass a null `config` for the default schedule.
 *
 * # Safety
 * `params` must be a live handle, `config` a live handle or null, and `out`
 * valid for writes.
 */
enum CkStatus ck_series_amplitude(const struct CkParams *params,
                                  const struct CkSummationConfig *config,
                                  double theta,
                                  struct CkAmplitude *out);

/**
 * # Safety
 * `params` must be a live handle and `out` valid for writes.
 */
enum CkStatus ck_differential_cross_section(const struct CkParams *params,
                                            double theta,
                                            double *out);

/**
 * Principal branch of ln Γ(z).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_log_gamma(struct CkComplex z, struct CkComplex *out);

/**
 * Γ(a)/Γ(b).
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_gamma_ratio(struct CkComplex a, struct CkComplex b, struct CkComplex *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COULOMB_KIT_H */
