#ifndef DESITTER_H
#define DESITTER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>

typedef enum DsCausalClass {
  DS_CAUSAL_CLASS_TIMELIKE = 0,
  DS_CAUSAL_CLASS_SPACELIKE = 1,
  DS_CAUSAL_CLASS_NULL = 2,
  DS_CAUSAL_CLASS_ZERO = 3,
} DsCausalClass;

typedef enum DsFigure {
  DS_FIGURE_FIG2 = 0,
  DS_FIGURE_FIG3 = 1,
  DS_FIGURE_CONES = 2,
} DsFigure;

typedef enum DsMembership {
  DS_MEMBERSHIP_INSIDE = 0,
  DS_MEMBERSHIP_BOUNDARY = 1,
  DS_MEMBERSHIP_OUTSIDE = 2,
} DsMembership;

typedef enum DsRegion {
  /**
   * `x1 − t > 0`
   */
  DS_REGION_OBSERVER_PAST = 0,
  /**
   * `x1 + t > 0`
   */
  DS_REGION_OBSERVER_FUTURE = 1,
  /**
   * `x1 − t < 0`
   */
  DS_REGION_ANTIPODAL_FUTURE = 2,
  /**
   * `x1 + t < 0`
   */
  DS_REGION_ANTIPODAL_PAST = 3,
  /**
   * `x1 = t`
   */
  DS_REGION_PAST_HORIZON = 4,
  /**
   * `x1 + t = 0`
   */
  DS_REGION_FUTURE_HORIZON = 5,
} DsRegion;

typedef enum DsStatus {
  DS_STATUS_OK = 0,
  DS_STATUS_NULL_POINTER = 1,
  DS_STATUS_INVALID_ARGUMENT = 2,
  DS_STATUS_DIMENSION_MISMATCH = 3,
  DS_STATUS_OFF_HYPERBOLOID = 4,
  DS_STATUS_NOT_AN_ISOMETRY = 5,
  DS_STATUS_IO = 6,
  DS_STATUS_BUFFER_TOO_SMALL = 7,
  DS_STATUS_PANIC = 8,
} DsStatus;

typedef enum DsTimeDirection {
  DS_TIME_DIRECTION_FUTURE = 0,
  DS_TIME_DIRECTION_PAST = 1,
  DS_TIME_DIRECTION_NONE = 2,
} DsTimeDirection;

typedef struct DsContext DsContext;

typedef struct DsIsometry DsIsometry;

typedef struct DsScene DsScene;

/**
 * Three-way membership plus the signed margin (positive means inside).
 */
typedef struct DsVerdict {
  enum DsMembership membership;
  double margin;
} DsVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len − 1` bytes) and returns the full message length.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t ds_last_error_message(char *buf, size_t len);

/**
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum DsStatus ds_context_new(double radius, size_t n, struct DsContext **out);

/**
 * # Safety
 * `ctx` must be null or a handle from `ds_context_new` not yet freed.
 */
void ds_context_free(struct DsContext *ctx);

/**
 * Minkowski inner product of two vectors of equal length.
 *
 * # Safety
 * `u` and `v` must point to `len` doubles; `out` must be writable.
 */
enum DsStatus ds_inner(const double *u, const double *v, size_t len, double *out);

/**
 * # Safety
 * `v` must point to `len` doubles; `out` must be writable.
 */
enum DsStatus ds_classify(const double *v, size_t len, enum DsCausalClass *out);

/**
 * # Safety
 * `v` must point to `len` doubles; `out` must be writable.
 */
enum DsStatus ds_time_direction(const double *v, size_t len, enum DsTimeDirection *out);

/**
 * Boost of rapidity `psi` in the `(x1, t)` plane.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum DsStatus ds_boost(double psi, size_t n, struct DsIsometry **out);

/**
 * Boost along spatial axis `axis` (1-based).
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum DsStatus ds_boost_along(size_t axis, double psi, size_t n, struct DsIsometry **out);

/**
 * `x ↦ −x`.
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum DsStatus ds_central_symmetry(size_t n, struct DsIsometry **out);

/**
 * Rotation by `angle` in the plane of spatial axes `i`, `j` (1-based).
 *
 * # Safety
 * `out` must be a valid pointer to a handle slot.
 */
enum DsStatus ds_spatial_rotation(size_t i,
                                  size_t j,
                                  double angle,
                                  size_t n,
                                  struct DsIsometry **out);

/**
 * `a ∘ b`.
 *
 * # Safety
 * `a`, `b` must be live isometry handles; `out` a valid handle slot.
 */
enum DsStatus ds_isometry_compose(const struct DsIsometry *a,
                                  const struct DsIsometry *b,
                                  struct DsIsometry **out);

/**
 * # Safety
 * `iso` must be a live isometry handle; `out` a valid handle slot.
 */
enum DsStatus ds_isometry_inverse(const struct DsIsometry *iso, struct DsIsometry **out);

/**
 * # Safety
 * `iso` must be a live handle; `v` and `out` must each hold `len` doubles.
 */
enum DsStatus ds_isometry_apply(const struct DsIsometry *iso,
                                const double *v,
                                size_t len,
                                double *out);

/**
 * Copies the `(n+1)²` matrix entries, row-major, into `out`.
 *
 * # Safety
 * `iso` must be a live handle; `out` must hold `len` doubles.
 */
enum DsStatus ds_isometry_matrix(const struct DsIsometry *iso, double *out, size_t len);

/**
 * Scaled `max|ΛᵀGΛ − G|`; NaN for a null handle.
 *
 * # Safety
 * `iso` must be null or a live handle.
 */
double ds_isometry_residual(const struct DsIsometry *iso);

/**
 * # Safety
 * `iso` must be null or a handle not yet freed.
 */
void ds_isometry_free(struct DsIsometry *iso);

/**
 * Writes 1 to `out` when `v` lies on S(R) within tolerance, else 0.
 *
 * # Safety
 * `ctx` must be live; `v` must hold `len` doubles; `out` must be writable.
 */
enum DsStatus ds_on_hyperboloid(const struct DsContext *ctx, const double *v, size_t len, int *out);

/**
 * Time-orientation field at `v`, written into `out`.
 *
 * # Safety
 * `ctx` must be live; `v` and `out` must each hold `len` doubles.
 */
enum DsStatus ds_orientation_y(const struct DsContext *ctx,
                               const double *v,
                               size_t len,
                               double *out);

/**
 * Membership of `q` in the causal past (`future = 0`) or future (`future != 0`) of `p`.
 *
 * # Safety
 * `ctx` must be live; `q`, `p` must hold `len` doubles; `out` must be writable.
 */
enum DsStatus ds_causal_relation(const struct DsContext *ctx,
                                 const double *q,
                                 const double *p,
                                 size_t len,
                                 int future,
                                 struct DsVerdict *out);

/**
 * Chord test `⟨p, q⟩ ≥ R²` with time order.
 *
 * # Safety
 * `ctx` must be live; `p`, `q` must hold `len` doubles; outputs must be writable.
 */
enum DsStatus ds_chord_oracle(const struct DsContext *ctx,
                              const double *p,
                              const double *q,
                              size_t len,
                              struct DsVerdict *out_past,
                              struct DsVerdict *out_future);

/**
 * Membership of `e` in one of the canonical observer's regions.
 *
 * # Safety
 * `ctx` must be live; `e` must hold `len` doubles; `out` must be writable.
 */
enum DsStatus ds_region_verdict(const struct DsContext *ctx,
                                enum DsRegion region,
                                const double *e,
                                size_t len,
                                struct DsVerdict *out);

/**
 * Sign-normalized representative of `±e` in the antipodal quotient.
 *
 * # Safety
 * `ctx` must be live; `e` and `out` must each hold `len` doubles.
 */
enum DsStatus ds_quotient_rep(const struct DsContext *ctx,
                              const double *e,
                              size_t len,
                              double *out);

/**
 * Builds a figure scene (requires n = 2). `psi_list` may be null when `psi_len = 0`.
 *
 * # Safety
 * `ctx` must be live; `psi_list` must hold `psi_len` doubles; `out` a valid handle slot.
 */
enum DsStatus ds_scene_build(const struct DsContext *ctx,
                             enum DsFigure figure,
                             double t_max,
                             size_t resolution,
                             const double *psi_list,
                             size_t psi_len,
                             int annotate_throat,
                             struct DsScene **out);

/**
 * Number of polylines in the scene; 0 for a null handle.
 *
 * # Safety
 * `scene` must be null or live.
 */
size_t ds_scene_polyline_count(const struct DsScene *scene);

/**
 * # Safety
 * `scene` must be live; `path` a NUL-terminated UTF-8 string.
 */
enum DsStatus ds_scene_write_svg(const struct DsScene *scene, const char *path);

/**
 * # Safety
 * `scene` must be live; `path` a NUL-terminated UTF-8 string.
 */
enum DsStatus ds_scene_write_csv(const struct DsScene *scene, const char *path);

/**
 * # Safety
 * `scene` must be null or a handle not yet freed.
 */
void ds_scene_free(struct DsScene *scene);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DESITTER_H */
