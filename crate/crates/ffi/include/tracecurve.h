#ifndef TRACECURVE_H
#define TRACECURVE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TcOp {
  TC_OP_ADD = 0,
  TC_OP_SUB = 1,
  TC_OP_MUL = 2,
  TC_OP_DIV = 3,
} TcOp;

typedef enum TcPredictionStatus {
  TC_PREDICTION_STATUS_EXACT = 0,
  TC_PREDICTION_STATUS_EXACT_ODD_Q_ONLY = 1,
  TC_PREDICTION_STATUS_CONJECTURAL = 2,
  TC_PREDICTION_STATUS_LOWER_BOUND = 3,
  TC_PREDICTION_STATUS_NONE = 4,
} TcPredictionStatus;

/**
 * Which decimal field of a report to read.
 */
typedef enum TcReportField {
  TC_REPORT_FIELD_BRUTE_COUNT = 0,
  TC_REPORT_FIELD_BASELINE = 1,
  TC_REPORT_FIELD_BONUS = 2,
  /**
   * Empty string when no predictor applies.
   */
  TC_REPORT_FIELD_PREDICTED = 3,
} TcReportField;

typedef enum TcStatus {
  TC_STATUS_OK = 0,
  TC_STATUS_NULL_POINTER = 1,
  TC_STATUS_INVALID_INPUT = 2,
  TC_STATUS_CAP_EXCEEDED = 3,
  TC_STATUS_DIVISION_BY_ZERO = 4,
  /**
   * The output buffer is too small; the required size was still reported.
   */
  TC_STATUS_BUFFER_TOO_SMALL = 5,
  TC_STATUS_INTERNAL = 6,
} TcStatus;

/**
 * A curve together with its ambient field.
 */
typedef struct TcCurve TcCurve;

/**
 * An extension field `F_p[z]/(f)`.
 */
typedef struct TcField TcField;

/**
 * The outcome of a brute-force count.
 */
typedef struct TcReport TcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, a static NUL-terminated string.
 */
const char *tc_version(void);

/**
 * Copies the calling thread's last error message into `buf`.
 *
 * # Safety
 * `buf` must be valid for `len` bytes; `needed` may be null.
 */
enum TcStatus tc_last_error(char *buf, size_t len, size_t *needed);

/**
 * Builds `F_{p^{r·n_total}}`. Fields above the enumeration cap are allowed;
 * the cap applies only to enumeration.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TcStatus tc_field_new(uint64_t p, uint32_t r, uint32_t n_total, struct TcField **out);

/**
 * # Safety
 * `field` must come from [`tc_field_new`] (or be null) and not be used afterwards.
 */
void tc_field_free(struct TcField *field);

/**
 * Number of residues per element, or 0 for a null field.
 *
 * # Safety
 * `field` must be null or valid.
 */
size_t tc_field_degree(const struct TcField *field);

/**
 * Copies the modulus (degree + 1 coefficients, lowest first) into `out`.
 *
 * # Safety
 * `out` must hold `tc_field_degree(field) + 1` values.
 */
enum TcStatus tc_field_modulus(const struct TcField *field, uint64_t *out);

/**
 * `out = a op b`. `out` may alias an input.
 *
 * # Safety
 * `a`, `b`, `out` must each hold `tc_field_degree(field)` values.
 */
enum TcStatus tc_field_arith(const struct TcField *field,
                             enum TcOp op,
                             const uint64_t *a,
                             const uint64_t *b,
                             uint64_t *out);

/**
 * `out = a^{q^e}`.
 *
 * # Safety
 * `a`, `out` must each hold `tc_field_degree(field)` values.
 */
enum TcStatus tc_field_frobenius(const struct TcField *field,
                                 const uint64_t *a,
                                 uint32_t e,
                                 uint64_t *out);

/**
 * `Tr_{q^m:q^k}(a)`.
 *
 * # Safety
 * `a`, `out` must each hold `tc_field_degree(field)` values.
 */
enum TcStatus tc_field_trace(const struct TcField *field,
                             const uint64_t *a,
                             uint32_t m,
                             uint32_t k,
                             uint64_t *out);

/**
 * Sets `*out` to whether `a` lies in `F_{q^k}`.
 *
 * # Safety
 * `a` must hold `tc_field_degree(field)` values.
 */
enum TcStatus tc_field_in_subfield(const struct TcField *field,
                                   const uint64_t *a,
                                   uint32_t k,
                                   bool *out);

/**
 * Builds the curve for `q = p^r`. `force` lifts the enumeration cap.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TcStatus tc_curve_new(uint64_t p,
                           uint32_t r,
                           uint32_t n,
                           uint32_t d,
                           bool force,
                           struct TcCurve **out);

/**
 * # Safety
 * `curve` must come from [`tc_curve_new`] (or be null) and not be used afterwards.
 */
void tc_curve_free(struct TcCurve *curve);

/**
 * Enumerates the field and returns a new report.
 *
 * # Safety
 * `curve` must be valid; `out` must be a valid pointer.
 */
enum TcStatus tc_curve_point_count(const struct TcCurve *curve, struct TcReport **out);

/**
 * # Safety
 * `report` must come from [`tc_curve_point_count`] (or be null) and not be used afterwards.
 */
void tc_report_free(struct TcReport *report);

/**
 * Number of `x` with `R_d(x) ∈ F_q`.
 *
 * # Safety
 * `report` must be valid.
 */
enum TcStatus tc_report_special_x(const struct TcReport *report, uint64_t *out);

/**
 * Writes one big-integer field of the report as decimal.
 *
 * # Safety
 * `buf` must be valid for `len` bytes; `needed` may be null.
 */
enum TcStatus tc_report_decimal(const struct TcReport *report,
                                enum TcReportField which,
                                char *buf,
                                size_t len,
                                size_t *needed);

/**
 * `*out` is 1 (agrees), 0 (disagrees) or −1 (no predictor).
 *
 * # Safety
 * `report` and `out` must be valid.
 */
enum TcStatus tc_report_agrees(const struct TcReport *report, int32_t *out);

/**
 * # Safety
 * `report` and `out` must be valid.
 */
enum TcStatus tc_report_status(const struct TcReport *report, enum TcPredictionStatus *out);

/**
 * Closed-form prediction for a prime power given in decimal. Writes `G`
 * as decimal into `g_buf`.
 *
 * # Safety
 * `q` must be a NUL-terminated string; `g_buf` valid for `g_len` bytes;
 * `status` valid; `needed` may be null.
 */
enum TcStatus tc_predict(const char *q,
                         uint32_t n,
                         uint32_t d,
                         enum TcPredictionStatus *status,
                         char *g_buf,
                         size_t g_len,
                         size_t *needed);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TRACECURVE_H */
