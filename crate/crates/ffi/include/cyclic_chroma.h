#ifndef CYCLIC_CHROMA_H
#define CYCLIC_CHROMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CcMode {
  CC_MODE_CYCLIC = 0,
  CC_MODE_INTERVAL = 1,
} CcMode;

typedef enum CcReason {
  CC_REASON_NOT_PROPER = 0,
  CC_REASON_NOT_INTERVAL = 1,
  CC_REASON_NOT_CYCLIC_INTERVAL = 2,
} CcReason;

typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_DOMAIN = 2,
  CC_STATUS_INFEASIBLE = 3,
  CC_STATUS_SEARCH_BOUND = 4,
  CC_STATUS_PARSE = 5,
  CC_STATUS_BUFFER_TOO_SMALL = 6,
  CC_STATUS_PANIC = 7,
} CcStatus;

/**
 * Opaque coloring handle.
 */
typedef struct CcColoring CcColoring;

/**
 * Opaque verification report handle.
 */
typedef struct CcReport CcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into this library from the same thread.
 */
const char *cc_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void cc_string_free(char *s);

/**
 * Builds a coloring from `len` colors for edges `e_1..e_len`.
 *
 * # Safety
 * `colors` must point to `len` readable values; `out` must be writable.
 */
enum CcStatus cc_coloring_new(size_t t, const size_t *colors, size_t len, struct CcColoring **out);

/**
 * Parses a `{"n":..,"t":..,"colors":[..]}` record.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CcStatus cc_coloring_from_json(const char *json, struct CcColoring **out);

/**
 * # Safety
 * `c` must be NULL or a live handle from this library.
 */
void cc_coloring_free(struct CcColoring *c);

/**
 * Edge count, or 0 for NULL.
 *
 * # Safety
 * `c` must be NULL or a live handle.
 */
size_t cc_coloring_n(const struct CcColoring *c);

/**
 * Color count, or 0 for NULL.
 *
 * # Safety
 * `c` must be NULL or a live handle.
 */
size_t cc_coloring_t(const struct CcColoring *c);

/**
 * Copies the colors into `buf`. `out_len` always receives the edge count;
 * `CC_STATUS_BUFFER_TOO_SMALL` is returned when `cap` is short.
 *
 * # Safety
 * `buf` must have room for `cap` values; `out_len` must be writable.
 */
enum CcStatus cc_coloring_colors(const struct CcColoring *c,
                                 size_t *buf,
                                 size_t cap,
                                 size_t *out_len);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable. Free the result with
 * [`cc_string_free`].
 */
enum CcStatus cc_coloring_to_json(const struct CcColoring *c, char **out);

/**
 * Canonical cyclically interval `t`-coloring of `C(n)`.
 * Returns `CC_STATUS_INFEASIBLE` when none exists; the reason is in
 * [`cc_last_error`].
 *
 * # Safety
 * `out` must be writable.
 */
enum CcStatus cc_construct(size_t n, size_t t, struct CcColoring **out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum CcStatus cc_verify(const struct CcColoring *c, enum CcMode mode, struct CcReport **out);

/**
 * # Safety
 * `r` must be NULL or a live report handle.
 */
void cc_report_free(struct CcReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report handle.
 */
bool cc_report_valid(const struct CcReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report handle.
 */
bool cc_report_proper(const struct CcReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report handle.
 */
bool cc_report_surjective(const struct CcReport *r);

/**
 * # Safety
 * `r` must be NULL or a live report handle.
 */
size_t cc_report_violation_count(const struct CcReport *r);

/**
 * Reads violation `index` (0-based, ascending vertex order).
 *
 * # Safety
 * `r` must be a live report handle; all output pointers must be writable.
 */
enum CcStatus cc_report_violation(const struct CcReport *r,
                                  size_t index,
                                  size_t *vertex,
                                  size_t *color_before,
                                  size_t *color_after,
                                  enum CcReason *reason);

/**
 * # Safety
 * `r` must be a live report handle; `out` must be writable.
 */
enum CcStatus cc_report_to_json(const struct CcReport *r, char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CcStatus cc_chi_prime(size_t n, size_t *out);

/**
 * Whether `C(n)` has a `t`-coloring in `mode`, from the closed form.
 *
 * # Safety
 * `out` must be writable.
 */
enum CcStatus cc_contains(size_t n, size_t t, enum CcMode mode, bool *out);

/**
 * Feasible `t` values for `C(n)`, ascending.
 *
 * # Safety
 * `buf` must have room for `cap` values; `out_len` must be writable.
 */
enum CcStatus cc_theta(size_t n, enum CcMode mode, size_t *buf, size_t cap, size_t *out_len);

/**
 * The forbidden gap of `C(n)`, `n >= 5`.
 *
 * # Safety
 * `buf` must have room for `cap` values; `out_len` must be writable.
 */
enum CcStatus cc_forbidden_set(size_t n, size_t *buf, size_t cap, size_t *out_len);

/**
 * Exhaustive existence check. `max_n == 0` selects the default bound.
 *
 * # Safety
 * `out` must be writable.
 */
enum CcStatus cc_exists_search(size_t n, size_t t, enum CcMode mode, size_t max_n, bool *out);

/**
 * Exhaustive count of valid colorings. `max_n == 0` selects the default bound.
 *
 * # Safety
 * `out` must be writable.
 */
enum CcStatus cc_count(size_t n, size_t t, enum CcMode mode, size_t max_n, uint64_t *out);

/**
 * Decomposition of a cyclically interval coloring, as JSON.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable. Free the result with
 * [`cc_string_free`].
 */
enum CcStatus cc_decompose_json(const struct CcColoring *c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_CHROMA_H */
