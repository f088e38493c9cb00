#ifndef CYCLESPEC_H
#define CYCLESPEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_ARGUMENT = 2,
  CS_STATUS_PARSE = 3,
  CS_STATUS_VALIDATION = 4,
  CS_STATUS_SIZE_LIMIT = 5,
  CS_STATUS_DOMAIN = 6,
  CS_STATUS_INTERNAL = 7,
} CsStatus;

/**
 * Opaque graph handle.
 */
typedef struct CsGraph CsGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into this library on the same thread.
 */
const char *cs_last_error(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be NULL when
 * `edge_count` is 0); `out` must be writable.
 */
enum CsStatus cs_graph_new(size_t n, const size_t *edges, size_t edge_count, struct CsGraph **out);

/**
 * Parses one graph6 record.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum CsStatus cs_graph_from_graph6(const char *text, struct CsGraph **out);

/**
 * Kneser graph `K_{n:r}`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CsStatus cs_graph_kneser(size_t n, size_t r, struct CsGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CsStatus cs_graph_petersen(struct CsGraph **out);

/**
 * Mycielskian of `g` as a new handle.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_graph_mycielski(const struct CsGraph *g, struct CsGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from a `cs_graph_*` constructor and not be used afterwards.
 */
void cs_graph_free(struct CsGraph *g);

/**
 * Vertex count, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t cs_graph_vertex_count(const struct CsGraph *g);

/**
 * Edge count, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t cs_graph_edge_count(const struct CsGraph *g);

/**
 * Graph6 encoding of `g`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_graph_to_graph6(const struct CsGraph *g, char **out);

/**
 * Independence number.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_alpha(const struct CsGraph *g, size_t *out);

/**
 * Independence ratio as `numerator / denominator`; `exact` is set to 0
 * when only a lower bound was computed.
 *
 * # Safety
 * `g` must be a live handle; the out-pointers must be writable.
 */
enum CsStatus cs_iota(const struct CsGraph *g,
                      int64_t *numerator,
                      int64_t *denominator,
                      int *exact);

/**
 * Exact chromatic number.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_chromatic_number(const struct CsGraph *g, size_t *out);

/**
 * Cycle spectrum with `L` and `L∘` as a JSON object.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CsStatus cs_cycle_spectrum_json(const struct CsGraph *g, char **out);

/**
 * Runs a command-line invocation given as a JSON array of arguments
 * (without the program name). The JSON payload goes to `out_json` and the
 * process-style exit code to `exit_code`; diagnostics are available from
 * `cs_last_error` when the exit code is non-zero.
 *
 * # Safety
 * `args_json` must be a NUL-terminated string; the out-pointers must be writable.
 */
enum CsStatus cs_run_json(const char *args_json, char **out_json, int *exit_code);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void cs_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLESPEC_H */
