/* C interface for the gbei toolkit. */

#ifndef GBEI_H
#define GBEI_H

/* Generated by cbindgen from gbei-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code shared by every entry point.
 */
typedef enum GbeiStatus {
  /**
   * The call succeeded and any out pointers were written.
   */
  GBEI_STATUS_OK = 0,
  /**
   * A certificate was checked to completion and does not hold.
   */
  GBEI_STATUS_VERIFY_FAILED = 1,
  /**
   * The graph is disconnected; the analysis requires connectivity.
   */
  GBEI_STATUS_DISCONNECTED = 2,
  /**
   * Text input could not be parsed.
   */
  GBEI_STATUS_PARSE_ERROR = 3,
  /**
   * The work budget ran out before an answer was reached.
   */
  GBEI_STATUS_RESOURCE_CAP = 4,
  /**
   * A required pointer argument was NULL.
   */
  GBEI_STATUS_NULL_POINTER = 5,
  /**
   * A string argument was not valid UTF-8.
   */
  GBEI_STATUS_INVALID_UTF8 = 6,
  /**
   * Arguments were well formed but outside the supported range.
   */
  GBEI_STATUS_INVALID_INPUT = 7,
  /**
   * An internal invariant failed; report this as a bug.
   */
  GBEI_STATUS_INTERNAL = 10,
} GbeiStatus;

/**
 * Opaque connected-graph handle.
 */
typedef struct GbeiGraph GbeiGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *gbei_version(void);

/**
 * Message for the most recent failure on this thread, or NULL if the last
 * call succeeded. The pointer stays valid until the next gbei call on the
 * same thread; do not free it.
 */
const char *gbei_last_error(void);

/**
 * Release a string returned through an out pointer.
 *
 * # Safety
 * `s` must be a pointer previously returned by this library through a
 * `char **` out parameter, or NULL. Freeing anything else, or freeing the
 * same pointer twice, is undefined behavior.
 */
void gbei_string_free(char *s);

/**
 * Parse a graph from its text form: a vertex-count line followed by one
 * `u v` edge line per edge, 1-based.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GbeiStatus gbei_graph_parse(const char *text, struct GbeiGraph **out);

/**
 * Build a graph on vertices `1..=n` from `num_edges` pairs of endpoints
 * laid out flat as `u1, v1, u2, v2, ...`.
 *
 * # Safety
 * `endpoints` must point to `2 * num_edges` readable `uint32_t` values
 * (it may be NULL only when `num_edges` is 0) and `out` must be valid.
 */
enum GbeiStatus gbei_graph_from_edges(uint32_t n,
                                      const uint32_t *endpoints,
                                      size_t num_edges,
                                      struct GbeiGraph **out);

/**
 * Release a graph handle. NULL is ignored.
 *
 * # Safety
 * `g` must have come from this library and must not be used afterwards.
 */
void gbei_graph_free(struct GbeiGraph *g);

/**
 * Number of vertices in the graph.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum GbeiStatus gbei_graph_vertex_count(const struct GbeiGraph *g, uint32_t *out);

/**
 * Canonical one-line form `n=.. E=..` of the graph.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer; free the
 * result with [`gbei_string_free`].
 */
enum GbeiStatus gbei_graph_canonical(const struct GbeiGraph *g, char **out);

/**
 * Full bounds-and-classification report as a JSON object; see the crate
 * documentation for the field layout.
 *
 * # Safety
 * `g` must be a live graph handle and `out_json` a valid pointer; free the
 * result with [`gbei_string_free`].
 */
enum GbeiStatus gbei_analyze_json(const struct GbeiGraph *g,
                                  uint32_t m,
                                  uint64_t characteristic,
                                  char **out_json);

/**
 * Same report as [`gbei_analyze_json`], rendered as plain text.
 *
 * # Safety
 * `g` must be a live graph handle and `out_text` a valid pointer; free the
 * result with [`gbei_string_free`].
 */
enum GbeiStatus gbei_analyze_text(const struct GbeiGraph *g,
                                  uint32_t m,
                                  uint64_t characteristic,
                                  char **out_text);

/**
 * Cut sets of the graph as a JSON array of vertex arrays, the empty set
 * first, then by size and lexicographic order.
 *
 * # Safety
 * `g` must be a live graph handle and `out_json` a valid pointer; free the
 * result with [`gbei_string_free`].
 */
enum GbeiStatus gbei_cutsets_json(const struct GbeiGraph *g, char **out_json);

/**
 * Check that the edge-minor ideal equals the intersection of its cut-set
 * primes. Writes 1 to `out_holds` when the identity holds, 0 otherwise.
 *
 * # Safety
 * `g` must be a live graph handle and `out_holds` a valid pointer.
 */
enum GbeiStatus gbei_decompose(const struct GbeiGraph *g,
                               uint32_t m,
                               uint64_t characteristic,
                               uint64_t max_term_ops,
                               int32_t *out_holds);

/**
 * Check one named builtin certificate. Writes 1 to `out_pass` when every
 * claim verifies, 0 otherwise; a completed failing check returns
 * `VerifyFailed` with `out_pass` still written.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out_pass` a valid pointer.
 */
enum GbeiStatus gbei_verify_builtin(const char *name,
                                    uint32_t k_max,
                                    uint64_t max_term_ops,
                                    int32_t *out_pass);

/**
 * Check one named builtin certificate and return the full report as JSON.
 * Distinguishes a completed failing check (`VerifyFailed`, JSON written)
 * from a check that could not finish (other statuses, JSON not written).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out_json` a valid pointer;
 * free the result with [`gbei_string_free`].
 */
enum GbeiStatus gbei_verify_builtin_json(const char *name,
                                         uint32_t k_max,
                                         uint64_t max_term_ops,
                                         char **out_json);

/**
 * Summary of the builtin certificate catalog as a JSON array of objects
 * with fields `name`, `m`, `n`, `char`, `witness`, `claims`, `source`.
 *
 * # Safety
 * `out_json` must be a valid pointer; free the result with
 * [`gbei_string_free`].
 */
enum GbeiStatus gbei_catalog_json(char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GBEI_H */
