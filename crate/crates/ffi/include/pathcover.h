#ifndef PATHCOVER_H
#define PATHCOVER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

/**
 * Selects Approx1 in `pc_solve`.
 */
#define PC_ALGORITHM_APPROX1 1

/**
 * Selects Approx2 (k = 4 only) in `pc_solve`.
 */
#define PC_ALGORITHM_APPROX2 2

/**
 * Result code of every fallible call.
 */
typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_ARGUMENT = 2,
  PC_STATUS_INVALID_GRAPH = 3,
  PC_STATUS_IO = 4,
  PC_STATUS_TOO_LARGE = 5,
  PC_STATUS_PANIC = 6,
} PcStatus;

/**
 * Opaque cover handle: vertex-disjoint paths.
 */
typedef struct PcCover PcCover;

/**
 * Opaque graph handle.
 */
typedef struct PcGraph PcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or may be null
 * when `edge_count` is 0); `out` must be writable.
 */
enum PcStatus pc_graph_new(size_t n, const size_t *edges, size_t edge_count, struct PcGraph **out);

/**
 * Reads a graph file in the text format (`n m` header, one `u v` edge per line).
 *
 * # Safety
 * `path` must be a nul-terminated string; `out` must be writable.
 */
enum PcStatus pc_graph_load(const char *path, struct PcGraph **out);

/**
 * Generates the graph of planted instance `(k, n, d, i)` under `master_seed`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_graph_generate(size_t k,
                                size_t n,
                                double d,
                                uint64_t i,
                                uint64_t master_seed,
                                struct PcGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from a `pc_graph_*` constructor and not be used afterwards.
 */
void pc_graph_free(struct PcGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t pc_graph_vertex_count(const struct PcGraph *g);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t pc_graph_edge_count(const struct PcGraph *g);

/**
 * Runs Approx1 or Approx2 (see `PC_ALGORITHM_*`) from the empty cover.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum PcStatus pc_solve(const struct PcGraph *g, uint32_t algorithm, size_t k, struct PcCover **out);

/**
 * Computes an optimal cover exactly; graphs above `limit` vertices
 * (at most 24) are refused with `PC_STATUS_TOO_LARGE`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum PcStatus pc_exact(const struct PcGraph *g, size_t k, size_t limit, struct PcCover **out);

/**
 * Releases a cover. Null is ignored.
 *
 * # Safety
 * `c` must come from `pc_solve` or `pc_exact` and not be used afterwards.
 */
void pc_cover_free(struct PcCover *c);

/**
 * Total number of covered vertices, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live cover handle.
 */
size_t pc_cover_coverage(const struct PcCover *c);

/**
 * Number of paths, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live cover handle.
 */
size_t pc_cover_path_count(const struct PcCover *c);

/**
 * Order of path `index`, or 0 if the handle is null or the index is out of range.
 *
 * # Safety
 * `c` must be null or a live cover handle.
 */
size_t pc_cover_path_len(const struct PcCover *c, size_t index);

/**
 * Copies the vertices of path `index` into `buf`, which holds `capacity` values.
 *
 * # Safety
 * `c` must be a live cover handle; `buf` must have room for `capacity` values.
 */
enum PcStatus pc_cover_path_copy(const struct PcCover *c,
                                 size_t index,
                                 size_t *buf,
                                 size_t capacity);

/**
 * Worst-case ratio bound of Approx1 for the given `k` (at least 4).
 *
 * # Safety
 * `out` must be writable.
 */
enum PcStatus pc_theoretical_ratio(size_t k, double *out);

/**
 * Message of the last failed call on this thread, or null after a
 * successful call. Valid until the next `pc_*` call on the same thread.
 */
const char *pc_last_error_message(void);

/**
 * Static description of a status code.
 */
const char *pc_status_message(enum PcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PATHCOVER_H */
