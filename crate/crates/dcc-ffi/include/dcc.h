/* C interface for the dual clique cover toolkit. Vertex ids are 0-based. */

#ifndef DCC_FFI_H
#define DCC_FFI_H

/* Generated by cbindgen from the dcc-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef struct DccGraph DccGraph;
typedef struct DccCover DccCover;
typedef struct DccRep DccRep;


/**
 * Status code returned by every fallible call.
 */
typedef enum DccStatus {
  DccStatus_Ok = 0,
  DccStatus_Io = 1,
  DccStatus_Format = 2,
  DccStatus_InvalidArgument = 3,
  DccStatus_Domain = 4,
  DccStatus_NullPointer = 5,
} DccStatus;

/**
 * Cover construction algorithm selector.
 */
typedef enum DccConstructor {
  DccConstructor_LovaszPeeling = 0,
  DccConstructor_SuccinctPeeling = 1,
  DccConstructor_GlobalAdmissibility = 2,
  DccConstructor_LocalAdmissibility = 3,
  DccConstructor_LocalPeeling = 4,
} DccConstructor;

/**
 * Copies the last error message (UTF-8, NUL-terminated, truncated to `cap`)
 * into `buf`. Returns the full message length in bytes, excluding the NUL.
 *
 * # Safety
 * `buf` must point to at least `cap` writable bytes, or be null (in which
 * case only the length is returned).
 */
size_t dcc_last_error_message(char *buf, size_t cap);

/**
 * Loads a graph from the text format (`%` comments, `n m` header, 1-based
 * edge lines).
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum DccStatus dcc_graph_load(const char *path, DccGraph **out);

/**
 * # Safety
 * `graph` must be a live handle; `path` a NUL-terminated string.
 */
enum DccStatus dcc_graph_save(const DccGraph *graph, const char *path);

/**
 * Seeded Erdős–Rényi generator.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DccStatus dcc_graph_gen_er(size_t n, double p, uint64_t seed, DccGraph **out);

/**
 * Two n-cliques joined by a perfect matching.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DccStatus dcc_graph_gen_matched_cliques(size_t n, DccGraph **out);

/**
 * # Safety
 * `graph` must be a live handle (or null, which is a no-op).
 */
void dcc_graph_free(DccGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
size_t dcc_graph_n(const DccGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
size_t dcc_graph_m(const DccGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
uint32_t dcc_graph_degeneracy(const DccGraph *graph);

/**
 * Builds a clique cover of `graph` with the selected constructor, optionally
 * post-processed to be assignment-minimal.
 *
 * # Safety
 * `graph` must be a live handle; `out` a valid pointer.
 */
enum DccStatus dcc_cover_construct(const DccGraph *graph,
                                   enum DccConstructor constructor,
                                   bool assignment_minimal,
                                   DccCover **out);

/**
 * Loads a cover from either the text or the encoded format (detected by
 * magic bytes).
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` a valid pointer.
 */
enum DccStatus dcc_cover_load(const char *path, DccCover **out);

/**
 * Writes the cover to `path`, in the binary varbyte format when `encoded` is
 * true and the text format otherwise.
 *
 * # Safety
 * `cover` must be a live handle; `path` a NUL-terminated string.
 */
enum DccStatus dcc_cover_save(const DccCover *cover, const char *path, bool encoded);

/**
 * # Safety
 * `cover` must be a live handle (or null, which is a no-op).
 */
void dcc_cover_free(DccCover *cover);

/**
 * # Safety
 * `cover` must be a live handle.
 */
size_t dcc_cover_n(const DccCover *cover);

/**
 * # Safety
 * `cover` must be a live handle.
 */
size_t dcc_cover_num_cliques(const DccCover *cover);

/**
 * Total number of vertex-clique assignments.
 *
 * # Safety
 * `cover` must be a live handle.
 */
size_t dcc_cover_size(const DccCover *cover);

/**
 * Checks that every clique induces a clique of `graph` and every edge is
 * covered; `Domain` with a witness message otherwise.
 *
 * # Safety
 * Both handles must be live.
 */
enum DccStatus dcc_cover_validate(const DccGraph *graph, const DccCover *cover);

/**
 * `2m / size(C)`.
 *
 * # Safety
 * Both handles and `out` must be valid.
 */
enum DccStatus dcc_cover_compression_ratio(const DccGraph *graph,
                                           const DccCover *cover,
                                           double *out);

/**
 * Pairs the cover with its incidence dual for query-side algorithms.
 *
 * # Safety
 * `cover` must be a live handle; `out` a valid pointer.
 */
enum DccStatus dcc_rep_build(const DccCover *cover, DccRep **out);

/**
 * # Safety
 * `rep` must be a live handle (or null, which is a no-op).
 */
void dcc_rep_free(DccRep *rep);

/**
 * `size(C) + size(L)`.
 *
 * # Safety
 * `rep` must be a live handle.
 */
size_t dcc_rep_size(const DccRep *rep);

/**
 * Adjacency through label intersection; writes 1 or 0 into `out`.
 *
 * # Safety
 * `rep` must be a live handle; `out` a valid pointer.
 */
enum DccStatus dcc_rep_adjacent(const DccRep *rep, uint32_t u, uint32_t v, int32_t *out);

/**
 * Breadth-first distances from `source` into `dist_out` (length `n`);
 * unreachable or uncovered vertices get `UINT32_MAX`.
 *
 * # Safety
 * `rep` must be a live handle and `dist_out` must point to at least `cap`
 * writable `uint32_t`s with `cap >= n`.
 */
enum DccStatus dcc_rep_bfs(const DccRep *rep, uint32_t source, uint32_t *dist_out, size_t cap);

/**
 * Connected components from the cover alone. `labels_out` (length `n`)
 * receives the 0-based component label per vertex, or -1 for vertices
 * outside the cover universe; the component count goes to `count_out`.
 *
 * # Safety
 * `cover` must be a live handle; `labels_out` must hold at least `cap >= n`
 * `int64_t`s; `count_out` must be valid.
 */
enum DccStatus dcc_cover_components(const DccCover *cover,
                                    int64_t *labels_out,
                                    size_t cap,
                                    size_t *count_out);

#endif  /* DCC_FFI_H */
