#ifndef HFREE_H
#define HFREE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  HFREE_COMPLEXITY_POLYNOMIAL = 0,
  HFREE_COMPLEXITY_FPT = 1,
  HFREE_COMPLEXITY_W1_HARD = 2,
  HFREE_COMPLEXITY_NP_HARD_OPEN_FPT = 3,
  HFREE_COMPLEXITY_OPEN = 4,
} HfreeComplexity;

typedef enum {
  HFREE_KERNEL_POLY_KERNEL = 0,
  HFREE_KERNEL_TURING_KERNEL_NO_PK = 1,
  HFREE_KERNEL_NO_POLY_KERNEL = 2,
  HFREE_KERNEL_OPEN_KERNEL = 3,
} HfreeKernel;

/**
 * Result code of every fallible call.
 */
typedef enum {
  HFREE_STATUS_OK = 0,
  HFREE_STATUS_NULL_POINTER = 1,
  HFREE_STATUS_INVALID_INPUT = 2,
  HFREE_STATUS_PARSE = 3,
  /**
   * The graph contains the forbidden pattern.
   */
  HFREE_STATUS_VIOLATION = 4,
  HFREE_STATUS_BUDGET_EXCEEDED = 5,
  HFREE_STATUS_UNSUPPORTED = 6,
  HFREE_STATUS_BUFFER_TOO_SMALL = 7,
  HFREE_STATUS_INTERNAL = 8,
} HfreeStatus;

/**
 * Opaque graph handle.
 */
typedef struct HfreeGraph HfreeGraph;

/**
 * Opaque forbidden-pattern handle.
 */
typedef struct HfreePattern HfreePattern;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the library.
 */
const char *hfree_last_error(void);

/**
 * Edgeless graph on `n` vertices.
 */
HfreeGraph *hfree_graph_new(size_t n);

/**
 * # Safety
 * `graph` must come from this library and not be used afterwards; null is ignored.
 */
void hfree_graph_free(HfreeGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
HfreeStatus hfree_graph_add_edge(HfreeGraph *graph, size_t u, size_t v);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
size_t hfree_graph_vertex_count(const HfreeGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
size_t hfree_graph_edge_count(const HfreeGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
bool hfree_graph_has_edge(const HfreeGraph *graph, size_t u, size_t v);

/**
 * Parses the `p`/`e` text format into a new handle stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
HfreeStatus hfree_graph_parse(const char *text, HfreeGraph **out);

/**
 * Serializes `graph`; release the string with [`hfree_string_free`].
 *
 * # Safety
 * `graph` must be a live handle and `out` writable.
 */
HfreeStatus hfree_graph_emit(const HfreeGraph *graph, char **out);

/**
 * # Safety
 * `s` must come from this library; null is ignored.
 */
void hfree_string_free(char *s);

/**
 * Parses a pattern expression such as `C4`, `2K2`, `K5-K2` or `gem`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` writable.
 */
HfreeStatus hfree_pattern_parse(const char *expr, HfreePattern **out);

/**
 * # Safety
 * `pattern` must come from this library and not be used afterwards; null is ignored.
 */
void hfree_pattern_free(HfreePattern *pattern);

/**
 * Independence number by exact search limited to `budget` nodes.
 *
 * `witness` may be null; otherwise it receives a maximum independent set.
 *
 * # Safety
 * `graph` must be a live handle, `alpha` writable, and `witness` valid for `cap` writes.
 */
HfreeStatus hfree_alpha(const HfreeGraph *graph,
                        uint64_t budget,
                        size_t *alpha,
                        size_t *witness,
                        size_t cap);

/**
 * Decides whether the `pattern`-free `graph` has an independent set of size `k`.
 *
 * Fails with `HFREE_STATUS_VIOLATION` when the graph contains the pattern.
 * On success `*found` is set and, if `found`, the set goes to `witness`.
 *
 * # Safety
 * Handles must be live, `found` writable, `witness` valid for `cap` writes or null.
 */
HfreeStatus hfree_solve(const HfreeGraph *graph,
                        const HfreePattern *pattern,
                        size_t k,
                        uint64_t seed,
                        uint64_t budget,
                        bool *found,
                        size_t *witness,
                        size_t cap);

/**
 * Complexity and kernel status of MIS in `pattern`-free graphs.
 *
 * # Safety
 * `pattern` must be a live handle; outputs writable.
 */
HfreeStatus hfree_classify(const HfreePattern *pattern,
                           HfreeComplexity *complexity,
                           HfreeKernel *kernel);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HFREE_H */
