#ifndef SESQUIVALENT_H
#define SESQUIVALENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum SesqStatus {
  SESQ_STATUS_OK = 0,
  SESQ_STATUS_NULL_POINTER = 1,
  SESQ_STATUS_INVALID_UTF8 = 2,
  SESQ_STATUS_PARSE = 3,
  SESQ_STATUS_INVALID_ARGUMENT = 4,
  SESQ_STATUS_OUTSIDE_REGION = 5,
  SESQ_STATUS_SIZE_LIMIT = 6,
  SESQ_STATUS_TRUNCATION_CAP = 7,
  SESQ_STATUS_INTERNAL = 8,
} SesqStatus;

// Which part of the region test failed.
typedef enum SesqFailedCondition {
  SESQ_FAILED_CONDITION_NONE = 0,
  SESQ_FAILED_CONDITION_X_CONDITION = 1,
  SESQ_FAILED_CONDITION_MAIN_INEQUALITY = 2,
} SesqFailedCondition;

// Opaque graph handle.
typedef struct SesqGraph SesqGraph;

typedef struct SesqComplex {
  double re;
  double im;
} SesqComplex;

typedef struct SesqRegionCertificate {
  bool inside;
  double lhs;
  double rhs;
  double delta_slack;
  double a;
  double c;
  double alpha;
  enum SesqFailedCondition failed;
} SesqRegionCertificate;

typedef struct SesqApproximation {
  struct SesqComplex phi_hat;
  double a;
  double rho;
  double delta_slack;
  size_t m;
  // Certified bound on `|log Φ̂ - log Φ|`.
  double tail_bound;
} SesqApproximation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until the
// next call into the library from the same thread.
const char *sesq_last_error(void);

// Parses an edge list (`u v` per line, optional `n N` header, `#`
// comments) or a JSON document `{"n": N, "edges": [[u, v], ...]}`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum SesqStatus sesq_graph_parse(const char *text, struct SesqGraph **out);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`u0, v0, u1, v1, ...`).
//
// # Safety
// `edges` must point to `2 * edge_count` values (it may be null when
// `edge_count` is 0) and `out` must be a valid pointer.
enum SesqStatus sesq_graph_from_edges(size_t n,
                                      const size_t *edges,
                                      size_t edge_count,
                                      struct SesqGraph **out);

// # Safety
// `graph` must come from this library and not have been freed. Null is
// ignored.
void sesq_graph_free(struct SesqGraph *graph);

// # Safety
// `graph` must be a live handle or null (which yields 0).
size_t sesq_graph_vertex_count(const struct SesqGraph *graph);

// # Safety
// `graph` must be a live handle or null (which yields 0).
size_t sesq_graph_edge_count(const struct SesqGraph *graph);

// # Safety
// `graph` must be a live handle or null (which yields 0).
size_t sesq_graph_max_degree(const struct SesqGraph *graph);

// Length of the shortest cycle, or 0 for a forest.
//
// # Safety
// `graph` must be a live handle or null (which yields 0).
size_t sesq_graph_girth(const struct SesqGraph *graph);

// Exact `Φ_G(x, y, z)`. Graphs with more than `enum_limit` vertices are
// rejected with `SESQ_STATUS_SIZE_LIMIT`.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum SesqStatus sesq_phi_eval(const struct SesqGraph *graph,
                              struct SesqComplex x,
                              struct SesqComplex y,
                              struct SesqComplex z,
                              size_t enum_limit,
                              struct SesqComplex *out);

// The full polynomial as JSON: `{"n": N, "terms": [{"v", "e", "c", "coef"}]}`
// with decimal-string coefficients. Free the result with
// [`sesq_string_free`].
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum SesqStatus sesq_phi_polynomial_json(const struct SesqGraph *graph,
                                         size_t enum_limit,
                                         char **out);

// # Safety
// `s` must come from this library or be null.
void sesq_string_free(char *s);

// Zero-free region test for degree bound `delta` and auxiliary `a`. Pass
// `girth = 0` for the unrefined test. A point outside the region is not an
// error: `out->inside` is false and `out->failed` says why.
//
// # Safety
// `out` must be a valid pointer.
enum SesqStatus sesq_certify_region(size_t delta,
                                    double a,
                                    struct SesqComplex x,
                                    struct SesqComplex y,
                                    struct SesqComplex z,
                                    size_t girth,
                                    struct SesqRegionCertificate *out);

// Deterministic approximation `Φ̂ = Φ e^η` with `|η| <= epsilon`.
//
// `a` is the auxiliary parameter (NaN selects the optimum), `delta` the
// analytic degree bound (0 selects the graph's maximum degree, at least 2)
// and `m_cap` the largest truncation order allowed (0 selects the default).
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum SesqStatus sesq_approximate(const struct SesqGraph *graph,
                                 struct SesqComplex x,
                                 struct SesqComplex y,
                                 struct SesqComplex z,
                                 double a,
                                 double epsilon,
                                 size_t delta,
                                 size_t m_cap,
                                 struct SesqApproximation *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SESQUIVALENT_H */
