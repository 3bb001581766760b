/* C API for the q-graph Turan toolkit.
 *
 * Conventions:
 *   - Every fallible call returns qt_status; QT_OK is 0. On failure,
 *     qt_last_error() describes the problem for the calling thread.
 *   - Objects are opaque handles created by the library and released with
 *     their qt_*_free function. Output handles are written only on QT_OK.
 *   - Composite results come back as JSON in a malloc'd string; release
 *     with qt_string_free. Numeric scalars use plain out parameters.
 */

#ifndef QTURAN_H
#define QTURAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qt_status {
  QT_OK = 0,
  QT_ERROR_ARGUMENT = 1, /* invalid parameter or precondition */
  QT_ERROR_PARSE = 2,    /* malformed input text or file */
  QT_ERROR_IO = 3,       /* file system failure */
  QT_ERROR_LIMIT = 4,    /* configurable cap exceeded */
  QT_ERROR_INTERNAL = 5
} qt_status;

typedef struct qt_qgraph qt_qgraph;
typedef struct qt_pattern qt_pattern;

/* Message for the most recent failure on this thread; never NULL. */
const char *qt_last_error(void);

void qt_string_free(char *s);

/* ---- q-graphs --------------------------------------------------------- */

qt_status qt_qgraph_read(const char *path, qt_qgraph **out);
qt_status qt_qgraph_parse(const char *text, qt_qgraph **out);
qt_status qt_qgraph_write(const qt_qgraph *g, const char *path);
qt_status qt_qgraph_format(const qt_qgraph *g, char **out);   /* canonical text */
qt_status qt_qgraph_to_json(const qt_qgraph *g, char **out);
int qt_qgraph_n(const qt_qgraph *g);
int qt_qgraph_q(const qt_qgraph *g);
long long qt_qgraph_size(const qt_qgraph *g);
void qt_qgraph_free(qt_qgraph *g);

/* ---- patterns ---------------------------------------------------------- */

qt_status qt_pattern_read(const char *path, qt_pattern **out);
qt_status qt_pattern_parse(const char *text, qt_pattern **out);
/* Built-in names: c<k>, p<k>, star<t>, k<r>,<s>[,<t>]. */
qt_status qt_pattern_named(const char *name, qt_pattern **out);
qt_status qt_pattern_write(const qt_pattern *p, const char *path);
qt_status qt_pattern_to_json(const qt_pattern *p, char **out);
int qt_pattern_n(const qt_pattern *p);
long long qt_pattern_size(const qt_pattern *p);
void qt_pattern_free(qt_pattern *p);

/* ---- detection and verification ---------------------------------------- */

/* limit <= 0: report only the first embedding. JSON: {found, count,
 * embeddings: [{vertex_map, edges}]}. */
qt_status qt_detect(const qt_qgraph *h, const qt_pattern *f, int s, long long limit,
                    char **json_out);

/* JSON: {free, violation?}. */
qt_status qt_verify_free(const qt_qgraph *h, const qt_pattern *f, int s, char **json_out);

/* ---- extremal search ---------------------------------------------------- */

/* Budgets < 0 mean unlimited. jobs > 1 explores root branches on that many
 * threads: the value stays exact, the witness may vary between runs.
 * JSON: {value, status, witness, nodes, seconds} with status one of
 * "exact", "lower_bound", "timeout". */
qt_status qt_extremal(int n, int q, int s, const qt_pattern *f, long long budget_nodes,
                      double budget_secs, int jobs, char **json_out);

/* ---- constructions ------------------------------------------------------ */

qt_status qt_construct_universal_tree(int q, int n, qt_qgraph **out);
qt_status qt_construct_blowup(const qt_pattern *g, int q, qt_qgraph **out);
qt_status qt_construct_low_complement(int q, int n, qt_qgraph **out);
qt_status qt_construct_chi1_lower(const qt_pattern *f, int q, int n, qt_qgraph **out);
/* block_sizes[0..blocks): consecutive blocks; pruned != 0 drops the
 * low-weight pairs inside the last block. */
qt_status qt_construct_tree_family(const int *block_sizes, int blocks, int pruned,
                                   qt_qgraph **out);
qt_status qt_construct_tripart_13_4(int n, qt_qgraph **out);
qt_status qt_construct_triangle_family(int q, int n, int variant, qt_qgraph **out);
qt_status qt_construct_q3_pair(int n, qt_qgraph **out);
/* JSON: {q, triples: [[[u,v,a,b] x3], ...]}. */
qt_status qt_triple_partition(int q, char **json_out);

/* ---- chromatic numbers -------------------------------------------------- */

qt_status qt_chromatic(const qt_pattern *f, int *out);
qt_status qt_robust_chromatic(const qt_pattern *f, int *out);

/* JSON: {m, r, p, trials, seed, rng, frequency, log: [...]}. jobs <= 0
 * uses all available cores; the report is independent of jobs. */
qt_status qt_chi1_experiment(int m, int r, double p, int trials, uint64_t seed, int jobs,
                             char **json_out);

/* ---- weight functions ---------------------------------------------------- */

/* JSON: {k, value, nodes, witness: {k, weights, total}}. */
qt_status qt_wstar_max(int k, char **json_out);
/* JSON: {k, total, ok, violation?}. */
qt_status qt_wstar_check_file(const char *path, char **json_out);

/* ---- acceptance grid ----------------------------------------------------- */

/* Runs every release criterion. all_passed receives 1/0; JSON lists one
 * entry per criterion. */
qt_status qt_acceptance_run(int *all_passed, char **json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QTURAN_H */
