#ifndef OBELISK_H
#define OBELISK_H

/* C interface to the obelisk oriented-book-embedding library.
 *
 * Every function that can fail returns an obk_status. On failure the
 * out-parameters are left untouched and obk_last_error() holds a
 * human-readable message for the calling thread. Strings returned through
 * char** are heap copies owned by the caller; release them with
 * obk_string_free(). Handles are opaque and freed with their matching
 * *_free() function. Passing NULL where a handle is required is undefined.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum obk_status {
    OBK_OK = 0,
    OBK_SYNTAX_ERROR,
    OBK_NOT_SIMPLE,
    OBK_UNKNOWN_VERTEX,
    OBK_UNKNOWN_ARC,
    OBK_SIZE_GUARD,
    OBK_DISCONNECTED,
    OBK_NOT_A_CYCLE,
    OBK_NOT_A_TREE,
    OBK_NOT_A_SINK,
    OBK_BAD_SPEC,
    OBK_WRONG_SHAPE,
    OBK_NO_CYCLE,
    OBK_MULTIPLE_CYCLES,
    OBK_CYCLE_NOT_DIRECTED,
    OBK_INVALID_EMBEDDING,
    OBK_BAD_ARGUMENT,
    OBK_INTERNAL
} obk_status;

typedef struct obk_graph obk_graph;
typedef struct obk_embedding obk_embedding;
typedef struct obk_graph_list obk_graph_list;

/* Stable identifier for a status code, e.g. "size_guard". */
const char *obk_status_name(obk_status s);

/* Message from the most recent failing call on this thread ("" if none). */
const char *obk_last_error(void);

/* Frees any string returned through a char** out-parameter. */
void obk_string_free(char *s);

/* ---- graphs ------------------------------------------------------- */

/* Parses the arc-list format. When implicit_vertices is nonzero, arcs may
 * mention vertices that no "v" line declared. */
obk_status obk_graph_parse(const char *text, int implicit_vertices,
                           obk_graph **out);
obk_status obk_graph_format(const obk_graph *g, char **out);
void obk_graph_free(obk_graph *g);

int obk_graph_vertex_count(const obk_graph *g);
int obk_graph_arc_count(const obk_graph *g);

obk_status obk_graph_converse(const obk_graph *g, obk_graph **out);
obk_status obk_graph_isomorphic(const obk_graph *a, const obk_graph *b,
                                int *iso);

/* Shape of a connected graph: "dipath", "oriented-path", "oriented-tree",
 * "dicycle", "oriented-cycle", "unidicyclic" or "other". */
obk_status obk_graph_shape(const obk_graph *g, char **out);

/* ---- embeddings ---------------------------------------------------- */

obk_status obk_embedding_parse(const char *text, obk_embedding **out);
obk_status obk_embedding_format(const obk_embedding *e, char **out);
void obk_embedding_free(obk_embedding *e);
int obk_embedding_pages(const obk_embedding *e);

/* ---- checking and rendering ---------------------------------------- */

/* Checks e against g. *valid becomes 1 or 0; *report receives one line per
 * violation (or "valid"). The status is OBK_OK even when *valid is 0. */
obk_status obk_verify(const obk_graph *g, const obk_embedding *e, int *valid,
                      char **report);

/* Renders a valid embedding as an SVG document. */
obk_status obk_render_svg(const obk_graph *g, const obk_embedding *e,
                          char **svg);

/* ---- exact search --------------------------------------------------- */

/* Book thickness over all spine orders, max over components. max_n_override
 * raises the size guard when positive (0 keeps the default of 9); jobs is
 * the worker-thread count (values < 1 mean 1). The witness embedding always
 * attains *thickness pages. */
obk_status obk_obt(const obk_graph *g, int max_n_override, int jobs,
                   int *thickness, obk_embedding **witness);

/* ---- construction ---------------------------------------------------- */

/* Builds a one-page embedding when a constructive routine applies, falling
 * back to the exact search otherwise. method is "auto" or "exact".
 *
 * On OBK_OK exactly one of two things happened:
 *   *found = 1  and *out holds the embedding, or
 *   *found = 0  and *witness_report describes the forbidden structure that
 *               rules out one page (only possible for uni-dicyclic input).
 * *method_used names the routine that ran. Any output pointer may be NULL
 * when the caller does not need that result. */
obk_status obk_embed(const obk_graph *g, const char *method,
                     int max_n_override, int jobs, obk_embedding **out,
                     char **method_used, char **witness_report, int *found);

/* ---- recognition ------------------------------------------------------ */

/* Classifies g among the one-page-critical graphs. *is_m1 becomes 1 or 0;
 * when 1, *family receives "SPlus", "SMinus" or "Dicycle". */
obk_status obk_classify_m1(const obk_graph *g, int *is_m1, char **family);

/* Searches a strictly uni-dicyclic graph for a forbidden substructure.
 * *found becomes 1 with *report describing the witness, or 0 with *report
 * set to "none". Non-unidicyclic input is rejected with the decomposition
 * error (OBK_NO_CYCLE, OBK_MULTIPLE_CYCLES, OBK_CYCLE_NOT_DIRECTED or
 * OBK_DISCONNECTED). */
obk_status obk_recognize(const obk_graph *g, int *found, char **report);

/* ---- mining and generation ------------------------------------------- */

/* All k-page-critical graphs on at most n_max vertices, one representative
 * per isomorphism class. */
obk_status obk_mine_critical(int n_max, int k, int max_n_override,
                             obk_graph_list **out);
int obk_graph_list_count(const obk_graph_list *l);
const obk_graph *obk_graph_list_get(const obk_graph_list *l, int i);
void obk_graph_list_free(obk_graph_list *l);

/* Seeded generator. shape is one of "tree", "cycle", "dicycle",
 * "unidicyclic" or "fountain"; n is the vertex count (for "fountain" the
 * spine length). The same (shape, n, seed) always yields the same graph. */
obk_status obk_generate(const char *shape, int n, uint64_t seed,
                        obk_graph **out);

#ifdef __cplusplus
}
#endif

#endif /* OBELISK_H */
