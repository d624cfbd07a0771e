/* autkit - automorphism groups of graphs, with a focus on Cayley graphs of
 * permutation groups generated by transpositions.
 *
 * Plain C interface over the C++ core. All objects are opaque handles that
 * must be released with the matching _free function. Every fallible call
 * returns an autkit_status; on failure the out parameters are untouched and
 * autkit_last_error() describes the problem (per thread). Strings returned
 * through char** are heap-allocated and must be released with
 * autkit_string_free().
 *
 * Permutations act on points 1..n and compose left to right: applying the
 * composition of p and q means applying p first, then q.
 */

#ifndef AUTKIT_H
#define AUTKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum autkit_status {
  AUTKIT_OK = 0,
  AUTKIT_ERR_INVALID_ARGUMENT = 1,
  AUTKIT_ERR_PARSE = 2,
  AUTKIT_ERR_DEGREE_MISMATCH = 3,
  AUTKIT_ERR_BUDGET_EXCEEDED = 4,
  AUTKIT_ERR_ORDER_EXCEEDS_CAP = 5,
  AUTKIT_ERR_DISCONNECTED = 6,
  AUTKIT_ERR_NOT_A_SUBGROUP = 7,
  AUTKIT_ERR_SEARCH_BOUND_EXCEEDED = 8,
  AUTKIT_ERR_SIZE_LIMIT_EXCEEDED = 9,
  AUTKIT_ERR_GENERATOR_NOT_IN_SET = 10,
  AUTKIT_ERR_INTERNAL = 11,
  AUTKIT_ERR_UNKNOWN = 12
} autkit_status;

typedef struct autkit_perm autkit_perm;
typedef struct autkit_tset autkit_tset;
typedef struct autkit_graph autkit_graph;
typedef struct autkit_cayley autkit_cayley;
typedef struct autkit_group autkit_group;
typedef struct autkit_aut autkit_aut;

/* Message for the most recent failing call on this thread; empty string
 * after a success. The pointer stays valid until the next call. */
const char* autkit_last_error(void);

void autkit_string_free(char* s);
void autkit_u64_array_free(uint64_t* a);
void autkit_u32_array_free(uint32_t* a);

void autkit_perm_free(autkit_perm* p);
void autkit_tset_free(autkit_tset* s);
void autkit_graph_free(autkit_graph* g);
void autkit_cayley_free(autkit_cayley* c);
void autkit_group_free(autkit_group* g);
void autkit_aut_free(autkit_aut* a);

/* ---- permutations ------------------------------------------------------ */

/* Accepts cycle notation "(1,5,4)(3,6)" (juxtaposed cycles compose left to
 * right) or an image table "[5,2,6,1,4,3]". degree 0 infers the degree from
 * the largest point mentioned. */
autkit_status autkit_perm_parse(const char* text, uint32_t degree,
                                autkit_perm** out);
autkit_status autkit_perm_identity(uint32_t degree, autkit_perm** out);
autkit_status autkit_perm_compose(const autkit_perm* p, const autkit_perm* q,
                                  autkit_perm** out);
autkit_status autkit_perm_inverse(const autkit_perm* p, autkit_perm** out);
uint32_t autkit_perm_degree(const autkit_perm* p);
/* Image of a 1-based point; 0 when the point is out of range. */
uint32_t autkit_perm_image(const autkit_perm* p, uint32_t point);
int autkit_perm_equal(const autkit_perm* p, const autkit_perm* q);
/* Cycle notation with fixed points omitted; "()" for the identity. */
autkit_status autkit_perm_format(const autkit_perm* p, char** out);

/* ---- transposition sets ------------------------------------------------ */

/* Text form: whitespace-separated 2-cycles, e.g. "(1,2) (2,3)" (the
 * separator may be omitted). n = 0 infers the point count from the largest
 * point mentioned. */
autkit_status autkit_tset_parse(const char* text, uint32_t n,
                                autkit_tset** out);
/* Stock sets by family: "star", "path", "cycle", "matching", "complete",
 * "tree" (a fixed asymmetric tree, needs n >= 7). */
autkit_status autkit_tset_family(const char* family, uint32_t n,
                                 autkit_tset** out);
uint32_t autkit_tset_points(const autkit_tset* s);
size_t autkit_tset_size(const autkit_tset* s);
autkit_status autkit_tset_format(const autkit_tset* s, char** out);
autkit_status autkit_tset_json(const autkit_tset* s, char** out);
/* 1 when the set generates the full symmetric group on its points, i.e.
 * when the transposition graph is connected. */
int autkit_tset_connected(const autkit_tset* s);
/* Name of the recognized transposition graph shape: star, path, cycle,
 * matching, complete, complete_bipartite, tree, triangle_and_square_free,
 * other. */
autkit_status autkit_tset_family_name(const autkit_tset* s, char** out);
autkit_status autkit_tset_graph(const autkit_tset* s, autkit_graph** out);
/* The permutation group generated by the set. */
autkit_status autkit_tset_group(const autkit_tset* s, autkit_group** out);

/* ---- graphs ------------------------------------------------------------ */

/* Families: complete(n), complete_bipartite(n,k), star(n), path(n),
 * cycle(n), matching(n), hypercube(n), kneser(n,k), johnson(n,k,i),
 * petersen, octahedron. Pass 0 for unused parameters. */
autkit_status autkit_graph_named(const char* name, uint32_t n, uint32_t k,
                                 uint32_t i, autkit_graph** out);
/* Plain text: vertex count first, then one "u v" pair per edge; '#' starts
 * a comment. */
autkit_status autkit_graph_parse(const char* text, autkit_graph** out);
uint32_t autkit_graph_num_vertices(const autkit_graph* g);
uint64_t autkit_graph_num_edges(const autkit_graph* g);
int autkit_graph_has_edge(const autkit_graph* g, uint32_t u, uint32_t v);
int autkit_graph_is_connected(const autkit_graph* g);
autkit_status autkit_graph_complement(const autkit_graph* g,
                                      autkit_graph** out);
autkit_status autkit_graph_line_graph(const autkit_graph* g,
                                      autkit_graph** out);
autkit_status autkit_graph_disjoint_copies(const autkit_graph* g,
                                           uint32_t copies,
                                           autkit_graph** out);
autkit_status autkit_graph_count_cliques(const autkit_graph* g, uint32_t size,
                                         uint64_t* out);
/* girth = 0 means the graph has no cycle. */
autkit_status autkit_graph_girth(const autkit_graph* g, uint32_t* girth,
                                 int* has_triangle, int* has_4cycle);
/* found = 1 and map filled with an edge-preserving vertex bijection when
 * the graphs are isomorphic (map has one entry per vertex of a and must be
 * released with autkit_u32_array_free); found = 0 otherwise. map may be
 * NULL when only the verdict matters. max_vertices = 0 means the default
 * cap of 2000. */
autkit_status autkit_graph_isomorphism(const autkit_graph* a,
                                       const autkit_graph* b,
                                       uint32_t max_vertices, int* found,
                                       uint32_t** map);
autkit_status autkit_graph_to_dot(const autkit_graph* g, char** out);
autkit_status autkit_graph_to_json(const autkit_graph* g, char** out);
autkit_status autkit_graph_to_edge_list(const autkit_graph* g, char** out);

/* ---- automorphism search ----------------------------------------------- */

/* max_vertices = 0 means the default search bound of 5000 vertices. */
autkit_status autkit_graph_aut(const autkit_graph* g, uint32_t max_vertices,
                               autkit_aut** out);
autkit_status autkit_graph_is_vertex_transitive(const autkit_graph* g,
                                                uint32_t max_vertices,
                                                int* out);
autkit_status autkit_graph_vertex_stabilizer(const autkit_graph* g,
                                             uint32_t vertex,
                                             uint32_t max_vertices,
                                             autkit_group** out);

autkit_status autkit_aut_order(const autkit_aut* a, char** decimal_out);
autkit_status autkit_aut_stabilizer_order(const autkit_aut* a,
                                          char** decimal_out);
uint64_t autkit_aut_orbit_size(const autkit_aut* a);
autkit_status autkit_aut_group(const autkit_aut* a, autkit_group** out);
autkit_status autkit_aut_json(const autkit_aut* a, char** out);

/* ---- permutation groups ------------------------------------------------ */

/* gens: array of `count` permutation strings, each parsed at the given
 * degree. count may be 0 for the trivial group. */
autkit_status autkit_group_from_generators(uint32_t degree,
                                           const char* const* gens,
                                           size_t count, autkit_group** out);
autkit_status autkit_group_symmetric(uint32_t n, autkit_group** out);
uint32_t autkit_group_degree(const autkit_group* g);
size_t autkit_group_num_generators(const autkit_group* g);
autkit_status autkit_group_generator(const autkit_group* g, size_t index,
                                     autkit_perm** out);
autkit_status autkit_group_order(const autkit_group* g, char** decimal_out);
autkit_status autkit_group_contains(const autkit_group* g,
                                    const autkit_perm* p, int* out);
autkit_status autkit_group_is_subgroup(const autkit_group* a,
                                       const autkit_group* b, int* out);
/* Whether a is a normal subgroup of b; a must be a subgroup of b. */
autkit_status autkit_group_is_normal_in(const autkit_group* a,
                                        const autkit_group* b, int* out);
/* Same degree and exactly the same element set. */
autkit_status autkit_group_same(const autkit_group* a, const autkit_group* b,
                                int* out);
/* a acting on 1..deg(a), b relabelled onto deg(a)+1..deg(a)+deg(b). */
autkit_status autkit_group_direct_sum(const autkit_group* a,
                                      const autkit_group* b,
                                      autkit_group** out);
/* Wreath-style product: b-blocks permuted by a, with an independent copy of
 * b inside each block; acts on deg(a)*deg(b) points. */
autkit_status autkit_group_wreath(const autkit_group* a,
                                  const autkit_group* b, autkit_group** out);

/* ---- Cayley graphs ------------------------------------------------------ */

/* budget_vertices = 0 means the default budget of 1000000. */
autkit_status autkit_cayley_build(const autkit_tset* s,
                                  uint64_t budget_vertices,
                                  autkit_cayley** out);
uint64_t autkit_cayley_num_vertices(const autkit_cayley* c);
uint32_t autkit_cayley_degree(const autkit_cayley* c);
autkit_status autkit_cayley_group_order(const autkit_cayley* c,
                                        char** decimal_out);
autkit_status autkit_cayley_diameter(const autkit_cayley* c, uint32_t* out);
/* levels[d] = number of vertices at distance d from the identity;
 * count = diameter + 1. Release with autkit_u64_array_free. */
autkit_status autkit_cayley_level_sizes(const autkit_cayley* c,
                                        uint64_t** levels, size_t* count);
autkit_status autkit_cayley_summary_json(const autkit_cayley* c,
                                         int with_diameter, char** out);
autkit_status autkit_cayley_to_graph(const autkit_cayley* c,
                                     autkit_graph** out);
/* The right translation maps as vertex permutations: a verified, regular
 * subgroup of the automorphism group. */
autkit_status autkit_cayley_translations(const autkit_cayley* c,
                                         autkit_group** out);
/* Automorphism search seeded with the right translations. max_vertices = 0
 * means the default search bound of 5000. */
autkit_status autkit_cayley_aut(const autkit_cayley* c, uint32_t max_vertices,
                                autkit_aut** out);
/* Symmetries of the transposition graph lifted to the Cayley graph by point
 * relabelling; each lifted map is verified. */
autkit_status autkit_cayley_lift_set_symmetries(const autkit_cayley* c,
                                                autkit_group** out);
/* Whether the right translations are normal in the computed automorphism
 * group. */
autkit_status autkit_check_normal(const autkit_cayley* c,
                                  const autkit_aut* aut, int* out);

/* ---- cycle censuses and predictions ------------------------------------ */

/* t and k are transpositions in cycle notation; they must belong to the
 * generating set and differ. */
autkit_status autkit_cayley_census(const autkit_cayley* c, const char* t,
                                   const char* k, uint64_t* four_cycles,
                                   uint64_t* six_cycles,
                                   uint64_t* distance3_vertices);
/* Evaluates the local cycle criterion over all generator pairs. holds may
 * be NULL; json (optional) receives a report with the failing pairs. */
autkit_status autkit_cayley_criterion(const autkit_cayley* c, int* holds,
                                      char** json);
/* Shape-based prediction of the Cayley graph's automorphism group. */
autkit_status autkit_predict_json(const autkit_tset* s, char** out);
/* Builds the graph, runs the search, and compares against the prediction.
 * agree and json may each be NULL. */
autkit_status autkit_verify(const autkit_tset* s, uint64_t budget_vertices,
                            int* agree, char** json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AUTKIT_H */
