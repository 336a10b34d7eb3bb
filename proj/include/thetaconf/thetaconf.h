/* C interface to the thetaconf library.
 *
 * Every fallible call returns a tc_status. On failure a message describing
 * the last error of the calling thread is available from tc_last_error().
 * Strings handed out by the library are released with tc_string_free. */
#ifndef THETACONF_H
#define THETACONF_H

#include <stddef.h>
#include <stdint.h>

#if defined(THETACONF_BUILDING_LIBRARY)
#define TC_API __attribute__((visibility("default")))
#else
#define TC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1,
  TC_ERR_PARSE = 2,
  TC_ERR_PRECONDITION = 3,
  TC_ERR_RESOURCE_LIMIT = 4,
  TC_ERR_INTERNAL = 5
} tc_status;

typedef struct tc_limits {
  size_t max_edges;
  size_t max_morphisms;
  size_t max_chains;
} tc_limits;

typedef struct tc_tree tc_tree;
typedef struct tc_poset tc_poset;
typedef struct tc_homology tc_homology;

TC_API const char* tc_version(void);
TC_API const char* tc_status_message(tc_status status);
/* Message of the last failed call on this thread, "" if none. */
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);
TC_API tc_limits tc_limits_default(void);

/* Trees of height at most n, in symbol notation "[2]([1],[0])" or as
 * nested JSON arrays. */
TC_API tc_status tc_tree_parse(const char* text, int n, tc_tree** out);
TC_API void tc_tree_free(tc_tree* tree);
TC_API tc_status tc_tree_render(const tc_tree* tree, char** out);
TC_API tc_status tc_tree_to_json(const tc_tree* tree, char** out);
TC_API int tc_tree_height_bound(const tc_tree* tree);
TC_API size_t tc_tree_edge_count(const tc_tree* tree);
TC_API size_t tc_tree_leaf_count(const tc_tree* tree);
TC_API int tc_tree_is_healthy(const tc_tree* tree);
TC_API tc_status tc_tree_healthify(const tc_tree* tree, tc_tree** out);

/* The poset of n-orderings of `labels`. Elements are listed in a fixed
 * order: labels sorted, permutations lexicographic, then words. */
TC_API tc_status tc_poset_create(int n, const char* const* labels, size_t label_count,
                                 const tc_limits* limits, tc_poset** out);
TC_API void tc_poset_free(tc_poset* poset);
TC_API size_t tc_poset_size(const tc_poset* poset);
TC_API tc_status tc_poset_element_text(const tc_poset* poset, size_t index, char** out);
TC_API tc_status tc_poset_element_json(const tc_poset* poset, size_t index, char** out);
TC_API tc_status tc_poset_element_tree(const tc_poset* poset, size_t index, char** out);
TC_API tc_status tc_poset_degree(const tc_poset* poset, size_t index, size_t* out);
TC_API tc_status tc_poset_leq(const tc_poset* poset, size_t i, size_t j, int* out);
TC_API size_t tc_poset_cover_count(const tc_poset* poset);
TC_API tc_status tc_poset_cover(const tc_poset* poset, size_t k, size_t* lower,
                                size_t* upper);
TC_API tc_status tc_poset_to_dot(const tc_poset* poset, char** out);
TC_API tc_status tc_poset_to_json(const tc_poset* poset, char** out);

/* Integral homology of the order complex. */
TC_API tc_status tc_poset_homology(const tc_poset* poset, const tc_limits* limits,
                                   tc_homology** out);
TC_API void tc_homology_free(tc_homology* h);
TC_API size_t tc_homology_degree_count(const tc_homology* h);
TC_API size_t tc_homology_betti(const tc_homology* h, size_t degree);
TC_API size_t tc_homology_torsion_count(const tc_homology* h, size_t degree);
TC_API long long tc_homology_euler(const tc_homology* h);
TC_API tc_status tc_homology_to_json(const tc_homology* h, char** out);
/* Boundary matrix d_k : C_k -> C_{k-1} as "row,col,value" lines. */
TC_API tc_status tc_homology_boundary_csv(const tc_homology* h, size_t k, char** out);

/* Classifies the configuration in a point file ("label x1 ... xn" per
 * line). Writes the ordering in text form and, if requested, as JSON. */
TC_API tc_status tc_classify_points(const char* point_file, int n, char** text_out,
                                    char** json_out);

typedef struct tc_verify_options {
  int n;
  const char* const* labels;
  size_t label_count;
  tc_limits limits;
  size_t unit_max_edges;
  uint64_t seed;
  size_t samples;
  unsigned threads; /* 0: THETA_CONF_THREADS, else hardware */
} tc_verify_options;

TC_API tc_verify_options tc_verify_options_default(void);
/* Runs a verification suite: theorem-a, theorem-b, morphisms, poset or
 * cells. *passed is 1 when every check holds. */
TC_API tc_status tc_verify(const char* suite, const tc_verify_options* options,
                           char** report_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif
