/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "thetaconf/thetaconf.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void trees(void) {
  tc_tree* t = NULL;
  char* s = NULL;
  EXPECT(tc_tree_parse("[4]([2],[3],[0],[1])", 2, &t) == TC_OK);
  EXPECT(tc_tree_leaf_count(t) == 6);
  EXPECT(tc_tree_edge_count(t) == 10);
  EXPECT(tc_tree_height_bound(t) == 2);
  EXPECT(!tc_tree_is_healthy(t));
  tc_tree* h = NULL;
  EXPECT(tc_tree_healthify(t, &h) == TC_OK);
  EXPECT(tc_tree_render(h, &s) == TC_OK);
  EXPECT(strcmp(s, "[3]([2],[3],[1])") == 0);
  tc_string_free(s);
  EXPECT(tc_tree_to_json(h, &s) == TC_OK);
  EXPECT(strcmp(s, "[[[],[]],[[],[],[]],[[]]]") == 0);
  tc_string_free(s);
  tc_tree_free(h);
  tc_tree_free(t);

  t = (tc_tree*)0x1;
  EXPECT(tc_tree_parse("[2]([1]", 2, &t) == TC_ERR_PARSE);
  EXPECT(t == NULL);
  EXPECT(strstr(tc_last_error(), "position") != NULL);
  EXPECT(tc_tree_parse("[1]([1])", 1, &t) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(tc_tree_parse(NULL, 1, &t) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(tc_tree_parse("[[],[]]", 1, &t) == TC_OK);
  EXPECT(tc_tree_leaf_count(t) == 2);
  tc_tree_free(t);
  tc_tree_free(NULL);
}

static void posets(void) {
  const char* labels[] = {"a", "b"};
  tc_poset* p = NULL;
  char* s = NULL;
  EXPECT(tc_poset_create(2, labels, 2, NULL, &p) == TC_OK);
  EXPECT(tc_poset_size(p) == 4);
  EXPECT(tc_poset_cover_count(p) == 4);
  EXPECT(tc_poset_element_text(p, 1, &s) == TC_OK);
  EXPECT(strcmp(s, "a 1 b") == 0);
  tc_string_free(s);
  EXPECT(tc_poset_element_tree(p, 0, &s) == TC_OK);
  EXPECT(strcmp(s, "[2]([1],[1])") == 0);
  tc_string_free(s);
  size_t degree = 0;
  EXPECT(tc_poset_degree(p, 0, &degree) == TC_OK && degree == 4);
  int le = 0;
  EXPECT(tc_poset_leq(p, 1, 0, &le) == TC_OK && le == 1);
  EXPECT(tc_poset_leq(p, 0, 1, &le) == TC_OK && le == 0);
  EXPECT(tc_poset_leq(p, 0, 9, &le) == TC_ERR_INVALID_ARGUMENT);
  size_t lo = 0, hi = 0;
  EXPECT(tc_poset_cover(p, 0, &lo, &hi) == TC_OK && lo == 1);
  EXPECT(tc_poset_cover(p, 4, &lo, &hi) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(tc_poset_to_dot(p, &s) == TC_OK);
  EXPECT(strstr(s, "digraph") != NULL);
  tc_string_free(s);
  EXPECT(tc_poset_to_json(p, &s) == TC_OK);
  EXPECT(strstr(s, "\"edges\"") != NULL);
  tc_string_free(s);

  tc_homology* h = NULL;
  EXPECT(tc_poset_homology(p, NULL, &h) == TC_OK);
  EXPECT(tc_homology_degree_count(h) == 2);
  EXPECT(tc_homology_betti(h, 0) == 1);
  EXPECT(tc_homology_betti(h, 1) == 1);
  EXPECT(tc_homology_torsion_count(h, 1) == 0);
  EXPECT(tc_homology_euler(h) == 0);
  EXPECT(tc_homology_boundary_csv(h, 1, &s) == TC_OK);
  EXPECT(strncmp(s, "row,col,value\n", 14) == 0);
  tc_string_free(s);
  EXPECT(tc_homology_boundary_csv(h, 7, &s) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(tc_homology_to_json(h, &s) == TC_OK);
  EXPECT(strstr(s, "\"betti\":[1,1]") != NULL);
  tc_string_free(s);
  tc_homology_free(h);

  tc_limits tight = tc_limits_default();
  tight.max_chains = 3;
  EXPECT(tc_poset_homology(p, &tight, &h) == TC_ERR_RESOURCE_LIMIT);
  tight.max_chains = 0;
  EXPECT(tc_poset_homology(p, &tight, &h) == TC_ERR_INVALID_ARGUMENT);
  tc_poset_free(p);

  const char* dup[] = {"a", "a"};
  EXPECT(tc_poset_create(2, dup, 2, NULL, &p) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(tc_poset_create(0, labels, 2, NULL, &p) == TC_ERR_INVALID_ARGUMENT);
}

static void classify(void) {
  char* text = NULL;
  char* json = NULL;
  EXPECT(tc_classify_points("a 0 0\nb 0 1\n", 2, &text, &json) == TC_OK);
  EXPECT(strcmp(text, "a 1 b") == 0);
  EXPECT(strstr(json, "\"word\":[1]") != NULL);
  tc_string_free(text);
  tc_string_free(json);
  EXPECT(tc_classify_points("x 5 5\n", 2, &text, NULL) == TC_OK);
  EXPECT(strcmp(text, "x") == 0);
  tc_string_free(text);
  EXPECT(tc_classify_points("a 0 0\nb 0 0\n", 2, &text, NULL) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(tc_classify_points("a 0 q\n", 2, &text, NULL) == TC_ERR_PARSE);
}

static void verify(void) {
  tc_verify_options o = tc_verify_options_default();
  const char* labels[] = {"a", "b"};
  o.labels = labels;
  o.label_count = 2;
  char* report = NULL;
  int passed = 0;
  EXPECT(tc_verify("poset", &o, &report, &passed) == TC_OK);
  EXPECT(passed == 1);
  EXPECT(strstr(report, "\"suite\": \"poset\"") != NULL);
  tc_string_free(report);
  EXPECT(tc_verify("nonsense", &o, &report, &passed) == TC_ERR_INVALID_ARGUMENT);
  EXPECT(strstr(tc_last_error(), "unknown suite") != NULL);
}

int main(void) {
  EXPECT(strcmp(tc_version(), "0.1.0") == 0);
  EXPECT(strcmp(tc_status_message(TC_ERR_PARSE), "parse error") == 0);
  trees();
  posets();
  classify();
  verify();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("C API: all checks passed\n");
  return 0;
}
