#include <stdio.h>
#include <string.h>

#include "cyclespec.h"

#define CHECK(cond)                                          \
  do {                                                       \
    if (!(cond)) {                                           \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                              \
    }                                                        \
  } while (0)

int main(void) {
  CsGraph *g = NULL;
  CHECK(cs_graph_kneser(5, 2, &g) == CS_STATUS_OK);
  CHECK(cs_graph_vertex_count(g) == 10);

  size_t alpha = 0;
  CHECK(cs_alpha(g, &alpha) == CS_STATUS_OK && alpha == 4);

  int64_t num = 0, den = 0;
  int exact = 0;
  CHECK(cs_iota(g, &num, &den, &exact) == CS_STATUS_OK);
  CHECK(num == 5 && den == 2 && exact == 1);

  char *g6 = NULL;
  CHECK(cs_graph_to_graph6(g, &g6) == CS_STATUS_OK);
  CsGraph *back = NULL;
  CHECK(cs_graph_from_graph6(g6, &back) == CS_STATUS_OK);
  CHECK(cs_graph_edge_count(back) == 15);
  cs_string_free(g6);
  cs_graph_free(back);
  cs_graph_free(g);

  CsGraph *bad = NULL;
  CHECK(cs_graph_from_graph6("D h", &bad) == CS_STATUS_PARSE);
  CHECK(bad == NULL && cs_last_error() != NULL);

  char *out = NULL;
  int code = -1;
  CHECK(cs_run_json("[\"--no-log\", \"bounds\", \"--sequence\", \"primes\", \"--n\", \"100\"]", &out, &code) == CS_STATUS_OK);
  CHECK(code == 0 && out != NULL && strchr(out, '{') != NULL);
  cs_string_free(out);

  puts("ok");
  return 0;
}
