#include <math.h>
#include <stdio.h>
#include <string.h>

#include "sesquivalent.h"

#define CHECK(cond)                                          \
  do {                                                       \
    if (!(cond)) {                                           \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                              \
    }                                                        \
  } while (0)

int main(void) {
  SesqGraph *g = NULL;
  CHECK(sesq_graph_parse("0 1\n1 2\n0 2\n", &g) == SESQ_STATUS_OK);
  CHECK(sesq_graph_vertex_count(g) == 3);
  CHECK(sesq_graph_girth(g) == 3);

  SesqComplex x = {2, 0}, y = {-1, 0}, z = {-2, 0}, v;
  CHECK(sesq_phi_eval(g, x, y, z, 16, &v) == SESQ_STATUS_OK);
  CHECK(fabs(v.re) < 1e-12 && fabs(v.im) < 1e-12);

  char *json = NULL;
  CHECK(sesq_phi_polynomial_json(g, 16, &json) == SESQ_STATUS_OK);
  CHECK(strstr(json, "\"n\":3") != NULL);
  sesq_string_free(json);

  SesqRegionCertificate cert;
  SesqComplex x20 = {20, 0}, z01 = {0.1, 0};
  CHECK(sesq_certify_region(3, log(2.0), x20, y, z01, 0, &cert) == SESQ_STATUS_OK);
  CHECK(cert.inside && cert.failed == SESQ_FAILED_CONDITION_NONE);

  SesqApproximation approx;
  CHECK(sesq_approximate(g, x20, y, z01, log(2.0), 0.01, 3, 0, &approx) == SESQ_STATUS_OK);
  CHECK(sesq_phi_eval(g, x20, y, z01, 16, &v) == SESQ_STATUS_OK);
  CHECK(fabs(approx.phi_hat.re / v.re - 1.0) < 0.011);

  SesqGraph *bad = NULL;
  CHECK(sesq_graph_parse("0 1\n1 x\n", &bad) == SESQ_STATUS_PARSE);
  CHECK(bad == NULL);
  CHECK(strstr(sesq_last_error(), "line 2") != NULL);

  sesq_graph_free(g);
  puts("ok");
  return 0;
}
