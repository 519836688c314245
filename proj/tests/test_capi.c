/* Drives the shared library through its C interface only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "galrep/galrep.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static galrep_fixture* load(const char* name) {
  char path[1024];
  galrep_fixture* fx = NULL;
  snprintf(path, sizeof path, "%s/%s", GALREP_FIXTURE_DIR, name);
  EXPECT(galrep_fixture_load(path, &fx) == GALREP_OK);
  return fx;
}

int main(void) {
  galrep_fixture* s3 = load("s3_q5.fix");
  galrep_options* opt = galrep_options_new();
  galrep_options_add_rep(opt, "rho2");
  const char* words[] = {"conductor"};
  char* out = NULL;
  EXPECT(galrep_run(s3, words, 1, opt, &out) == GALREP_OK);
  EXPECT(out && strcmp(out, "tame=2 wild=0 total=2 swan_check=ok\n") == 0);
  EXPECT(strcmp(galrep_last_error(), "") == 0);
  galrep_string_free(out);
  galrep_options_free(opt);

  char* text = NULL;
  EXPECT(galrep_fixture_serialize(s3, &text) == GALREP_OK);
  galrep_fixture* again = NULL;
  EXPECT(galrep_fixture_parse(text, &again) == GALREP_OK);
  EXPECT(galrep_fixture_equal(s3, again) == 1);
  galrep_string_free(text);
  galrep_fixture_free(again);

  galrep_fixture* chi3 = load("chi3.fix");
  EXPECT(galrep_fixture_equal(s3, chi3) == 0);
  opt = galrep_options_new();
  galrep_options_set_limit(opt, 5);
  const char* lseries[] = {"lseries"};
  EXPECT(galrep_run(chi3, lseries, 1, opt, &out) == GALREP_OK);
  EXPECT(out && strcmp(out, "1,-1,0,1,-1\n") == 0);
  galrep_string_free(out);
  galrep_options_free(opt);

  galrep_fixture* d10 = load("d10_quintic.fix");
  opt = galrep_options_new();
  galrep_options_set_prime(opt, 7);
  const char* frob[] = {"frobenius"};
  EXPECT(galrep_run(d10, frob, 1, opt, &out) == GALREP_ERR_AMBIGUITY);
  EXPECT(strstr(galrep_last_error(), "7") != NULL);
  galrep_string_free(out);
  galrep_options_free(opt);

  galrep_fixture* none = NULL;
  EXPECT(galrep_fixture_load("/nonexistent/fixture.fix", &none) == GALREP_ERR_IO);
  EXPECT(none == NULL);
  EXPECT(galrep_fixture_parse("[group]\ndegree = x\n", &none) == GALREP_ERR_VALIDATION);
  EXPECT(strstr(galrep_last_error(), "line 2") != NULL);
  const char* wd[] = {"wd", "poly"};
  EXPECT(galrep_run(s3, wd, 2, NULL, &out) == GALREP_ERR_VALIDATION);
  galrep_string_free(out);

  galrep_fixture_free(s3);
  galrep_fixture_free(chi3);
  galrep_fixture_free(d10);
  if (failures == 0) printf("C API checks passed\n");
  return failures == 0 ? 0 : 1;
}
