/* Plain C consumer of the public header. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "gnorm/gnorm.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static void test_subjects(void) {
  gnorm_subject* k4 = NULL;
  EXPECT(gnorm_subject_from_graph6("C~", &k4) == GNORM_OK);
  EXPECT(gnorm_subject_is_graph(k4) == 1);

  size_t rows = 0, cols = 0;
  EXPECT(gnorm_subject_dims(k4, &rows, &cols) == GNORM_OK && rows == 4 && cols == 4);

  double sigma[2];
  size_t count = 0;
  EXPECT(gnorm_singular_values(k4, sigma, 2, &count) == GNORM_OK);
  EXPECT(count == 4);
  EXPECT(fabs(sigma[0] - 3.0) < 1e-12 && fabs(sigma[1] - 1.0) < 1e-12);

  double energy = 0, f4 = 0;
  EXPECT(gnorm_schatten(k4, 1.0, &energy) == GNORM_OK && fabs(energy - 6.0) < 1e-12);
  EXPECT(gnorm_kyfan(k4, 4, &f4) == GNORM_OK && fabs(f4 - 6.0) < 1e-9);
  EXPECT(gnorm_schatten(k4, 0.5, &energy) == GNORM_E_INVALID_ARGUMENT);
  EXPECT(strlen(gnorm_last_error()) > 0);

  gnorm_params params = {0, 0, 0, 0, 1, 4};
  gnorm_check_result r;
  EXPECT(gnorm_check_bound(k4, "KYFAN_01", &params, 1.0, &r) == GNORM_OK);
  EXPECT(r.holds && r.equality && r.has_witness && r.witness_verdict);
  EXPECT(gnorm_check_bound(k4, "NOPE", &params, 1.0, &r) == GNORM_E_UNKNOWN_BOUND_ID);
  EXPECT(strcmp(gnorm_status_name(GNORM_E_UNKNOWN_BOUND_ID), "UnknownBoundId") == 0);
  gnorm_subject_free(k4);

  const double re[4] = {1, 2, 3, 4}, im[4] = {0, 1, 0, -1};
  gnorm_subject* m = NULL;
  EXPECT(gnorm_subject_from_matrix(2, 2, re, im, &m) == GNORM_OK);
  EXPECT(gnorm_subject_is_graph(m) == 0);
  gnorm_subject_free(m);

  gnorm_subject* bad = NULL;
  const char ragged[] = "1,2\n3\n";
  EXPECT(gnorm_subject_load(ragged, sizeof ragged - 1, &bad) == GNORM_E_RAGGED_ROWS);
  EXPECT(bad == NULL);
  EXPECT(gnorm_subject_from_graph6("A", &bad) == GNORM_E_MALFORMED_GRAPH6);
  gnorm_subject_free(NULL);
}

static void test_reports(void) {
  gnorm_text* t = NULL;
  EXPECT(gnorm_report_search("XI_K", 4, &(double){4.0}, 0, 1, GNORM_FORMAT_JSON, &t) == GNORM_OK);
  EXPECT(strstr(gnorm_text_data(t), "\"C~\"") != NULL);
  EXPECT(gnorm_text_size(t) == strlen(gnorm_text_data(t)));
  gnorm_text_free(t);

  t = NULL;
  EXPECT(gnorm_report_search("BOGUS", 4, NULL, 0, 1, GNORM_FORMAT_JSON, &t) == GNORM_E_INVALID_ARGUMENT);

  uint64_t violations = 99;
  t = NULL;
  EXPECT(gnorm_report_sweep(4, NULL, 0, NULL, 0, NULL, 0, 0, 1, 1.0, GNORM_FORMAT_TEXT, &violations, &t) ==
         GNORM_OK);
  EXPECT(violations == 0);
  gnorm_text_free(t);

  const double band[2] = {0.5, 1.5};
  int within = 0;
  t = NULL;
  EXPECT(gnorm_report_random(30, 1.0, 2, 7, 1, band, GNORM_FORMAT_JSON, &within, &t) == GNORM_OK);
  EXPECT(within == 1);
  gnorm_text_free(t);

  t = NULL;
  const double dft[1] = {4};
  EXPECT(gnorm_report_construct("dft", dft, 1, NULL, GNORM_FORMAT_CSV, &t) == GNORM_OK);
  gnorm_text_free(t);

  EXPECT(gnorm_bound_count() == 20);
  EXPECT(strcmp(gnorm_bound_id(0), "MCCLELLAND") == 0);
  EXPECT(gnorm_bound_id(1000) == NULL);
  EXPECT(strlen(gnorm_version()) > 0);
}

int main(void) {
  test_subjects();
  test_reports();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  puts("capi smoke ok");
  return 0;
}
