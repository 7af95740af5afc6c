/* C interface to the gnorm library. All functions are safe to call from
 * several threads on distinct handles; a handle is immutable once created.
 * Failing calls return a status and leave a message retrievable with
 * gnorm_last_error() on the calling thread. */
#ifndef GNORM_H
#define GNORM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(GNORM_BUILDING_LIBRARY)
#define GNORM_API __attribute__((visibility("default")))
#else
#define GNORM_API
#endif

typedef enum gnorm_status {
  GNORM_OK = 0,
  GNORM_E_INVALID_ARGUMENT = 1,
  GNORM_E_NOT_HERMITIAN = 2,
  GNORM_E_NO_CONVERGENCE = 3,
  GNORM_E_NON_REAL_RAYLEIGH = 4,
  GNORM_E_LOOP_EDGE = 5,
  GNORM_E_VERTEX_OUT_OF_RANGE = 6,
  GNORM_E_MALFORMED_GRAPH6 = 7,
  GNORM_E_BAD_FAMILY_PARAMS = 8,
  GNORM_E_TOO_LARGE_FOR_EXACT = 9,
  GNORM_E_OVERFLOW_RISK = 10,
  GNORM_E_NOT_POWER_OF_TWO = 11,
  GNORM_E_SIZE_OVERFLOW = 12,
  GNORM_E_NOT_ZERO_ONE = 13,
  GNORM_E_PRECONDITION_FAILED = 14,
  GNORM_E_UNKNOWN_BOUND_ID = 15,
  GNORM_E_DOMAIN_ERROR = 16,
  GNORM_E_TOO_LARGE = 17,
  GNORM_E_RAGGED_ROWS = 18,
  GNORM_E_BAD_COMPLEX_LITERAL = 19,
  GNORM_E_DIMENSION_MISMATCH = 20,
  GNORM_E_INTERNAL = 100
} gnorm_status;

typedef enum gnorm_format {
  GNORM_FORMAT_TEXT = 0,
  GNORM_FORMAT_JSON = 1,
  GNORM_FORMAT_CSV = 2
} gnorm_format;

typedef struct gnorm_subject gnorm_subject;
typedef struct gnorm_text gnorm_text;

GNORM_API const char* gnorm_version(void);
/* "InvalidArgument", "RaggedRows", ...; "Ok" for GNORM_OK. */
GNORM_API const char* gnorm_status_name(gnorm_status status);
/* Message of the last failure on this thread; "" when none. */
GNORM_API const char* gnorm_last_error(void);

/* Owned output text. */
GNORM_API const char* gnorm_text_data(const gnorm_text* text);
GNORM_API size_t gnorm_text_size(const gnorm_text* text);
GNORM_API void gnorm_text_free(gnorm_text* text);

/* Input auto-detection: graph6, edge list or CSV matrix. */
GNORM_API gnorm_status gnorm_subject_load(const char* text, size_t size, gnorm_subject** out);
GNORM_API gnorm_status gnorm_subject_from_graph6(const char* graph6, gnorm_subject** out);
/* Row-major entries; `imag` may be NULL for a real matrix. */
GNORM_API gnorm_status gnorm_subject_from_matrix(size_t rows, size_t cols, const double* real,
                                                 const double* imag, gnorm_subject** out);
GNORM_API void gnorm_subject_free(gnorm_subject* subject);

GNORM_API int gnorm_subject_is_graph(const gnorm_subject* subject);
GNORM_API gnorm_status gnorm_subject_dims(const gnorm_subject* subject, size_t* rows, size_t* cols);
/* Writes min(cap, count) values; *count receives the full count. */
GNORM_API gnorm_status gnorm_singular_values(const gnorm_subject* subject, double* values,
                                             size_t cap, size_t* count);
GNORM_API gnorm_status gnorm_schatten(const gnorm_subject* subject, double p, double* out);
GNORM_API gnorm_status gnorm_kyfan(const gnorm_subject* subject, int k, double* out);

typedef struct gnorm_params {
  int has_p;
  double p;
  int has_q;
  double q;
  int has_k;
  int k;
} gnorm_params;

typedef struct gnorm_check_result {
  double lhs;
  double rhs;
  double slack;
  double tol;
  int holds;
  int equality;
  int has_witness;
  int witness_verdict;
} gnorm_check_result;

/* GNORM_E_PRECONDITION_FAILED when the row does not apply to the subject. */
GNORM_API gnorm_status gnorm_check_bound(const gnorm_subject* subject, const char* bound_id,
                                         const gnorm_params* params, double tol_scale,
                                         gnorm_check_result* out);

/* Number of registry rows and the id of row i (static storage). */
GNORM_API size_t gnorm_bound_count(void);
GNORM_API const char* gnorm_bound_id(size_t index);

/* Reports. Each returns rendered output in *out; threads = 0 means all
 * available cores. Output never depends on the thread count. */
GNORM_API gnorm_status gnorm_report_norms(const gnorm_subject* subject, const double* ps, size_t np,
                                          const int* ks, size_t nk, gnorm_format format,
                                          gnorm_text** out);
/* nids = 0 runs the whole registry. *all_hold is 1 iff every evaluated row holds. */
GNORM_API gnorm_status gnorm_report_check(const gnorm_subject* subject, const char* const* bound_ids,
                                          size_t nids, const gnorm_params* params, double tol_scale,
                                          gnorm_format format, int* all_hold, gnorm_text** out);
/* np/nk/nq = 0 selects the defaults: p in {1, 1.5, 2, 3}, k in {1, 2, 3}, q = p list. */
GNORM_API gnorm_status gnorm_report_sweep(int n, const double* ps, size_t np, const int* ks,
                                          size_t nk, const double* qs, size_t nq, int canonical,
                                          unsigned threads, double tol_scale, gnorm_format format,
                                          uint64_t* violations, gnorm_text** out);
/* band may be NULL or point at {lo, hi} for the normalized mean; *within_band
 * is 1 when no band is given. */
GNORM_API gnorm_status gnorm_report_random(int n, double p, int samples, uint64_t seed,
                                           unsigned threads, const double* band,
                                           gnorm_format format, int* within_band, gnorm_text** out);
/* param may be NULL when the objective takes none. */
GNORM_API gnorm_status gnorm_report_search(const char* objective, int n, const double* param,
                                           int canonical, unsigned threads, gnorm_format format,
                                           gnorm_text** out);
GNORM_API gnorm_status gnorm_report_spread_comparison(int n, int canonical, unsigned threads,
                                                      gnorm_format format, gnorm_text** out);
/* Graph families: complete, empty, multipartite, matching, cycle, path,
 * paley, star; blowup t and isolated t act on base_graph6. Matrix families:
 * dft n, hadamard n, ones m n, dftrows n r1 r2 ..., complement (J - 2A of
 * base_graph6). */
GNORM_API gnorm_status gnorm_report_construct(const char* family, const double* params,
                                              size_t nparams, const char* base_graph6,
                                              gnorm_format format, gnorm_text** out);
GNORM_API gnorm_status gnorm_report_error(gnorm_status status, const char* message,
                                          gnorm_format format, gnorm_text** out);

#ifdef __cplusplus
}
#endif

#endif
