#ifndef LIECOH_LIECOH_H
#define LIECOH_LIECOH_H

/* C interface to liecoh. Every fallible call returns a liecoh_status; on
 * failure a message for the calling thread is available from
 * liecoh_last_error() until the next call on that thread. Strings returned
 * through char** are owned by the caller and released with
 * liecoh_free_string(). */

#include <stddef.h>
#include <stdint.h>

#if defined(LIECOH_BUILDING_LIBRARY)
#define LIECOH_API __attribute__((visibility("default")))
#else
#define LIECOH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum liecoh_status {
  LIECOH_OK = 0,
  LIECOH_ERR_PARSE = 1,
  LIECOH_ERR_INVALID_ARGUMENT = 2,
  LIECOH_ERR_DOMAIN = 3,
  LIECOH_ERR_UNSUPPORTED = 4,
  LIECOH_ERR_TOO_LARGE = 5,
  LIECOH_ERR_INCONSISTENT = 6,
  LIECOH_ERR_IO = 7,
  LIECOH_ERR_INTERNAL = 8
} liecoh_status;

typedef enum liecoh_format {
  LIECOH_FORMAT_TABLE = 0,
  LIECOH_FORMAT_JSON = 1,
  LIECOH_FORMAT_TSV = 2
} liecoh_format;

/* Size guard for cohomology computations. Algebras larger than
 * max_dimension are refused with LIECOH_ERR_TOO_LARGE unless best_effort. */
typedef struct liecoh_limits {
  size_t max_dimension;
  int best_effort;
} liecoh_limits;

typedef struct liecoh_root_system liecoh_root_system;
typedef struct liecoh_algebra liecoh_algebra;
typedef struct liecoh_complex liecoh_complex;
typedef struct liecoh_matrix liecoh_matrix;

LIECOH_API const char* liecoh_version(void);
LIECOH_API const char* liecoh_last_error(void);
LIECOH_API const char* liecoh_status_name(liecoh_status status);
LIECOH_API void liecoh_free_string(char* s);

/* Defaults, honoring LIECOH_MAX_DIM. */
LIECOH_API void liecoh_limits_default(liecoh_limits* out);

LIECOH_API int liecoh_is_prime(uint64_t n);

/* Root systems. `type` is text such as "A2", "D4", "G2". */
LIECOH_API liecoh_status liecoh_root_system_create(const char* type, liecoh_root_system** out);
LIECOH_API void liecoh_root_system_destroy(liecoh_root_system* rs);
LIECOH_API int liecoh_root_system_rank(const liecoh_root_system* rs);
LIECOH_API size_t liecoh_root_system_dimension(const liecoh_root_system* rs);
LIECOH_API int liecoh_root_system_coxeter_number(const liecoh_root_system* rs);
LIECOH_API size_t liecoh_root_system_positive_root_count(const liecoh_root_system* rs);
/* 0-based i, j. */
LIECOH_API liecoh_status liecoh_root_system_cartan_entry(const liecoh_root_system* rs, int i, int j, int* out);
/* Writes min(count, capacity) degrees; *count receives the full count. */
LIECOH_API liecoh_status liecoh_root_system_degrees(const liecoh_root_system* rs, int* buffer, size_t capacity,
                                                    size_t* count);

/* Chevalley basis; modulus 0 for the integral algebra, else a prime. */
LIECOH_API liecoh_status liecoh_algebra_create(const liecoh_root_system* rs, uint32_t modulus,
                                               liecoh_algebra** out);
LIECOH_API void liecoh_algebra_destroy(liecoh_algebra* alg);
LIECOH_API size_t liecoh_algebra_dimension(const liecoh_algebra* alg);
/* Borrowed pointer, valid while the algebra lives; NULL when out of range. */
LIECOH_API const char* liecoh_algebra_label(const liecoh_algebra* alg, size_t index);
LIECOH_API liecoh_status liecoh_algebra_bracket_tsv(const liecoh_algebra* alg, char** out);

/* Chevalley-Eilenberg complex. `domain` is "Q", "Z" or "Fp:<p>"; a reduced
 * algebra needs the matching prime field. `limits` may be NULL. */
LIECOH_API liecoh_status liecoh_complex_create(const liecoh_algebra* alg, const char* domain,
                                               const liecoh_limits* limits, liecoh_complex** out);
LIECOH_API void liecoh_complex_destroy(liecoh_complex* cx);
LIECOH_API size_t liecoh_complex_top_degree(const liecoh_complex* cx);
LIECOH_API size_t liecoh_complex_dimension(const liecoh_complex* cx, size_t degree);
/* Betti numbers over a field, free ranks over Z. */
LIECOH_API liecoh_status liecoh_complex_betti(const liecoh_complex* cx, size_t* buffer, size_t capacity,
                                              size_t* count);

/* Matrix text: a "rows cols" header line, then one "r c value" line per
 * nonzero entry (0-based indices). Lines starting with # are skipped. */
LIECOH_API liecoh_status liecoh_matrix_parse(const char* text, const char* domain, liecoh_matrix** out);
LIECOH_API void liecoh_matrix_destroy(liecoh_matrix* m);
LIECOH_API size_t liecoh_matrix_rows(const liecoh_matrix* m);
LIECOH_API size_t liecoh_matrix_cols(const liecoh_matrix* m);
/* Rank over a field; over Z the number of invariant factors. */
LIECOH_API liecoh_status liecoh_matrix_rank(const liecoh_matrix* m, size_t* out);
/* Invariant factors separated by spaces; Z matrices only. */
LIECOH_API liecoh_status liecoh_matrix_invariant_factors(const liecoh_matrix* m, char** out);

LIECOH_API liecoh_status liecoh_is_bad_root(const char* type, unsigned long order, int* out);

/* Reports. Each renders one command in the requested format into *out and
 * sets *verdict to 1 when every check passed, 0 when something disagreed.
 * `verdict` may be NULL. */
LIECOH_API liecoh_status liecoh_report_degrees(const char* type, liecoh_format fmt, char** out, int* verdict);
LIECOH_API liecoh_status liecoh_report_betti(const char* type, const char* domain, const liecoh_limits* limits,
                                             liecoh_format fmt, char** out, int* verdict);
LIECOH_API liecoh_status liecoh_report_ring(const char* type, const liecoh_limits* limits, liecoh_format fmt,
                                            char** out, int* verdict);
/* `removed` is the 1-based simple root of E to delete. */
LIECOH_API liecoh_status liecoh_report_restrict(const char* e, const char* f, int removed, liecoh_format fmt,
                                                char** out, int* verdict);
LIECOH_API liecoh_status liecoh_report_scan(const char* type, const uint32_t* primes, size_t count,
                                            const liecoh_limits* limits, liecoh_format fmt, char** out,
                                            int* verdict);
LIECOH_API liecoh_status liecoh_report_badroots(const char* type, liecoh_format fmt, char** out, int* verdict);
LIECOH_API liecoh_status liecoh_report_qint(long n, long d, int factor, liecoh_format fmt, char** out,
                                            int* verdict);
LIECOH_API liecoh_status liecoh_report_uct(const char* type, const uint32_t* primes, size_t count,
                                           const liecoh_limits* limits, liecoh_format fmt, char** out,
                                           int* verdict);
LIECOH_API liecoh_status liecoh_report_brackets(const char* type, liecoh_format fmt, char** out, int* verdict);
LIECOH_API liecoh_status liecoh_report_snf(const char* matrix, liecoh_format fmt, char** out, int* verdict);

#ifdef __cplusplus
}
#endif

#endif
