#ifndef DEBRUIJN_H
#define DEBRUIJN_H

/* C interface to the de Bruijn term library.
 *
 * Functions that can fail return a dbj_status; on failure dbj_last_error()
 * describes the problem for the calling thread. Strings returned through
 * char** out-parameters belong to the caller and are released with
 * dbj_string_free. Handles are released with their matching _free function.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(DBJ_BUILDING_LIBRARY)
#define DBJ_API __attribute__((visibility("default")))
#else
#define DBJ_API
#endif

typedef enum dbj_status {
  DBJ_OK = 0,
  DBJ_ERR_USAGE = 1,         /* bad argument, unknown name, out-of-domain input */
  DBJ_ERR_PARSE = 2,         /* malformed term, tree or table text */
  DBJ_ERR_UNSATISFIABLE = 3, /* empty class, cap exceeded, trial budget exhausted */
  DBJ_ERR_VERIFY = 4,        /* a verification property failed */
  DBJ_ERR_INTERNAL = 5
} dbj_status;

DBJ_API const char* dbj_version(void);
/* Message of the last failure on this thread ("" if none). */
DBJ_API const char* dbj_last_error(void);
/* Byte offset of the last parse failure on this thread, or -1. */
DBJ_API int64_t dbj_last_error_offset(void);
DBJ_API void dbj_string_free(char* s);

/* ---- terms ---------------------------------------------------------------- */

typedef struct dbj_term dbj_term;

DBJ_API dbj_status dbj_term_parse(const char* text, dbj_term** out);
DBJ_API void dbj_term_free(dbj_term* t);
DBJ_API dbj_status dbj_term_print(const dbj_term* t, char** out);
/* model: natural, A, B, C or "abs,app,succ,zero". */
DBJ_API dbj_status dbj_term_size(const dbj_term* t, const char* model, uint64_t* out);
/* cls: plain, nf, neutral, hnf, nhnf, closed, m-open:<m>. */
DBJ_API dbj_status dbj_term_in_class(const dbj_term* t, const char* cls, int* out);
DBJ_API dbj_status dbj_term_contains(const dbj_term* t, const dbj_term* pattern, int* out);
/* Rejects weight vectors that admit infinitely many terms of one size. */
DBJ_API dbj_status dbj_model_check(const char* model);

/* ---- counting ------------------------------------------------------------- */

typedef struct dbj_count_table dbj_count_table;

/* cls: plain, nf, neutral, hnf, nhnf, m-open (param m), containing (param p),
 * motzkin. Models other than natural are accepted for plain only. */
DBJ_API dbj_status dbj_count_table_build(const char* cls, const char* model, uint64_t param, uint64_t n_max,
                                         dbj_count_table** out);
/* Terms containing the given non-index subterm. */
DBJ_API dbj_status dbj_count_table_containing(const dbj_term* subterm, uint64_t n_max, dbj_count_table** out);
/* Plain counts by one route: convolution, holonomic or explicit (n >= 1; entry 0 is 0). */
DBJ_API dbj_status dbj_count_table_plain_route(const char* route, uint64_t n_max, dbj_count_table** out);
DBJ_API dbj_status dbj_count_table_load(const char* path, dbj_count_table** out);
DBJ_API dbj_status dbj_count_table_save(const dbj_count_table* t, const char* path);
DBJ_API void dbj_count_table_free(dbj_count_table* t);
DBJ_API uint64_t dbj_count_table_max_size(const dbj_count_table* t);
/* Decimal text of entry n. */
DBJ_API dbj_status dbj_count_table_get(const dbj_count_table* t, uint64_t n, char** out);
/* "class[:param] model", the table's identity as written in its header. */
DBJ_API dbj_status dbj_count_table_describe(const dbj_count_table* t, char** out);

/* ---- enumeration and conversion ------------------------------------------ */

/* Return nonzero to stop the stream. */
typedef int (*dbj_text_sink)(void* ctx, const char* text);

/* family: a term class (see dbj_term_in_class), or bw, bw-white, bz, motzkin.
 * model applies to term classes only (NULL: natural). cap is the largest
 * natural-model size whose universe may be enumerated (0: 14). */
DBJ_API dbj_status dbj_enumerate(const char* family, uint64_t n, const char* model, uint64_t cap, dbj_text_sink sink,
                                 void* ctx);

/* map: lam-to-bw, bw-to-lam, bw-to-bz, bz-to-bw, lam-to-bz, bz-to-lam,
 * motzkin-to-neutral, neutral-to-motzkin, nhnf-to-plain, plain-to-nhnf. */
DBJ_API dbj_status dbj_convert(const char* map, const char* in, char** out);

/* ---- sampling ------------------------------------------------------------- */

typedef struct dbj_sampler dbj_sampler;

typedef struct dbj_sample_info {
  uint64_t size;
  uint64_t trials;
  uint64_t seed;
  double elapsed_seconds;
} dbj_sample_info;

/* cls: plain, nf, neutral, motzkin (exact size) or closed, hnf, nhnf
 * (rejection from plain). stream selects an independent generator stream
 * for the same seed. max_trials 0 means 50 times the expected count. */
DBJ_API dbj_status dbj_sampler_new(const char* cls, uint64_t n, uint64_t seed, uint64_t stream, uint64_t max_trials,
                                   dbj_sampler** out);
DBJ_API dbj_status dbj_sampler_draw(dbj_sampler* s, char** text, dbj_sample_info* info);
DBJ_API void dbj_sampler_free(dbj_sampler* s);
/* Exact mean number of plain draws per accepted term (1 for exact samplers). */
DBJ_API dbj_status dbj_expected_trials(const char* cls, uint64_t n, double* out);

/* ---- asymptotics ---------------------------------------------------------- */

/* name: rho, growth, q-at-rho, C, C_H, density-nhnf, density-hnf,
 * closed-lower, closed-upper, rho-model-c, growth-model-c. */
DBJ_API dbj_status dbj_constant(const char* name, long double* out);
/* what: plain-constant, hnf-constant (exp(ln a_n + n ln rho + 1.5 ln n)),
 * growth-ratio, or the exact ratio class/plain for nf, neutral, hnf, nhnf,
 * closed, m-open (param m), containing (param p). */
DBJ_API dbj_status dbj_empirical(const char* what, uint64_t n, uint64_t param, double* out);
/* Exact share of size-n terms containing a non-index subterm. */
DBJ_API dbj_status dbj_empirical_containing(const dbj_term* subterm, uint64_t n, double* out);

/* ---- verification --------------------------------------------------------- */

typedef struct dbj_property_result {
  const char* module;
  const char* name;
  int passed;
  const char* witness;
  double seconds;
} dbj_property_result;

typedef void (*dbj_property_sink)(void* ctx, const dbj_property_result* r);

/* module NULL or "" runs every module; max_size 0 means 11. Returns
 * DBJ_ERR_VERIFY if any property failed. */
DBJ_API dbj_status dbj_verify(const char* module, uint64_t max_size, dbj_property_sink sink, void* ctx);

#ifdef __cplusplus
}
#endif

#endif
