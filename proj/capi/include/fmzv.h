#ifndef FMZV_H
#define FMZV_H

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes returned by every fallible entry point. */
#define FMZV_OK 0
#define FMZV_ERR_USAGE 1         /* bad arguments to an API call */
#define FMZV_ERR_NOT_PRIME 2     /* modulus rejected, witness in the message */
#define FMZV_ERR_PARSE 3         /* malformed index string */
#define FMZV_ERR_DOMAIN 4        /* input outside the supported range */
#define FMZV_ERR_IO 5            /* file could not be read or written */
#define FMZV_ERR_VERIFY_FAILED 6 /* suite ran and at least one check failed */
#define FMZV_ERR_INTERNAL 7      /* unexpected failure */

const char* fmzv_version(void);

/* Message for the most recent error on this thread; never NULL. */
const char* fmzv_last_error(void);

/* Frees any string returned through a char** out parameter. */
void fmzv_free_string(char* s);

typedef struct fmzv_prime_ctx fmzv_prime_ctx;
typedef struct fmzv_suite fmzv_suite;

int fmzv_prime_ctx_new(unsigned long p, fmzv_prime_ctx** out);
void fmzv_prime_ctx_free(fmzv_prime_ctx* ctx);

/* Interpolated value of the index ("1,2" style, strictly positive parts) as
 * JSON {"p": .., "index": [..], "tcoeffs": [c0, c1, ..]} with coefficients of
 * the t-polynomial mod p, trailing zeros trimmed. */
int fmzv_eval_tpoly_json(fmzv_prime_ctx* ctx, const char* index_csv,
                         char** out_json);

/* Scalar truncated sum: strict inequalities when star == 0, weak when
 * star != 0. */
int fmzv_eval_scalar(fmzv_prime_ctx* ctx, const char* index_csv, int star,
                     unsigned long* out_value);

/* JSON array of {"id", "kind", "statement"} describing every verifiable
 * statement, in the order "all" expands to. */
int fmzv_registry_json(char** out_json);

int fmzv_suite_new(fmzv_suite** out);
void fmzv_suite_free(fmzv_suite* s);

/* Adds one theorem id to the run; "all" expands to the full registry. */
int fmzv_suite_add_id(fmzv_suite* s, const char* id);

/* Adjusts one enumeration bound ("max-weight", "max-depth", "pair-weight",
 * "word-weight", "deriv-max-order", "bb-lm", "bb-parts", "sym-cyclic-weight",
 * "sym-section4-weight", "sym-word-weight", "sym-pair-weight"). */
int fmzv_suite_set_bound(fmzv_suite* s, const char* name, int value);

int fmzv_suite_set_primes(fmzv_suite* s, unsigned long lo, unsigned long hi);
int fmzv_suite_set_jobs(fmzv_suite* s, int jobs);
int fmzv_suite_set_cache_dir(fmzv_suite* s, const char* dir);

/* Runs every instance.  FMZV_OK when all checks pass, FMZV_ERR_VERIFY_FAILED
 * when the suite ran but some instance failed; the report remains available
 * in both cases. */
int fmzv_suite_run(fmzv_suite* s);

/* Report of the last run; format is "json" or "csv". */
int fmzv_suite_report(fmzv_suite* s, const char* format, char** out_report);

/* Counters from the last run: "pass", "fail", "skipped" count instances,
 * "prime-skips" counts per-prime denominator skips. */
int fmzv_suite_count(fmzv_suite* s, const char* status, long* out_count);

#ifdef __cplusplus
}
#endif

#endif /* FMZV_H */
