#ifndef QUATORDER_H
#define QUATORDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define QO_API __attribute__((visibility("default")))
#else
#define QO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qo_context qo_context;

/* Values double as CLI exit codes. */
typedef enum {
  QO_OK = 0,
  QO_VERIFY_FAILED = 1,
  QO_INVALID = 2,     /* bad parameters, not a prime, parse errors */
  QO_UNSUPPORTED = 3, /* case mismatch, unsupported or ramified place, exhausted search */
  QO_PRECISION = 4,
  QO_INTERNAL = 5
} qo_status;

typedef enum { QO_FORMAT_JSON = 0, QO_FORMAT_TEXT = 1 } qo_format;

QO_API qo_context* qo_context_new(void);
QO_API void qo_context_free(qo_context* ctx);

/* Message of the last failing call on ctx, or "" */
QO_API const char* qo_last_error(const qo_context* ctx);
/* Error kind of the last failing call, e.g. "PrecisionLoss" */
QO_API const char* qo_last_error_kind(const qo_context* ctx);
QO_API const char* qo_status_name(qo_status status);

QO_API qo_status qo_set_format(qo_context* ctx, qo_format format);
QO_API qo_status qo_set_precision(qo_context* ctx, long digits);
QO_API qo_status qo_set_prime_bound(qo_context* ctx, int64_t bound);
QO_API qo_status qo_set_conic_bound(qo_context* ctx, long bound);
QO_API qo_status qo_set_aux_bound(qo_context* ctx, int64_t bound);
QO_API qo_status qo_set_seed(qo_context* ctx, uint64_t seed);
QO_API qo_status qo_set_threads(qo_context* ctx, unsigned threads);
/* Test hook: take the other square root in the at-p splitting. */
QO_API qo_status qo_set_flip_root_sign(qo_context* ctx, int flip);

/* Each call stores a newly allocated string in *out (free with
   qo_string_free). On failure *out is NULL. */
QO_API qo_status qo_construct(qo_context* ctx, int64_t delta, int64_t level, char** out);
/* place: a prime, "p" for the Hashimoto prime, or "inf" */
QO_API qo_status qo_split(qo_context* ctx, int64_t delta, int64_t level, const char* place, char** out);
QO_API qo_status qo_degeneracy(qo_context* ctx, int64_t delta, int64_t level, const char* q, char** out);
QO_API qo_status qo_psi(qo_context* ctx, int64_t delta, int64_t from, int64_t to, char** out);
QO_API qo_status qo_chain(qo_context* ctx, int64_t delta, const char* q, long depth, char** out);
/* Empty lists give a vacuous report. Returns QO_VERIFY_FAILED when a check fails. */
QO_API qo_status qo_verify(qo_context* ctx, const int64_t* deltas, size_t n_deltas, const int64_t* levels,
                    size_t n_levels, const int64_t* places, size_t n_places, int include_p,
                    int include_inf, char** out);

QO_API void qo_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
