#ifndef QMFREE_QMFREE_H
#define QMFREE_QMFREE_H

/* C interface to libqmfree. Objects are opaque handles released with the
 * matching *_free function; strings returned through `char **` are owned by
 * the caller and released with qmf_string_free. Every call returns a status;
 * on failure qmf_last_error() describes the problem (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(QMFREE_BUILDING)
#define QMF_API __attribute__((visibility("default")))
#else
#define QMF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmf_status {
  QMF_OK = 0,
  QMF_ERR_PARSE = 1,
  QMF_ERR_RANK = 2,
  QMF_ERR_DOMAIN = 3,
  QMF_ERR_NOT_STABILIZED = 4,
  QMF_ERR_UNKNOWN_CHECK = 5,
  QMF_ERR_INVALID_ARG = 6,
  QMF_ERR_INTERNAL = 7
} qmf_status;

typedef struct qmf_word qmf_word;
typedef struct qmf_expr qmf_expr;
typedef struct qmf_map qmf_map;

QMF_API const char *qmf_version(void);
QMF_API const char *qmf_status_name(qmf_status status);
QMF_API const char *qmf_last_error(void);
QMF_API void qmf_string_free(char *s);

/* words */
QMF_API qmf_status qmf_word_parse(int rank, const char *text, qmf_word **out);
QMF_API void qmf_word_free(qmf_word *w);
QMF_API qmf_status qmf_word_to_string(const qmf_word *w, char **out);
QMF_API int qmf_word_rank(const qmf_word *w);
QMF_API size_t qmf_word_length(const qmf_word *w);
QMF_API qmf_status qmf_word_concat(const qmf_word *u, const qmf_word *v, qmf_word **out);
QMF_API qmf_status qmf_word_invert(const qmf_word *w, qmf_word **out);
QMF_API qmf_status qmf_word_power(const qmf_word *w, long long m, qmf_word **out);
/* w = conjugator * core * conjugator^-1 */
QMF_API qmf_status qmf_word_cyclic_reduce(const qmf_word *w, qmf_word **conjugator, qmf_word **core);
/* {"exponents":[...],"letters":"..."} relative to generator number `b` */
QMF_API qmf_status qmf_word_normal_form_json(const qmf_word *w, int b, char **out);
QMF_API qmf_status qmf_word_truncate(const qmf_word *w, int b, qmf_word **out);

/* counting */
QMF_API qmf_status qmf_count(const qmf_word *pattern, const qmf_word *text, int non_overlapping, uint64_t *out);

/* expressions; rationals are exchanged as "p" or "p/q" strings */
QMF_API qmf_status qmf_expr_parse(int rank, const char *text, qmf_expr **out);
QMF_API void qmf_expr_free(qmf_expr *e);
QMF_API qmf_status qmf_expr_to_string(const qmf_expr *e, char **out);
QMF_API qmf_status qmf_eval(const qmf_expr *e, const qmf_word *g, char **out);
QMF_API qmf_status qmf_homogenize(const qmf_expr *e, const qmf_word *g, char **out);
/* samples = 0 scans every pair up to max_len */
QMF_API qmf_status qmf_defect_scan_json(const qmf_expr *e, int max_len, uint64_t samples, uint64_t seed, char **out);

/* Nielsen moves, written "T,P1,I,Tinv" */
QMF_API qmf_status qmf_nielsen_apply(const char *moves, const qmf_word *g, qmf_word **out);
/* {"error_bound":"..","expr":".."} */
QMF_API qmf_status qmf_nielsen_pullback_json(const char *moves, const qmf_expr *e, char **out);

/* independence */
QMF_API qmf_status qmf_overlaps(const qmf_word *u, const qmf_word *v, int *out);
QMF_API qmf_status qmf_is_independent(const qmf_word *const *words, size_t count, int *out);
/* order may be NULL for the default a < A < b < B < ... */
QMF_API qmf_status qmf_grig_enumerate_json(int rank, const char *order, int max_len, char **out);

/* quasimorphisms F_m -> F_n given by map-spec JSON */
QMF_API qmf_status qmf_map_from_json(const char *spec, qmf_map **out);
QMF_API void qmf_map_free(qmf_map *m);
QMF_API qmf_status qmf_map_to_json(const qmf_map *m, char **out);
QMF_API int qmf_map_dom_rank(const qmf_map *m);
QMF_API int qmf_map_cod_rank(const qmf_map *m);
QMF_API qmf_status qmf_map_apply(const qmf_map *m, const qmf_word *g, qmf_word **out);
/* first applies `first`, then `second` */
QMF_API qmf_status qmf_map_compose(const qmf_map *first, const qmf_map *second, qmf_map **out);
QMF_API qmf_status qmf_surjection_preimage(int n, const qmf_word *w, qmf_word **out);

/* verification registry; max_len < 0 selects the check's default */
QMF_API qmf_status qmf_verify_json(const char *id, int rank, int max_len, uint64_t seed, char **out);
QMF_API qmf_status qmf_list_checks_json(char **out);

#ifdef __cplusplus
}
#endif

#endif
