/* schurkit C API: exact combinatorics of Schur-positive sets.
 *
 * All functions that take an sk_engine are safe to call from one thread at a
 * time per engine. JSON and DOT results are heap strings owned by the caller;
 * release them with sk_string_free. On any status other than SK_OK,
 * sk_last_error(engine) holds a human-readable message.
 */
#ifndef SCHURKIT_SCHURKIT_H
#define SCHURKIT_SCHURKIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
  SK_OK = 0,
  SK_ERROR_USAGE = 1,    /* malformed input or a bound was exceeded */
  SK_ERROR_INTERNAL = 2, /* violated internal invariant; report a bug */
  SK_ERROR_NOMEM = 3
} sk_status;

typedef struct sk_engine sk_engine;

sk_engine *sk_engine_new(void);
void sk_engine_free(sk_engine *eng);
const char *sk_last_error(const sk_engine *eng);

/* Bounds used by the command entry points; defaults are 7 and 40. */
sk_status sk_set_max_n(sk_engine *eng, int max_n);
sk_status sk_set_max_k(sk_engine *eng, int max_k);

/* set_spec: sn | conj:<parts> | invk:<k> | imajk:<k> | invdes:<set> |
 * uroot:<d> | caterpillars */
sk_status sk_schur_expand(sk_engine *eng, const char *set_spec, int n, char **json_out);

/* family: invk | invdes | powerset | interval | chain | conj | uroot;
 * params_json example: {"k":5,"n":7} */
sk_status sk_cde_check(sk_engine *eng, const char *family, const char *params_json,
                       char **json_out);

/* suite: caterpillar | qsym | cde | pentagonal | unimodal | all.
 * failures_out (optional) receives the number of failed checks. */
sk_status sk_verify(sk_engine *eng, const char *suite, int *failures_out, char **json_out);

/* tree_json: {"edges":[[a,b],...],"n":n} */
sk_status sk_tree_dot(sk_engine *eng, const char *tree_json, char **dot_out);

/* Scalar helpers. */
sk_status sk_caterpillar_count(sk_engine *eng, int n, long long *out);
sk_status sk_gannon_count(sk_engine *eng, int n, int m, long long *out);
sk_status sk_is_generalized_pentagonal(sk_engine *eng, long long k, int *out);

void sk_string_free(char *s);
const char *sk_status_name(sk_status s);

#ifdef __cplusplus
}
#endif

#endif
