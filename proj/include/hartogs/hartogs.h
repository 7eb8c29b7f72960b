/*
 * C interface to the hartogs engine: deciders, constructors, evaluators and
 * verification sweeps for proper holomorphic maps between generalized Hartogs
 * triangles and complex ellipsoids.
 *
 * All functions taking an htg_context report failures through the returned
 * status code; htg_last_error() carries the message of the most recent
 * failure on that context. Strings returned through char** are heap
 * allocated and must be released with htg_string_free().
 *
 * Descriptors cross this boundary as JSON:
 *   domain   {"p":["2","3/2*L"], "q":["1"]}    exponents "a", "a/b", "a/b*L"
 *   map      tagged by "case": "11" | "1m" | "n1" | "nm"
 *   aut      tagged by "regime", same tags
 * Points are passed as flat double arrays re0, im0, re1, im1, ... of length
 * 2*(n+m), z coordinates first.
 */

#ifndef HARTOGS_H
#define HARTOGS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum htg_status {
    HTG_OK = 0,
    HTG_ERR_PARSE = 2,          /* malformed JSON or descriptor */
    HTG_ERR_NO_PROPER_MAP = 3,  /* the existence decider said no */
    HTG_ERR_DIMENSION = 4,      /* non-equidimensional input */
    HTG_ERR_DOMAIN = 5,         /* point outside, pole, off-K, bad center */
    HTG_ERR_INVALID = 6,        /* descriptor violates a form constraint */
    HTG_ERR_VERIFY_FAILED = 7,  /* a verification property failed */
    HTG_ERR_INTERNAL = 8
} htg_status;

const char* htg_status_name(htg_status s);

typedef struct htg_context htg_context;
typedef struct htg_domain htg_domain;
typedef struct htg_map htg_map; /* proper map or automorphism */

/* ---- context ------------------------------------------------------- */

htg_context* htg_context_new(void);
void htg_context_free(htg_context* ctx);

void htg_context_set_tolerance(htg_context* ctx, double tol);
void htg_context_set_lambda(htg_context* ctx, double lambda);
void htg_context_set_seed(htg_context* ctx, uint64_t seed);
double htg_context_tolerance(const htg_context* ctx);
double htg_context_lambda(const htg_context* ctx);
uint64_t htg_context_seed(const htg_context* ctx);

const char* htg_last_error(const htg_context* ctx);

void htg_string_free(char* s);

/* ---- domains ------------------------------------------------------- */

htg_status htg_domain_parse(htg_context* ctx, const char* json, htg_domain** out);
void htg_domain_free(htg_domain* d);
htg_status htg_domain_to_json(htg_context* ctx, const htg_domain* d, char** out);
int htg_domain_dim_z(const htg_domain* d);
int htg_domain_dim_w(const htg_domain* d);

/* Verdict written as a static string: interior, on_k, on_l, origin, outside. */
htg_status htg_membership(htg_context* ctx, const htg_domain* d, const double* coords,
                          const char** verdict);

/* ---- existence and construction ------------------------------------ */

htg_status htg_exists(htg_context* ctx, const htg_domain* src, const htg_domain* dst,
                      char** witness_json);

htg_status htg_construct(htg_context* ctx, const htg_domain* src, const htg_domain* dst,
                         htg_map** out);

htg_status htg_map_parse(htg_context* ctx, const char* json, htg_map** out);
htg_status htg_map_to_json(htg_context* ctx, const htg_map* m, char** out);
void htg_map_free(htg_map* m);

int htg_map_dim_z(const htg_map* m);
int htg_map_dim_w(const htg_map* m);

/* HTG_OK when the descriptor satisfies every form constraint; otherwise
 * HTG_ERR_INVALID with report_json = {"ok":false,"violations":[...]}. */
htg_status htg_map_validate(htg_context* ctx, const htg_map* m, char** report_json);

htg_status htg_map_eval(htg_context* ctx, const htg_map* m, const double* in, double* out);

/* ---- automorphisms -------------------------------------------------- */

htg_status htg_aut_family(htg_context* ctx, const htg_domain* d, char** family_json);
htg_status htg_aut_sample(htg_context* ctx, const htg_domain* d, uint64_t seed, htg_map** out);

/* ---- verification ---------------------------------------------------- */

/* Suites: "all", "interior", "boundary", "holomorphy", "ray". Reports are
 * emitted as JSON lines. all_pass receives 1/0; a failing property makes the
 * call return HTG_ERR_VERIFY_FAILED (reports are still produced). */
htg_status htg_verify(htg_context* ctx, const htg_map* m, const char* suite, size_t samples,
                      char** reports_jsonl, int* all_pass);

/* Restricted Levi identity at a K boundary point of a triangle with m = 1.
 * p_json: exponent array, q: exponent string, point: 2*(n+1) doubles,
 * tangent_x: 2*n doubles. */
htg_status htg_levi(htg_context* ctx, const char* p_json, const char* q, const double* point,
                    const double* tangent_x, double* lhs, double* rhs);

/* ---- rigidity -------------------------------------------------------- */

htg_status htg_is_rigid(htg_context* ctx, const htg_domain* d, int* rigid);

/* Non-injective proper self-map witness; HTG_ERR_NO_PROPER_MAP when the
 * characterized family contains none. */
htg_status htg_degree_witness(htg_context* ctx, const htg_domain* d, htg_map** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HARTOGS_H */
