/*
 * entropia - exact algebraic entropy for finitely representable locally
 * compact group models (finite Cayley tables, two-tailed shift groups,
 * p-adic level lattices).
 *
 * C interface over the C++ core: opaque handles, status codes, and JSON
 * strings for structured data.  Every returned string must be released
 * with entropia_string_free; every handle with its matching _destroy.
 * Handles are immutable and safe to share across threads; the last-error
 * message is thread local.
 */

#ifndef ENTROPIA_H
#define ENTROPIA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entropia_status {
    ENTROPIA_OK = 0,
    ENTROPIA_ERR_INVALID_ARGUMENT,
    ENTROPIA_ERR_PARSE,
    ENTROPIA_ERR_INCOMPATIBLE_MODELS,
    ENTROPIA_ERR_NOT_REPRESENTABLE,
    ENTROPIA_ERR_NOT_CONTAINED,
    ENTROPIA_ERR_NOT_A_GROUP,
    ENTROPIA_ERR_NOT_NORMAL,
    ENTROPIA_ERR_NOT_INVARIANT,
    ENTROPIA_ERR_NOT_AUTOMORPHISM,
    ENTROPIA_ERR_NOT_ABELIAN,
    ENTROPIA_ERR_NOT_CONSTANT_PATTERN,
    ENTROPIA_ERR_NOT_STABLE,
    ENTROPIA_ERR_QUOTIENT_NOT_REPRESENTABLE,
    ENTROPIA_ERR_HYPOTHESIS_FAILED,
    ENTROPIA_ERR_PRECONDITION_FAILED,
    ENTROPIA_ERR_ITERATION_BUDGET_EXCEEDED,
    ENTROPIA_ERR_TOO_LARGE,
    ENTROPIA_ERR_ZERO_MULTIPLIER,
    ENTROPIA_ERR_UNKNOWN
} entropia_status;

typedef struct entropia_model entropia_model;
typedef struct entropia_subgroup entropia_subgroup;
typedef struct entropia_endo entropia_endo;
typedef struct entropia_value entropia_value;

const char* entropia_status_name(entropia_status status);

/* Message for the most recent failure on this thread; empty on success. */
const char* entropia_last_error(void);

void entropia_string_free(char* s);

/* --- models ------------------------------------------------------- */

/* spec_json: {"kind":"finite","group":{"cyclic":6}} |
 *            {"kind":"shift","coefficient":{...},"orientation":"left-compact"} |
 *            {"kind":"padic","p":3} |
 *            {"kind":"product","factors":[...,...]} */
entropia_status entropia_model_create(const char* spec_json, entropia_model** out);
void entropia_model_destroy(entropia_model* model);
entropia_status entropia_model_describe(const entropia_model* model, char** out);

/* --- subgroups ----------------------------------------------------- */

entropia_status entropia_subgroup_create(const entropia_model* model, const char* spec_json,
                                         entropia_subgroup** out);
entropia_status entropia_chain_member(const entropia_model* model, int k,
                                      entropia_subgroup** out);
void entropia_subgroup_destroy(entropia_subgroup* subgroup);
entropia_status entropia_subgroup_describe(const entropia_subgroup* subgroup, char** out);
/* flags: {"compact":.., "open":.., "normal":..} */
entropia_status entropia_subgroup_flags(const entropia_subgroup* subgroup, char** json_out);

entropia_status entropia_subgroup_product(const entropia_subgroup* a, const entropia_subgroup* b,
                                          entropia_subgroup** out);
entropia_status entropia_subgroup_intersect(const entropia_subgroup* a,
                                            const entropia_subgroup* b, entropia_subgroup** out);
entropia_status entropia_subgroup_preimage(const entropia_endo* phi, const entropia_subgroup* a,
                                           entropia_subgroup** out);
entropia_status entropia_subgroup_image(const entropia_endo* phi, const entropia_subgroup* a,
                                        entropia_subgroup** out);
/* exact factored index as JSON: {"infinite":false,"factors":{"2":3},"decimal":"8"} */
entropia_status entropia_subgroup_index(const entropia_subgroup* a, const entropia_subgroup* b,
                                        char** json_out);
entropia_status entropia_subgroup_contains(const entropia_subgroup* a,
                                           const entropia_subgroup* b, int* out);
entropia_status entropia_subgroup_equal(const entropia_subgroup* a, const entropia_subgroup* b,
                                        int* out);

/* --- endomorphisms -------------------------------------------------- */

entropia_status entropia_endo_create(const entropia_model* model, const char* spec_json,
                                     entropia_endo** out);
entropia_status entropia_endo_identity(const entropia_model* model, entropia_endo** out);
void entropia_endo_destroy(entropia_endo* endo);
entropia_status entropia_endo_describe(const entropia_endo* endo, char** out);
entropia_status entropia_endo_compose(const entropia_endo* f, const entropia_endo* g,
                                      entropia_endo** out);
entropia_status entropia_endo_inverse(const entropia_endo* phi, entropia_endo** out);
entropia_status entropia_endo_is_automorphism(const entropia_endo* phi, int* out);

/* --- entropy --------------------------------------------------------- */

/* Algebraic entropy of phi (supremum over the model's chain, exact). */
entropia_status entropia_halg(const entropia_endo* phi, entropia_value** out);
/* Entropy with respect to one subgroup; limit_path selects the trajectory
 * route, otherwise the limit-free route is used. */
entropia_status entropia_halg_at(const entropia_endo* phi, const entropia_subgroup* u,
                                 int limit_path, entropia_value** out);
/* log [A : preimage(phi, A)] for an open normal subgroup A with
 * preimage(A) inside A and finite index; the entropy supremum ranges over
 * exactly these values. */
entropia_status entropia_halg_inverse_invariant(const entropia_endo* phi,
                                                const entropia_subgroup* a,
                                                entropia_value** out);
/* Topological entropy of phi on the (totally disconnected) model. */
entropia_status entropia_htop(const entropia_endo* phi, entropia_value** out);
/* Haar modulus of an automorphism, factored JSON as for indices. */
entropia_status entropia_modulus(const entropia_endo* phi, char** json_out);

void entropia_value_destroy(entropia_value* value);
entropia_status entropia_value_is_infinite(const entropia_value* value, int* out);
/* "log 6", "0", "infinity" */
entropia_status entropia_value_format(const entropia_value* value, char** out);
/* full JSON object including the exact factored form */
entropia_status entropia_value_json(const entropia_value* value, char** out);
/* natural log as double, display only */
entropia_status entropia_value_log(const entropia_value* value, double* out);
entropia_status entropia_value_equal(const entropia_value* a, const entropia_value* b, int* out);

/* --- one-shot command runner ----------------------------------------- */

/* request_json: {"command":"entropy"|"table"|"check"|"sweep",
 *                "which":..., "n":..., "scenario":{...},
 *                "order_max":..., "count":..., "seed":...}
 * On success *report_json holds the full report, including "exit_code"
 * (0 ok, 1 violation, 2 hypothesis failure, 3 input error, 4 budget).
 * On failure the status maps the error and *report_json is NULL. */
entropia_status entropia_run_command(const char* request_json, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ENTROPIA_H */
