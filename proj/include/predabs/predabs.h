/* SPDX-License-Identifier: Apache-2.0 */
#ifndef PREDABS_PREDABS_H
#define PREDABS_PREDABS_H

#include <stddef.h>
#include <stdint.h>

#if defined(PREDABS_BUILDING)
#define PA_API __attribute__((visibility("default")))
#else
#define PA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Probabilities over predicate-logic models induced by a corpus of data.
 *
 * Every function returns a pa_status. On failure the out-parameters are left
 * untouched and pa_last_error() describes the problem; the message is owned by
 * the library and stays valid until the next call on the same thread.
 * Formulas are passed as text and parsed against the scenario's vocabulary.
 * Strings returned through char** are released with pa_string_free.
 */

typedef enum pa_status {
  PA_OK = 0,
  PA_ERR_INVALID_ARGUMENT = 1,
  PA_ERR_SYNTAX = 2,
  PA_ERR_UNDECLARED = 3,
  PA_ERR_ARITY = 4,
  PA_ERR_VALIDATION = 5,
  PA_ERR_EVALUATION = 6,
  PA_ERR_EMPTY_POSSIBLE_SET = 7,
  PA_ERR_LIMIT = 8,
  PA_ERR_IO = 9,
  PA_ERR_OVERFLOW = 10,
  PA_ERR_INTERNAL = 11
} pa_status;

typedef struct pa_rational {
  int64_t num;
  int64_t den; /* always positive; the fraction is in lowest terms */
} pa_rational;

typedef enum pa_mu_kind { PA_MU_EXACT = 0, PA_MU_ONE = 1, PA_MU_LIMIT_ONE = 2 } pa_mu_kind;

typedef struct pa_mu {
  pa_mu_kind kind;
  pa_rational value; /* used when kind == PA_MU_EXACT; must lie in [1/2, 1] */
} pa_mu;

typedef enum pa_consequence_mode { PA_LOGICAL = 0, PA_EMPIRICAL = 1 } pa_consequence_mode;

typedef struct pa_scenario pa_scenario;
typedef struct pa_subsets pa_subsets;
typedef struct pa_ranking pa_ranking;

PA_API const char* pa_version(void);
PA_API const char* pa_last_error(void);
/* Line and column of the last syntax error, or 0 when there is none. */
PA_API size_t pa_last_error_line(void);
PA_API size_t pa_last_error_column(void);
PA_API const char* pa_status_name(pa_status status);
PA_API void pa_string_free(char* s);

/* "1", "limit" or a rational such as "3/4" or "0.9". */
PA_API pa_status pa_mu_parse(const char* text, pa_mu* out);

PA_API pa_status pa_scenario_load_file(const char* path, pa_scenario** out);
PA_API pa_status pa_scenario_load_text(const char* text, pa_scenario** out);
PA_API void pa_scenario_free(pa_scenario* s);
/* Scenario text that loads back into an equal scenario. */
PA_API pa_status pa_scenario_format(const pa_scenario* s, char** out);
PA_API pa_status pa_scenario_default_mu(const pa_scenario* s, pa_mu* out);
PA_API size_t pa_scenario_model_count(const pa_scenario* s);
PA_API size_t pa_scenario_data_count(const pa_scenario* s);
PA_API size_t pa_scenario_constant_count(const pa_scenario* s);
/* Name of the model at `index`; the pointer lives as long as the scenario. */
PA_API pa_status pa_scenario_model_name(const pa_scenario* s, size_t index, const char** out);
PA_API pa_status pa_scenario_model_index(const pa_scenario* s, const char* name, size_t* out);

/* Canonical text of a formula. */
PA_API pa_status pa_formula_normalize(const pa_scenario* s, const char* formula, char** out);

/* Truth value of a closed formula in the named model. */
PA_API pa_status pa_eval(const pa_scenario* s, const char* formula, const char* model, int* out);

/*
 * Indices of the models satisfying every formula. With possible_only set only
 * models supported by some datum are considered. At most `capacity` indices are
 * written; *count receives the full size of the set.
 */
PA_API pa_status pa_truth_set(const pa_scenario* s, const char* const* formulas, size_t n, int possible_only,
                              size_t* indices, size_t capacity, size_t* count);

PA_API pa_status pa_marginal(const pa_scenario* s, const char* model, pa_rational* out);
PA_API pa_status pa_prob(const pa_scenario* s, const char* formula, pa_mu mu, pa_rational* out);
/* The probability as a polynomial in mu, e.g. "(14*mu + 3)/20". */
PA_API pa_status pa_prob_symbolic(const pa_scenario* s, const char* formula, char** out);
PA_API pa_status pa_joint(const pa_scenario* s, const char* a, const char* b, pa_mu mu, pa_rational* out);
PA_API pa_status pa_joint_symbolic(const pa_scenario* s, const char* a, const char* b, char** out);
/* p(a | givens). Fails with PA_ERR_EMPTY_POSSIBLE_SET when mu = 1 and no possible model satisfies the givens. */
PA_API pa_status pa_query(const pa_scenario* s, const char* a, const char* const* givens, size_t n, pa_mu mu,
                          pa_rational* out);
/* p(a | givens) as a rational function of mu. */
PA_API pa_status pa_query_symbolic(const pa_scenario* s, const char* a, const char* const* givens, size_t n, char** out);
/* Limit of p(a | givens) as mu -> 1 taken on the rational function. */
PA_API pa_status pa_query_symbolic_limit(const pa_scenario* s, const char* a, const char* const* givens, size_t n,
                                         pa_rational* out);
PA_API pa_status pa_posterior(const pa_scenario* s, const char* model, const char* const* givens, size_t n, pa_mu mu,
                              pa_rational* out);
PA_API pa_status pa_consequence(const pa_scenario* s, const char* const* givens, size_t n, const char* a,
                                pa_consequence_mode mode, int* out);

/* Maximal possible subsets (over supported models) and maximal consistent subsets (over all models). */
PA_API pa_status pa_mps(const pa_scenario* s, const char* const* formulas, size_t n, pa_subsets** out);
PA_API pa_status pa_mcs(const pa_scenario* s, const char* const* formulas, size_t n, pa_subsets** out);
PA_API void pa_subsets_free(pa_subsets* f);
/* The deduplicated input formulas that subset members refer to. */
PA_API size_t pa_subsets_formula_count(const pa_subsets* f);
PA_API const char* pa_subsets_formula(const pa_subsets* f, size_t i);
/* Number of inclusion-maximal subsets, largest first. */
PA_API size_t pa_subsets_count(const pa_subsets* f);
PA_API size_t pa_subsets_size(const pa_subsets* f, size_t subset);
PA_API size_t pa_subsets_member(const pa_subsets* f, size_t subset, size_t j);
PA_API int pa_subsets_is_cardinality_maximal(const pa_subsets* f, size_t subset);

/* Ranks the template's candidates by probability. `literals` may be NULL. */
PA_API pa_status pa_hypothesize(const pa_scenario* s, const char* grammar, size_t max_ops, const int64_t* literals,
                                size_t n_literals, pa_mu mu, pa_ranking** out);
/* Ranks candidate answers by their probability given the givens. */
PA_API pa_status pa_select(const pa_scenario* s, const char* const* givens, size_t n_givens,
                           const char* const* candidates, size_t n_candidates, pa_mu mu, pa_ranking** out);
PA_API void pa_ranking_free(pa_ranking* r);
PA_API size_t pa_ranking_count(const pa_ranking* r);
PA_API const char* pa_ranking_text(const pa_ranking* r, size_t i);
PA_API pa_rational pa_ranking_score(const pa_ranking* r, size_t i);
PA_API size_t pa_ranking_complexity(const pa_ranking* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif
