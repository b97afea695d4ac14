/* C interface to the polyu engine: universal mixed sums of generalized
 * square and octagonal numbers, and the ternary-form congruence machinery
 * behind their classification.
 *
 * Conventions:
 *   - Every function returns a polyu_status; out-parameters are written only
 *     on POLYU_OK. polyu_last_error() describes the most recent failure on
 *     the calling thread.
 *   - Objects are opaque handles released with their _free function.
 *   - Strings returned through char** are heap-allocated; release them with
 *     polyu_free_string. Arrays of int64_t likewise with polyu_free_i64.
 *   - Structured results (certificates, reports, catalogues) cross the
 *     boundary as JSON text; the schemas are documented in the README.
 */
#ifndef POLYU_H
#define POLYU_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polyu_status {
    POLYU_OK = 0,
    POLYU_ERROR_INVALID_ARGUMENT = 1,
    POLYU_ERROR_OVERFLOW = 2,
    POLYU_ERROR_INDETERMINATE = 3,
    POLYU_ERROR_UNKNOWN_TABLE = 4,
    POLYU_ERROR_IO = 5,
    POLYU_ERROR_INTERNAL = 6,
    POLYU_ERROR_BUFFER_TOO_SMALL = 7
} polyu_status;

typedef struct polyu_sum polyu_sum;
typedef struct polyu_form polyu_form;
typedef struct polyu_catalogue polyu_catalogue;

const char* polyu_version(void);
/* Thread-local message for the last error returned on this thread. */
const char* polyu_last_error(void);
void polyu_free_string(char* s);
void polyu_free_i64(int64_t* p);

/* ---- mixed sums -------------------------------------------------------- */

/* Notation "a1,a2,...|b1,b2,..."; either side may be empty. */
polyu_status polyu_sum_parse(const char* text, polyu_sum** out);
polyu_status polyu_sum_create(const int64_t* squares, size_t n_squares, const int64_t* octagonals,
                              size_t n_octagonals, polyu_sum** out);
void polyu_sum_free(polyu_sum* sum);
polyu_status polyu_sum_notation(const polyu_sum* sum, char** out);
polyu_status polyu_sum_to_json(const polyu_sum* sum, char** out);
polyu_status polyu_sum_arity(const polyu_sum* sum, size_t* out);

/* P_m(x) for m in {4, 8}. */
polyu_status polyu_polygonal_value(int m, int64_t x, int64_t* out);
polyu_status polyu_polygonal_values_up_to(int m, int64_t bound, int64_t** values, size_t* count);

polyu_status polyu_sum_represents(const polyu_sum* sum, int64_t n, int* out);
/* witness: JSON {"x":[...],"y":[...]} or null when not represented. */
polyu_status polyu_sum_witness(const polyu_sum* sum, int64_t n, char** out);
/* verdict: 1 universal, 0 non-universal (then *truant is set).
 * Indeterminate outcomes return POLYU_ERROR_INDETERMINATE. */
polyu_status polyu_sum_truant(const polyu_sum* sum, int64_t bound, int* verdict, int64_t* truant,
                              int* criterion_passed);
polyu_status polyu_sum_criterion_universal(const polyu_sum* sum, int* out);
polyu_status polyu_sum_exceptional_set(const polyu_sum* sum, int64_t bound, int64_t** values,
                                       size_t* count);
/* JSON {"beta_sum":...,"E":[...],"nu":{"n":exponent}}. */
polyu_status polyu_sum_reduction_plan(const polyu_sum* sum, char** out);
/* passed: 1/0; failing: members of E without an admissible solution. */
polyu_status polyu_sum_reduction_check(const polyu_sum* sum, int* passed, int64_t** failing,
                                       size_t* count);

/* ---- ternary forms ----------------------------------------------------- */

/* "diag:1,3,3" or "gram:4,1,0;1,7,0;0,0,27". */
polyu_status polyu_form_parse(const char* text, polyu_form** out);
polyu_status polyu_form_create(const int64_t gram[9], polyu_form** out);
void polyu_form_free(polyu_form* form);
polyu_status polyu_form_notation(const polyu_form* form, char** out);
polyu_status polyu_form_eval(const polyu_form* form, int64_t x, int64_t y, int64_t z, int64_t* out);
polyu_status polyu_form_rep_count(const polyu_form* form, int64_t n, int64_t* out);
polyu_status polyu_form_represented_set(const polyu_form* form, int64_t bound, int64_t** values,
                                        size_t* count);

/* JSON array of residue vectors [[x,y,z],...]. */
polyu_status polyu_congruence_classes(const polyu_form* g, int64_t d, int64_t a, char** out);
/* JSON array of 3x3 matrices (rows). */
polyu_status polyu_transformation_set(const polyu_form* f, const polyu_form* g, int64_t d, char** out);
/* JSON certificate with residue/good/bad data; see README. */
polyu_status polyu_good_partition(const polyu_form* f, const polyu_form* g, int64_t d, int64_t a,
                                  char** out);
polyu_status polyu_prec_check(const polyu_form* f, const polyu_form* g, int64_t d, int64_t a,
                              int64_t spot_bound, int* out);
/* T given row-major. JSON verdict/conditions/eigen data. */
polyu_status polyu_pme_check(const polyu_form* f, const polyu_form* g, int64_t d, int64_t a,
                             const int64_t T[9], char** out);
/* ok: 1 when no counterexample <= bound; otherwise 0 and *counterexample. */
polyu_status polyu_pme_conclusion_check(const polyu_form* f, const polyu_form* g, int64_t d,
                                        int64_t a, const int64_t T[9], int64_t bound, int* ok,
                                        int64_t* counterexample);
polyu_status polyu_siegel_identity_check(int64_t bound, int* ok, int64_t* first_failure);

/* ---- escalation and the catalogue -------------------------------------- */

/* parents_json: [{"sum":"1,2|","truant":5},...]; children returned as a JSON
 * array of {"sum":...,"parent":...}. */
polyu_status polyu_escalate(const char* parents_json, char** children_json);
/* threads <= 0 picks the hardware thread count. */
polyu_status polyu_catalogue_run(int64_t bound, int threads, polyu_catalogue** out);
void polyu_catalogue_free(polyu_catalogue* cat);
polyu_status polyu_catalogue_total(const polyu_catalogue* cat, int64_t* out);
/* "3:6 4:547 5:707 6:11 total:1271" */
polyu_status polyu_catalogue_summary(const polyu_catalogue* cat, char** out);
polyu_status polyu_catalogue_arities(const polyu_catalogue* cat, int64_t** arities, size_t* count);
polyu_status polyu_catalogue_counts(const polyu_catalogue* cat, int arity, int64_t* candidates,
                                    int64_t* universal, int64_t* proper_universal);
polyu_status polyu_catalogue_run_json(const polyu_catalogue* cat, int arity, char** out);
polyu_status polyu_catalogue_run_csv(const polyu_catalogue* cat, int arity, char** out);
polyu_status polyu_catalogue_json(const polyu_catalogue* cat, char** out);

/* ---- fixtures and table verification ------------------------------------ */

polyu_status polyu_set_fixture_directory(const char* path);
polyu_status polyu_fixture_json(const char* table_id, char** out);
/* passed: 1/0; report: JSON rows with pass/expected/actual. */
polyu_status polyu_verify_table(const char* table_id, int64_t bound, int threads, int* passed,
                                char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* POLYU_H */
