#ifndef GASKET_GASKET_H
#define GASKET_GASKET_H

/* C interface to the critical-base library. Every function returns a
 * gasket_status; results come back through out-parameters. Strings handed
 * out by the library are owned by the caller and released with
 * gasket_string_free. After a failure gasket_last_error() describes it
 * (per thread, valid until the next call). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GASKET_API __declspec(dllexport)
#else
#define GASKET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gasket_status {
  GASKET_OK = 0,
  GASKET_E_INVALID_ARGUMENT,
  GASKET_E_PARSE,
  GASKET_E_LAST_DIGIT_MISMATCH,
  GASKET_E_BAD_BLOCK,
  GASKET_E_ZERO_SEQUENCE,
  GASKET_E_NO_ROOT_IN_RANGE,
  GASKET_E_AMBIGUOUS_ROOT,
  GASKET_E_NOT_PARRY_VALID,
  GASKET_E_NOT_PRIMITIVE,
  GASKET_E_BUDGET_EXCEEDED,
  GASKET_E_CAP_EXCEEDED,
  GASKET_E_UNDECIDED_AT_HORIZON,
  GASKET_E_MARGIN_NOT_ESTABLISHED,
  GASKET_E_WIDTH_NOT_REACHED,
  GASKET_E_NULL_ARGUMENT,
  GASKET_E_INTERNAL
} gasket_status;

typedef enum gasket_provenance { GASKET_CLOSED_FORM = 0, GASKET_ORACLE = 1 } gasket_provenance;

typedef struct gasket_config gasket_config;
typedef struct gasket_real gasket_real;
typedef struct gasket_record gasket_record;
typedef struct gasket_report gasket_report;

GASKET_API const char* gasket_status_string(gasket_status s);
GASKET_API const char* gasket_last_error(void);
GASKET_API void gasket_string_free(char* s);

/* Configuration; starts from defaults with GASKET_MAX_ORACLE_K applied. */
GASKET_API gasket_status gasket_config_new(gasket_config** out);
GASKET_API void gasket_config_free(gasket_config* c);
GASKET_API gasket_status gasket_config_set_jobs(gasket_config* c, unsigned jobs);
GASKET_API gasket_status gasket_config_set_quotient_symmetry(gasket_config* c, int on);
GASKET_API gasket_status gasket_config_set_max_oracle_k(gasket_config* c, int k);
GASKET_API gasket_status gasket_config_set_positionwise_chain(gasket_config* c, int on);
GASKET_API gasket_status gasket_config_max_oracle_k(const gasket_config* c, int* out);

/* Real algebraic numbers in (1, 2]. */
GASKET_API gasket_status gasket_real_from_sequence(const char* delta, gasket_real** out);
GASKET_API gasket_status gasket_real_from_poly(const char* poly, gasket_real** out);
GASKET_API gasket_status gasket_real_from_rational(const char* q, gasket_real** out);
/* name: "beta_a", "beta_star", "rho" or "hat_beta" (the last two use n). */
GASKET_API gasket_status gasket_real_named(const char* name, int n, gasket_real** out);
GASKET_API void gasket_real_free(gasket_real* x);
GASKET_API gasket_status gasket_real_decimal(const gasket_real* x, int digits, char** out);
GASKET_API gasket_status gasket_real_poly(const gasket_real* x, char** out);
/* -1, 0 or 1. */
GASKET_API gasket_status gasket_real_compare(const gasket_real* a, const gasket_real* b, int* out);

/* delta(beta): `prefix` receives every computed digit; `sequence` receives
 * the eventually periodic form, or NULL when none closed up. */
GASKET_API gasket_status gasket_delta_expansion(const gasket_real* beta, size_t horizon, char** prefix,
                                                char** sequence);
GASKET_API gasket_status gasket_quasi_greedy(const gasket_real* beta, size_t n, char** out);
GASKET_API gasket_status gasket_is_parry_valid(const char* sequence, int* out);

/* Interval around beta_c of width <= width ("p/q" or decimal), endpoints
 * rounded outward to `digits` decimals. */
GASKET_API gasket_status gasket_beta_c_bracket(const char* width, int digits, char** lo, char** hi, int* level);

/* Critical bases. */
GASKET_API gasket_status gasket_beta_closed_form(uint64_t k, gasket_record** out);
GASKET_API gasket_status gasket_beta_oracle(const gasket_config* c, int k, uint64_t budget, gasket_record** out);
GASKET_API void gasket_record_free(gasket_record* r);
GASKET_API gasket_status gasket_record_k(const gasket_record* r, uint64_t* out);
GASKET_API gasket_status gasket_record_delta(const gasket_record* r, char** out);
GASKET_API gasket_status gasket_record_poly(const gasket_record* r, char** out);
GASKET_API gasket_status gasket_record_decimal(const gasket_record* r, int digits, char** out);
GASKET_API gasket_status gasket_record_provenance(const gasket_record* r, gasket_provenance* out);
GASKET_API gasket_status gasket_record_is_sentinel(const gasket_record* r, int* out);
/* Oracle records only; NULL otherwise. */
GASKET_API gasket_status gasket_record_witness(const gasket_record* r, char** out);
GASKET_API gasket_status gasket_record_value(const gasket_record* r, gasket_real** out);
/* Perron certificate: theorem-backed flag and the numeric margin as a
 * decimal, or NULL when only the theorem path was used. */
GASKET_API gasket_status gasket_record_perron(const gasket_record* r, int numeric, int* theorem_backed,
                                              char** margin);

/* Membership of a coding in U_beta. `detail` receives the violating
 * projection and shift, or NULL for members. */
GASKET_API gasket_status gasket_member_periodic(const char* word, const gasket_real* beta, int* member,
                                                char** detail);
GASKET_API gasket_status gasket_member_general(const char* sequence, const gasket_real* beta, int* member,
                                               char** detail);
GASKET_API gasket_status gasket_hat_sequence(const char* word, char** out);

/* Verification suites. */
GASKET_API gasket_status gasket_verify_sharkovskii(int max_index, gasket_report** out);
GASKET_API gasket_status gasket_verify_identity_6m4(int max_m, gasket_report** out);
GASKET_API gasket_status gasket_verify_oracle(const gasket_config* c, int k_max, gasket_report** out);
GASKET_API gasket_status gasket_verify_key_proposition(const gasket_config* c, int k_max, gasket_report** out);
GASKET_API gasket_status gasket_verify_dichotomy(const gasket_config* c, int l, int m, gasket_report** out);
GASKET_API gasket_status gasket_verify_asymptotics(int l_max, int n_max, int m_max, gasket_report** out);
GASKET_API void gasket_report_free(gasket_report* r);
GASKET_API gasket_status gasket_report_ok(const gasket_report* r, int* out);
GASKET_API gasket_status gasket_report_text(const gasket_report* r, char** out);

/* Admissible blocks: one representation per line, as Omega digits. */
GASKET_API gasket_status gasket_representations(const gasket_config* c, const char* block, size_t* count,
                                                char** out);
/* which = 0: the subshift X; which = 1: the lambda/gamma block graph at n. */
GASKET_API gasket_status gasket_graph_edges(int which, int n, char** out);

/* Figure 2, 3 or 4 as CSV; range <= 0 keeps the default range. */
GASKET_API gasket_status gasket_figure_csv(int figure, int digits, int range, char** out);
/* Overlap triangles for beta in [lo, hi] as CSV rows
 * triangle,vertex,x_lo,x_hi,y_lo,y_hi. */
GASKET_API gasket_status gasket_overlap_csv(const char* beta_lo, const char* beta_hi, int digits, char** out);

#ifdef __cplusplus
}
#endif

#endif
