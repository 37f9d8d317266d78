/*
 * cwchaos - exact finite-size distributions of the Curie-Weiss spin count,
 * their beta-binomial approximants, and total-variation convergence studies.
 *
 * C interface of the shared library. All functions are thread safe; handles
 * are immutable after creation and may be shared across threads. Functions
 * returning cw_status write their results through out parameters only on
 * CW_OK; on failure cw_last_error_message() carries a per-thread detail
 * string.
 */

#ifndef CWCHAOS_H
#define CWCHAOS_H

#include <stdint.h>

#if defined(_WIN32)
#define CW_API __declspec(dllexport)
#else
#define CW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
    CW_OK = 0,
    CW_ERR_DOMAIN = 1,
    CW_ERR_CRITICAL_POINT = 2,      /* (beta, h) = (1, 0) where excluded */
    CW_ERR_DEGENERATE_VARIANCE = 3, /* sigma^2 <= a(1-a) in moment matching */
    CW_ERR_UNNORMALIZED = 4,
    CW_ERR_INVALID_ARGUMENT = 5,    /* null handle / null out pointer */
    CW_ERR_INTERNAL = 6
} cw_status;

typedef enum cw_regime {
    CW_REGIME_SUBCRITICAL = 0, /* beta < 1, h = 0 */
    CW_REGIME_SUPERCRITICAL = 1, /* beta > 1, h = 0 */
    CW_REGIME_FIELD = 2,       /* h != 0 */
    CW_REGIME_CRITICAL = 3     /* beta = 1, h = 0 */
} cw_regime;

/* Stable identifier of a status ("CriticalPoint", "DomainError", ...). */
CW_API const char* cw_status_name(cw_status status);

/* Detail message of the most recent failure on the calling thread. */
CW_API const char* cw_last_error_message(void);

/* Finite integer-supported pmf (log-space inside). */
typedef struct cw_pmf cw_pmf;

/* Success-probability law of a mixed binomial. */
typedef struct cw_mixing_law cw_mixing_law;

/* Rows of (n, k, observed, predicted, gap) from a convergence study. */
typedef struct cw_table cw_table;

/* ---- model ---------------------------------------------------------- */

CW_API cw_status cw_regime_of(double beta, double h, cw_regime* out);
CW_API const char* cw_regime_name(cw_regime regime);

/* Magnetization root, limiting variance and beta mixing parameters.
 * Fails with CW_ERR_CRITICAL_POINT at (1, 0). Out pointers may be NULL
 * individually. */
CW_API cw_status cw_solve(double beta, double h, double* m, double* v2, double* gamma1,
                          double* gamma2);

/* Exact law of the positive-spin count among n spins. */
CW_API cw_status cw_exact_spin_count_pmf(int64_t n, double beta, double h, cw_pmf** out);

/* Exact law of the positive-spin count among any k of n spins. */
CW_API cw_status cw_marginal_spin_count_pmf(int64_t n, int64_t k, double beta, double h,
                                            cw_pmf** out);

CW_API cw_status cw_log_partition_exact(int64_t n, double beta, double h, double* out);
CW_API cw_status cw_log_partition_asymptotic(int64_t n, double beta, double* out);

/* Quartic limit density of n^{1/4} m_n at the critical point. */
CW_API cw_status cw_critical_density(double x, double* out);

/* ---- pmf handles ----------------------------------------------------- */

CW_API int64_t cw_pmf_offset(const cw_pmf* pmf);
CW_API int64_t cw_pmf_size(const cw_pmf* pmf);
/* Mass / log mass at integer l; 0 / -inf outside the support range. */
CW_API double cw_pmf_prob(const cw_pmf* pmf, int64_t l);
CW_API double cw_pmf_log_prob(const cw_pmf* pmf, int64_t l);
CW_API double cw_pmf_mean(const cw_pmf* pmf);
CW_API double cw_pmf_variance(const cw_pmf* pmf);
CW_API void cw_pmf_free(cw_pmf* pmf);

/* ---- distributions --------------------------------------------------- */

CW_API cw_status cw_binomial_pmf(int64_t n, double p, cw_pmf** out);
CW_API cw_status cw_hypergeometric_pmf(int64_t n, int64_t i, int64_t k, cw_pmf** out);
CW_API cw_status cw_beta_binomial_pmf(int64_t k, double a, double b, cw_pmf** out);

CW_API cw_status cw_mixing_point(double p, cw_mixing_law** out);
CW_API cw_status cw_mixing_beta(double a, double b, cw_mixing_law** out);
/* Finite convex combination of point/beta laws; weights must sum to 1. */
CW_API cw_status cw_mixing_finite(const double* weights, const cw_mixing_law* const* components,
                                  int64_t count, cw_mixing_law** out);
CW_API void cw_mixing_law_free(cw_mixing_law* law);

CW_API cw_status cw_mixed_binomial_pmf(int64_t k, const cw_mixing_law* law, cw_pmf** out);

/* sum_i weights(i) HyperG(n, i, k); weights supported within {0, ..., n}. */
CW_API cw_status cw_hypergeometric_mixture(int64_t n, const cw_pmf* weights, int64_t k,
                                           cw_pmf** out);

/* One beta-binomial(k, a, b) draw via reinforced urn sampling. */
CW_API cw_status cw_polya_urn_sample(int64_t k, double a, double b, uint64_t seed, int64_t* out);

/* ---- total variation -------------------------------------------------- */

CW_API cw_status cw_tv_discrete(const cw_pmf* p, const cw_pmf* q, double* out);
CW_API cw_status cw_gaussian_tv(double v1sq, double v2sq, double* out);
CW_API cw_status cw_gaussian_tv_quadrature(double v1sq, double v2sq, double* out);
/* sum_j weights[j] * D(v1sq[j], v2sq[j]) for component-matched mixtures. */
CW_API cw_status cw_mixture_tv_limit(const double* weights, const double* v1sq, const double* v2sq,
                                     int64_t count, double* out);

/* ---- analysis --------------------------------------------------------- */

CW_API cw_status cw_beta_param_match(double a, double sigma_sq, double* gamma1, double* gamma2);

/* Predicted limiting TV for k ~ alpha n and the matched per-spin variance. */
CW_API cw_status cw_tv_limit_prediction(double beta, double h, double alpha, cw_regime* regime,
                                        double* predicted_tv, double* sigma_alpha_sq);

/* sqrt(n)-scaled sup error of the Gaussian local-limit approximation. */
CW_API cw_status cw_llt_sup_error(int64_t n, double beta, double h, double* out);

CW_API cw_status cw_beta_binomial_gap(int64_t n, int64_t k, double beta, double h, double* out);
CW_API cw_status cw_symmetric_mixture_gap(int64_t n, int64_t k, double beta, double* out);

/* k(n) used by convergence studies: round(alpha n) ties-to-even, clamped to
 * [1, n]; ceil(sqrt(n)) when alpha = 0. */
CW_API cw_status cw_spins_for_alpha(double alpha, int64_t n, int64_t* out);

/* Observed vs predicted TV rows over the given n values. threads = 0 uses
 * all hardware threads; results do not depend on the thread count. */
CW_API cw_status cw_tv_convergence_table(double beta, double h, double alpha, const int64_t* ns,
                                         int64_t count, int threads, cw_table** out);

/* Kolmogorov distance to the quartic limit law at the critical point. */
CW_API cw_status cw_critical_cdf_distance(int64_t n, double* out);

/* ---- tables ----------------------------------------------------------- */

CW_API int64_t cw_table_rows(const cw_table* table);
CW_API cw_status cw_table_row(const cw_table* table, int64_t index, int64_t* n, int64_t* k,
                              double* observed, double* predicted, double* gap);
CW_API void cw_table_free(cw_table* table);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CWCHAOS_H */
