#include "cwchaos.h"

#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "dist.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "pmf.hpp"
#include "tv.hpp"

struct cw_pmf {
    cwchaos::Pmf value;
};

struct cw_mixing_law {
    cwchaos::dist::MixingLaw value;
};

struct cw_table {
    cwchaos::analysis::ConvergenceTable value;
};

namespace {

thread_local std::string g_last_error;

cw_status status_from(const cwchaos::Error& e) {
    g_last_error = e.what();
    if (dynamic_cast<const cwchaos::CriticalPointError*>(&e)) return CW_ERR_CRITICAL_POINT;
    if (dynamic_cast<const cwchaos::DegenerateVarianceError*>(&e)) return CW_ERR_DEGENERATE_VARIANCE;
    if (dynamic_cast<const cwchaos::UnnormalizedPmfError*>(&e)) return CW_ERR_UNNORMALIZED;
    return CW_ERR_DOMAIN;
}

template <class F>
cw_status wrap(F&& body) noexcept {
    try {
        body();
        return CW_OK;
    } catch (const cwchaos::Error& e) {
        return status_from(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CW_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CW_ERR_INTERNAL;
    }
}

cw_status invalid_argument(const char* what) {
    g_last_error = what;
    return CW_ERR_INVALID_ARGUMENT;
}

cw_regime to_c_regime(cwchaos::model::Regime r) {
    switch (r) {
        case cwchaos::model::Regime::subcritical: return CW_REGIME_SUBCRITICAL;
        case cwchaos::model::Regime::supercritical: return CW_REGIME_SUPERCRITICAL;
        case cwchaos::model::Regime::field: return CW_REGIME_FIELD;
        case cwchaos::model::Regime::critical: break;
    }
    return CW_REGIME_CRITICAL;
}

} // namespace

extern "C" {

const char* cw_status_name(cw_status status) {
    switch (status) {
        case CW_OK: return "Ok";
        case CW_ERR_DOMAIN: return "DomainError";
        case CW_ERR_CRITICAL_POINT: return "CriticalPoint";
        case CW_ERR_DEGENERATE_VARIANCE: return "DegenerateVariance";
        case CW_ERR_UNNORMALIZED: return "UnnormalizedPmf";
        case CW_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case CW_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownStatus";
}

const char* cw_last_error_message(void) { return g_last_error.c_str(); }

cw_status cw_regime_of(double beta, double h, cw_regime* out) {
    if (out == nullptr) return invalid_argument("cw_regime_of: out must not be null");
    return wrap([&] { *out = to_c_regime(cwchaos::model::ModelParams(beta, h).regime()); });
}

const char* cw_regime_name(cw_regime regime) {
    switch (regime) {
        case CW_REGIME_SUBCRITICAL: return "subcritical";
        case CW_REGIME_SUPERCRITICAL: return "supercritical";
        case CW_REGIME_FIELD: return "field";
        case CW_REGIME_CRITICAL: return "critical";
    }
    return "unknown";
}

cw_status cw_solve(double beta, double h, double* m, double* v2, double* gamma1, double* gamma2) {
    return wrap([&] {
        const cwchaos::model::ModelParams params(beta, h);
        const cwchaos::model::Magnetization mag = cwchaos::model::solve_magnetization(params);
        const cwchaos::model::GammaPair g = cwchaos::model::gamma_pair(params);
        if (m) *m = mag.m;
        if (v2) *v2 = mag.v2;
        if (gamma1) *gamma1 = g.gamma1;
        if (gamma2) *gamma2 = g.gamma2;
    });
}

cw_status cw_exact_spin_count_pmf(int64_t n, double beta, double h, cw_pmf** out) {
    if (out == nullptr) return invalid_argument("cw_exact_spin_count_pmf: out must not be null");
    return wrap([&] {
        const cwchaos::model::ModelParams params(beta, h);
        *out = new cw_pmf{cwchaos::model::exact_spin_count_pmf(n, params)};
    });
}

cw_status cw_marginal_spin_count_pmf(int64_t n, int64_t k, double beta, double h, cw_pmf** out) {
    if (out == nullptr) return invalid_argument("cw_marginal_spin_count_pmf: out must not be null");
    return wrap([&] {
        const cwchaos::model::ModelParams params(beta, h);
        *out = new cw_pmf{cwchaos::dist::marginal_spin_count_pmf(n, k, params)};
    });
}

cw_status cw_log_partition_exact(int64_t n, double beta, double h, double* out) {
    if (out == nullptr) return invalid_argument("cw_log_partition_exact: out must not be null");
    return wrap([&] {
        *out = cwchaos::model::log_partition_exact(n, cwchaos::model::ModelParams(beta, h));
    });
}

cw_status cw_log_partition_asymptotic(int64_t n, double beta, double* out) {
    if (out == nullptr) return invalid_argument("cw_log_partition_asymptotic: out must not be null");
    return wrap([&] { *out = cwchaos::model::log_partition_asymptotic(n, beta); });
}

cw_status cw_critical_density(double x, double* out) {
    if (out == nullptr) return invalid_argument("cw_critical_density: out must not be null");
    return wrap([&] { *out = cwchaos::model::critical_density(x); });
}

int64_t cw_pmf_offset(const cw_pmf* pmf) { return pmf ? pmf->value.offset() : 0; }

int64_t cw_pmf_size(const cw_pmf* pmf) { return pmf ? pmf->value.size() : 0; }

double cw_pmf_prob(const cw_pmf* pmf, int64_t l) { return pmf ? pmf->value.at(l) : 0.0; }

double cw_pmf_log_prob(const cw_pmf* pmf, int64_t l) {
    return pmf ? pmf->value.log_at(l) : -std::numeric_limits<double>::infinity();
}

double cw_pmf_mean(const cw_pmf* pmf) { return pmf ? pmf->value.mean() : 0.0; }

double cw_pmf_variance(const cw_pmf* pmf) { return pmf ? pmf->value.variance() : 0.0; }

void cw_pmf_free(cw_pmf* pmf) { delete pmf; }

cw_status cw_binomial_pmf(int64_t n, double p, cw_pmf** out) {
    if (out == nullptr) return invalid_argument("cw_binomial_pmf: out must not be null");
    return wrap([&] { *out = new cw_pmf{cwchaos::dist::binomial_pmf(n, p)}; });
}

cw_status cw_hypergeometric_pmf(int64_t n, int64_t i, int64_t k, cw_pmf** out) {
    if (out == nullptr) return invalid_argument("cw_hypergeometric_pmf: out must not be null");
    return wrap([&] { *out = new cw_pmf{cwchaos::dist::hypergeometric_pmf(n, i, k)}; });
}

cw_status cw_beta_binomial_pmf(int64_t k, double a, double b, cw_pmf** out) {
    if (out == nullptr) return invalid_argument("cw_beta_binomial_pmf: out must not be null");
    return wrap([&] { *out = new cw_pmf{cwchaos::dist::beta_binomial_pmf(k, a, b)}; });
}

cw_status cw_mixing_point(double p, cw_mixing_law** out) {
    if (out == nullptr) return invalid_argument("cw_mixing_point: out must not be null");
    return wrap([&] { *out = new cw_mixing_law{cwchaos::dist::MixingLaw::point(p)}; });
}

cw_status cw_mixing_beta(double a, double b, cw_mixing_law** out) {
    if (out == nullptr) return invalid_argument("cw_mixing_beta: out must not be null");
    return wrap([&] { *out = new cw_mixing_law{cwchaos::dist::MixingLaw::beta(a, b)}; });
}

cw_status cw_mixing_finite(const double* weights, const cw_mixing_law* const* components,
                           int64_t count, cw_mixing_law** out) {
    if (out == nullptr || weights == nullptr || components == nullptr || count <= 0) {
        return invalid_argument("cw_mixing_finite: null input or nonpositive count");
    }
    for (int64_t i = 0; i < count; ++i) {
        if (components[i] == nullptr) {
            return invalid_argument("cw_mixing_finite: null component");
        }
    }
    return wrap([&] {
        std::vector<double> w(weights, weights + count);
        std::vector<cwchaos::dist::MixingLaw> comps;
        comps.reserve(static_cast<std::size_t>(count));
        for (int64_t i = 0; i < count; ++i) {
            comps.push_back(components[i]->value);
        }
        *out = new cw_mixing_law{cwchaos::dist::MixingLaw::finite(std::move(w), std::move(comps))};
    });
}

void cw_mixing_law_free(cw_mixing_law* law) { delete law; }

cw_status cw_mixed_binomial_pmf(int64_t k, const cw_mixing_law* law, cw_pmf** out) {
    if (out == nullptr || law == nullptr) {
        return invalid_argument("cw_mixed_binomial_pmf: null input");
    }
    return wrap([&] { *out = new cw_pmf{cwchaos::dist::mixed_binomial_pmf(k, law->value)}; });
}

cw_status cw_hypergeometric_mixture(int64_t n, const cw_pmf* weights, int64_t k, cw_pmf** out) {
    if (out == nullptr || weights == nullptr) {
        return invalid_argument("cw_hypergeometric_mixture: null input");
    }
    return wrap([&] {
        *out = new cw_pmf{cwchaos::dist::hypergeometric_mixture(n, weights->value, k)};
    });
}

cw_status cw_polya_urn_sample(int64_t k, double a, double b, uint64_t seed, int64_t* out) {
    if (out == nullptr) return invalid_argument("cw_polya_urn_sample: out must not be null");
    return wrap([&] { *out = cwchaos::dist::polya_urn_sample(k, a, b, seed); });
}

cw_status cw_tv_discrete(const cw_pmf* p, const cw_pmf* q, double* out) {
    if (out == nullptr || p == nullptr || q == nullptr) {
        return invalid_argument("cw_tv_discrete: null input");
    }
    return wrap([&] { *out = cwchaos::tv::tv_discrete(p->value, q->value); });
}

cw_status cw_gaussian_tv(double v1sq, double v2sq, double* out) {
    if (out == nullptr) return invalid_argument("cw_gaussian_tv: out must not be null");
    return wrap([&] { *out = cwchaos::tv::gaussian_tv(v1sq, v2sq); });
}

cw_status cw_gaussian_tv_quadrature(double v1sq, double v2sq, double* out) {
    if (out == nullptr) return invalid_argument("cw_gaussian_tv_quadrature: out must not be null");
    return wrap([&] { *out = cwchaos::tv::gaussian_tv_quadrature(v1sq, v2sq); });
}

cw_status cw_mixture_tv_limit(const double* weights, const double* v1sq, const double* v2sq,
                              int64_t count, double* out) {
    if (out == nullptr || weights == nullptr || v1sq == nullptr || v2sq == nullptr || count <= 0) {
        return invalid_argument("cw_mixture_tv_limit: null input or nonpositive count");
    }
    return wrap([&] {
        std::vector<std::pair<double, double>> pairs(static_cast<std::size_t>(count));
        for (int64_t i = 0; i < count; ++i) {
            pairs[static_cast<std::size_t>(i)] = {v1sq[i], v2sq[i]};
        }
        *out = cwchaos::tv::mixture_tv_limit({weights, static_cast<std::size_t>(count)}, pairs);
    });
}

cw_status cw_beta_param_match(double a, double sigma_sq, double* gamma1, double* gamma2) {
    return wrap([&] {
        const cwchaos::model::GammaPair g = cwchaos::analysis::beta_param_match(a, sigma_sq);
        if (gamma1) *gamma1 = g.gamma1;
        if (gamma2) *gamma2 = g.gamma2;
    });
}

cw_status cw_tv_limit_prediction(double beta, double h, double alpha, cw_regime* regime,
                                 double* predicted_tv, double* sigma_alpha_sq) {
    return wrap([&] {
        const cwchaos::model::ModelParams params(beta, h);
        const cwchaos::analysis::LimitPrediction p =
            cwchaos::analysis::predict_tv_limit(params, alpha);
        if (regime) *regime = to_c_regime(p.regime);
        if (predicted_tv) *predicted_tv = p.predicted_tv;
        if (sigma_alpha_sq) *sigma_alpha_sq = p.sigma_alpha_sq;
    });
}

cw_status cw_llt_sup_error(int64_t n, double beta, double h, double* out) {
    if (out == nullptr) return invalid_argument("cw_llt_sup_error: out must not be null");
    return wrap([&] {
        *out = cwchaos::analysis::llt_sup_error(n, cwchaos::model::ModelParams(beta, h));
    });
}

cw_status cw_beta_binomial_gap(int64_t n, int64_t k, double beta, double h, double* out) {
    if (out == nullptr) return invalid_argument("cw_beta_binomial_gap: out must not be null");
    return wrap([&] {
        *out = cwchaos::analysis::beta_binomial_gap(n, k, cwchaos::model::ModelParams(beta, h));
    });
}

cw_status cw_symmetric_mixture_gap(int64_t n, int64_t k, double beta, double* out) {
    if (out == nullptr) return invalid_argument("cw_symmetric_mixture_gap: out must not be null");
    return wrap([&] { *out = cwchaos::analysis::symmetric_mixture_gap(n, k, beta); });
}

cw_status cw_spins_for_alpha(double alpha, int64_t n, int64_t* out) {
    if (out == nullptr) return invalid_argument("cw_spins_for_alpha: out must not be null");
    return wrap([&] { *out = cwchaos::analysis::spins_for_alpha(alpha, n); });
}

cw_status cw_tv_convergence_table(double beta, double h, double alpha, const int64_t* ns,
                                  int64_t count, int threads, cw_table** out) {
    if (out == nullptr || (ns == nullptr && count > 0) || count < 0) {
        return invalid_argument("cw_tv_convergence_table: null input or negative count");
    }
    return wrap([&] {
        const cwchaos::model::ModelParams params(beta, h);
        std::vector<long long> values;
        values.reserve(static_cast<std::size_t>(count));
        for (int64_t i = 0; i < count; ++i) {
            values.push_back(ns[i]);
        }
        *out = new cw_table{
            cwchaos::analysis::tv_convergence_table(params, alpha, values, threads)};
    });
}

cw_status cw_critical_cdf_distance(int64_t n, double* out) {
    if (out == nullptr) return invalid_argument("cw_critical_cdf_distance: out must not be null");
    return wrap([&] { *out = cwchaos::analysis::critical_cdf_distance(n); });
}

int64_t cw_table_rows(const cw_table* table) {
    return table ? static_cast<int64_t>(table->value.rows().size()) : 0;
}

cw_status cw_table_row(const cw_table* table, int64_t index, int64_t* n, int64_t* k,
                       double* observed, double* predicted, double* gap) {
    if (table == nullptr) return invalid_argument("cw_table_row: null table");
    const auto rows = table->value.rows();
    if (index < 0 || static_cast<std::size_t>(index) >= rows.size()) {
        return invalid_argument("cw_table_row: index out of range");
    }
    const cwchaos::analysis::ConvergenceRow& row = rows[static_cast<std::size_t>(index)];
    if (n) *n = row.n;
    if (k) *k = row.k;
    if (observed) *observed = row.observed;
    if (predicted) *predicted = row.predicted;
    if (gap) *gap = row.gap;
    return CW_OK;
}

void cw_table_free(cw_table* table) { delete table; }

} // extern "C"
