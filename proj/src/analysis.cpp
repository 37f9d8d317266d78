#include "analysis.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "errors.hpp"
#include "quadrature.hpp"
#include "specfn.hpp"
#include "tv.hpp"

namespace cwchaos::analysis {

model::GammaPair beta_param_match(double a, double sigma_sq) {
    if (!(a > 0.0 && a < 1.0)) {
        throw DomainError("beta_param_match: a must lie in (0, 1)");
    }
    const double floor = a * (1.0 - a);
    if (!(sigma_sq > floor)) {
        throw DegenerateVarianceError(
            "beta_param_match: sigma_sq must exceed a(1-a); the mixing law degenerates");
    }
    const double excess = sigma_sq - floor;
    return model::GammaPair{a * a * (1.0 - a) / excess, a * (1.0 - a) * (1.0 - a) / excess};
}

dist::MixingLaw reference_mixing_law(const model::ModelParams& params) {
    switch (params.regime()) {
        case model::Regime::subcritical:
            return dist::MixingLaw::point(0.5);
        case model::Regime::field: {
            const double m = model::magnetization_root(params);
            return dist::MixingLaw::point((1.0 + m) / 2.0);
        }
        case model::Regime::supercritical: {
            const double m = model::magnetization_root(params);
            return dist::MixingLaw::finite(
                {0.5, 0.5},
                {dist::MixingLaw::point((1.0 + m) / 2.0), dist::MixingLaw::point((1.0 - m) / 2.0)});
        }
        case model::Regime::critical:
            break;
    }
    throw CriticalPointError("reference mixing law is undefined at (beta, h) = (1, 0)");
}

namespace {

double sigma_alpha_sq_value(const model::ModelParams& params, double alpha) {
    const double beta = params.beta();
    const double m = model::magnetization_root(params);
    const double one_m2 = (1.0 - m) * (1.0 + m);
    return one_m2 / 4.0 * (1.0 + alpha * beta * one_m2 / (1.0 - beta * one_m2));
}

} // namespace

LimitPrediction predict_tv_limit(const model::ModelParams& params, double alpha) {
    if (params.is_critical()) {
        throw CriticalPointError("tv limit prediction is undefined at (beta, h) = (1, 0)");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("predict_tv_limit: alpha must lie in [0, 1]");
    }
    const double m = model::magnetization_root(params);
    const double base = (1.0 - m * m) / 4.0;
    const double sigma_alpha = sigma_alpha_sq_value(params, alpha);
    const double predicted = alpha == 0.0 ? 0.0 : tv::gaussian_tv(sigma_alpha, base);
    return LimitPrediction{params.regime(), alpha, reference_mixing_law(params), predicted,
                           sigma_alpha};
}

double llt_sup_error(long long n, const model::ModelParams& params) {
    if (n < 1) {
        throw DomainError("llt_sup_error: n must be >= 1");
    }
    if (params.is_critical()) {
        throw CriticalPointError("llt target is undefined at (beta, h) = (1, 0)");
    }
    const model::Magnetization mag = model::solve_magnetization(params);
    const double nn = static_cast<double>(n);
    const double v2 = nn * mag.v2 / 4.0;
    std::vector<tv::GaussianComponent> comps;
    if (params.regime() == model::Regime::supercritical) {
        comps = {{0.5, nn * (1.0 + mag.m) / 2.0, v2}, {0.5, nn * (1.0 - mag.m) / 2.0, v2}};
    } else {
        comps = {{1.0, nn * (1.0 + mag.m) / 2.0, v2}};
    }
    const tv::GaussianMixture target(std::move(comps));
    const Pmf pmf = model::exact_spin_count_pmf(n, params);
    double sup = 0.0;
    for (long long l = 0; l <= n; ++l) {
        sup = std::max(sup, std::abs(pmf.at(l) - target.density(static_cast<double>(l))));
    }
    return std::sqrt(nn) * sup;
}

double beta_binomial_gap(long long n, long long k, const model::ModelParams& params) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("beta_binomial_gap: requires 1 <= k <= n");
    }
    const model::Regime regime = params.regime();
    if (regime == model::Regime::critical) {
        throw CriticalPointError("beta-binomial approximant is undefined at (beta, h) = (1, 0)");
    }
    if (regime == model::Regime::supercritical) {
        throw DomainError("beta_binomial_gap: requires the subcritical or field regime");
    }
    const model::GammaPair g = model::gamma_pair(params);
    const double nn = static_cast<double>(n);
    const Pmf approx = dist::beta_binomial_pmf(k, g.gamma1 * nn, g.gamma2 * nn);
    return tv::tv_discrete(dist::marginal_spin_count_pmf(n, k, params), approx);
}

double symmetric_mixture_gap(long long n, long long k, double beta) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("symmetric_mixture_gap: requires 1 <= k <= n");
    }
    if (beta == 1.0) {
        throw CriticalPointError("symmetric mixture approximant is undefined at (beta, h) = (1, 0)");
    }
    if (!(beta > 1.0)) {
        throw DomainError("symmetric_mixture_gap: requires beta > 1 (and h = 0)");
    }
    const model::ModelParams params(beta, 0.0);
    const model::GammaPair g = model::gamma_pair(params);
    const double nn = static_cast<double>(n);
    const dist::MixingLaw law = dist::MixingLaw::finite(
        {0.5, 0.5}, {dist::MixingLaw::beta(g.gamma1 * nn, g.gamma2 * nn),
                     dist::MixingLaw::beta(g.gamma2 * nn, g.gamma1 * nn)});
    return tv::tv_discrete(dist::marginal_spin_count_pmf(n, k, params),
                           dist::mixed_binomial_pmf(k, law));
}

long long spins_for_alpha(double alpha, long long n) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("spins_for_alpha: alpha must lie in [0, 1]");
    }
    if (n < 1) {
        throw DomainError("spins_for_alpha: n must be >= 1");
    }
    if (alpha == 0.0) {
        return static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(n))));
    }
    // nearbyint under the default rounding mode: ties to even
    const long long k = static_cast<long long>(std::nearbyint(alpha * static_cast<double>(n)));
    return std::min(std::max<long long>(k, 1), n);
}

ConvergenceTable tv_convergence_table(const model::ModelParams& params, double alpha,
                                      std::span<const long long> ns, int threads) {
    if (ns.empty()) {
        return ConvergenceTable({});
    }
    const LimitPrediction limit = predict_tv_limit(params, alpha);
    std::vector<ConvergenceRow> rows(ns.size());
    const auto compute_row = [&](std::size_t idx) {
        const long long n = ns[idx];
        const long long k = spins_for_alpha(alpha, n);
        const Pmf marginal = dist::marginal_spin_count_pmf(n, k, params);
        const Pmf reference = dist::mixed_binomial_pmf(k, limit.reference_law);
        const double observed = tv::tv_discrete(marginal, reference);
        rows[idx] = ConvergenceRow{n, k, observed, limit.predicted_tv,
                                   std::abs(observed - limit.predicted_tv)};
    };

    unsigned worker_count = threads > 0 ? static_cast<unsigned>(threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    worker_count = std::min<unsigned>(worker_count, static_cast<unsigned>(ns.size()));
    if (worker_count <= 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            compute_row(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> failures(worker_count);
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < ns.size();
                         i = next.fetch_add(1)) {
                        compute_row(i);
                    }
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
        for (const std::exception_ptr& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }
    return ConvergenceTable(std::move(rows));
}

double critical_cdf_distance(long long n) {
    if (n < 2) {
        throw DomainError("critical_cdf_distance: n must be >= 2");
    }
    const model::ModelParams critical(1.0, 0.0);
    const Pmf pmf = model::exact_spin_count_pmf(n, critical);
    const double scale = std::pow(static_cast<double>(n), 0.25);
    const auto atom = [&](long long l) {
        return scale * (2.0 * static_cast<double>(l) / static_cast<double>(n) - 1.0);
    };

    // Limit cdf accumulated panel by panel along the atom grid.
    const double left_tail = std::min(atom(0), -10.0) - 2.0;
    double limit_cdf = quadrature::adaptive_simpson(model::critical_density, left_tail, atom(0), 1e-13);
    double mass_below = 0.0;
    double dist = 0.0;
    for (long long l = 0; l <= n; ++l) {
        if (l > 0) {
            limit_cdf += quadrature::adaptive_simpson(model::critical_density, atom(l - 1), atom(l), 1e-13);
        }
        const double mass_through = mass_below + pmf.at(l);
        dist = std::max({dist, std::abs(limit_cdf - mass_below), std::abs(limit_cdf - mass_through)});
        mass_below = mass_through;
    }
    return dist;
}

} // namespace cwchaos::analysis
