#include "model.hpp"

#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"
#include "specfn.hpp"

namespace cwchaos::model {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::subcritical: return "subcritical";
        case Regime::supercritical: return "supercritical";
        case Regime::field: return "field";
        case Regime::critical: return "critical";
    }
    return "unknown";
}

ModelParams::ModelParams(double beta, double h) : beta_(beta), h_(h) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("ModelParams: beta must be positive and finite");
    }
    if (!std::isfinite(h)) {
        throw DomainError("ModelParams: h must be finite");
    }
}

Regime ModelParams::regime() const {
    if (h_ != 0.0) return Regime::field;
    if (beta_ < 1.0) return Regime::subcritical;
    if (beta_ > 1.0) return Regime::supercritical;
    return Regime::critical;
}

namespace {

[[noreturn]] void throw_critical(const char* what) {
    throw CriticalPointError(std::string(what) + " is undefined at (beta, h) = (1, 0)");
}

// Largest positive root of g(z) = z - tanh(beta z + h) for h >= 0.
// g < 0 just above the lower bracket end and g > 0 just below 1, so plain
// bisection converges; the trivial root z = 0 (h = 0 case) is excluded by
// the 1e-15 nudge.
double bisect_positive_root(double beta, double h) {
    const auto g = [&](double z) { return z - std::tanh(beta * z + h); };
    double lo = std::max(0.0, std::tanh(h)) + 1e-15;
    double hi = 1.0 - 1e-15;
    if (g(hi) <= 0.0) {
        return hi; // root indistinguishable from 1 at double precision
    }
    if (g(lo) >= 0.0) {
        return lo;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double variance_from_root(double beta, double m) {
    // (1-m)(1+m) stays accurate as |m| -> 1 where 1 - m*m cancels
    const double one_m2 = (1.0 - m) * (1.0 + m);
    return one_m2 / (1.0 - beta * one_m2);
}

} // namespace

double magnetization_root(const ModelParams& params) {
    const double beta = params.beta();
    const double h = params.h();
    if (h == 0.0 && beta <= 1.0) {
        return 0.0;
    }
    if (h < 0.0) {
        return -bisect_positive_root(beta, -h);
    }
    return bisect_positive_root(beta, h);
}

Magnetization solve_magnetization(const ModelParams& params) {
    if (params.is_critical()) {
        throw_critical("limiting variance");
    }
    const double m = magnetization_root(params);
    Magnetization out;
    out.m = m;
    out.v2 = variance_from_root(params.beta(), m);
    out.branch = params.regime() == Regime::supercritical ? Branch::positive : Branch::unique;
    return out;
}

double limit_variance(const ModelParams& params) {
    if (params.is_critical()) {
        throw_critical("limiting variance");
    }
    return variance_from_root(params.beta(), magnetization_root(params));
}

GammaPair gamma_pair(const ModelParams& params) {
    if (params.is_critical()) {
        throw_critical("gamma pair");
    }
    const double beta = params.beta();
    const double m = magnetization_root(params);
    const double num = 1.0 - beta * (1.0 - m) * (1.0 + m);
    return GammaPair{num / (2.0 * beta * (1.0 - m)), num / (2.0 * beta * (1.0 + m))};
}

Pmf exact_spin_count_pmf(long long n, const ModelParams& params) {
    if (n < 1) {
        throw DomainError("exact_spin_count_pmf: n must be >= 1");
    }
    const double beta = params.beta();
    const double h = params.h();
    std::vector<double> log_w(static_cast<std::size_t>(n) + 1);
    for (long long l = 0; l <= n; ++l) {
        const double s = static_cast<double>(2 * l - n);
        log_w[static_cast<std::size_t>(l)] =
            specfn::log_binomial(n, l) + beta * s * s / (2.0 * static_cast<double>(n)) + h * s;
    }
    return Pmf(0, std::move(log_w)).normalize();
}

double log_partition_exact(long long n, const ModelParams& params) {
    if (n < 1) {
        throw DomainError("log_partition_exact: n must be >= 1");
    }
    const double beta = params.beta();
    const double h = params.h();
    std::vector<double> log_w(static_cast<std::size_t>(n) + 1);
    for (long long l = 0; l <= n; ++l) {
        const double s = static_cast<double>(2 * l - n);
        log_w[static_cast<std::size_t>(l)] =
            specfn::log_binomial(n, l) + beta * s * s / (2.0 * static_cast<double>(n)) + h * s;
    }
    return specfn::log_sum_exp(log_w);
}

double magnetization_entropy(double x) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw DomainError("magnetization_entropy: argument must lie in [-1, 1]");
    }
    // (1 +/- x) log(1 +/- x) -> 0 at the respective endpoint
    const double plus = x > -1.0 ? (1.0 + x) * std::log1p(x) : 0.0;
    const double minus = x < 1.0 ? (1.0 - x) * std::log1p(-x) : 0.0;
    return 0.5 * (plus + minus);
}

double log_partition_asymptotic(long long n, double beta) {
    if (!(beta > 1.0)) {
        throw DomainError("log_partition_asymptotic: requires beta > 1 (and h = 0)");
    }
    if (n < 1) {
        throw DomainError("log_partition_asymptotic: n must be >= 1");
    }
    const ModelParams params(beta, 0.0);
    const Magnetization mag = solve_magnetization(params);
    const double m = mag.m;
    const double nn = static_cast<double>(n);
    return std::log(2.0 * std::sqrt(mag.v2) / std::sqrt(1.0 - m * m)) + nn * std::log(2.0) -
           nn * (magnetization_entropy(m) - beta * m * m / 2.0);
}

double critical_density(double x) {
    static const double normalizer = 2.0 * quadrature::adaptive_simpson(
        [](double y) { return std::exp(-y * y * y * y / 12.0); }, 0.0, 10.0, 1e-11);
    return std::exp(-x * x * x * x / 12.0) / normalizer;
}

} // namespace cwchaos::model
