#include "tv.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"
#include "specfn.hpp"

namespace cwchaos::tv {

double tv_discrete(const Pmf& p, const Pmf& q) {
    if (!p.normalized() || !q.normalized()) {
        throw UnnormalizedPmfError("tv_discrete: both pmfs must be normalized");
    }
    const long long lo = std::min(p.offset(), q.offset());
    const long long hi = std::max(p.last(), q.last());
    double sum = 0.0;
    for (long long l = lo; l <= hi; ++l) {
        sum += std::abs(p.at(l) - q.at(l));
    }
    return 0.5 * sum;
}

namespace {

void check_variances(double v1sq, double v2sq) {
    if (!(v1sq > 0.0) || !(v2sq > 0.0) || !std::isfinite(v1sq) || !std::isfinite(v2sq)) {
        throw DomainError("gaussian tv: variances must be positive and finite");
    }
}

} // namespace

double gaussian_tv(double v1sq, double v2sq) {
    check_variances(v1sq, v2sq);
    if (v1sq == v2sq) {
        return 0.0;
    }
    const double hi = std::max(v1sq, v2sq);
    const double lo = std::min(v1sq, v2sq);
    const double s1 = std::sqrt(hi);
    const double s2 = std::sqrt(lo);
    // log1p form keeps t* accurate for near-equal variances.
    const double t_star = s1 * s2 * std::sqrt(std::log1p((hi - lo) / lo) / (hi - lo));
    return 2.0 * (specfn::std_normal_cdf(t_star / s2) - specfn::std_normal_cdf(t_star / s1));
}

double gaussian_tv_quadrature(double v1sq, double v2sq) {
    check_variances(v1sq, v2sq);
    if (v1sq == v2sq) {
        return 0.0;
    }
    const double s_max = std::sqrt(std::max(v1sq, v2sq));
    const auto integrand = [&](double t) {
        return std::abs(specfn::gaussian_pdf(t, 0.0, v1sq) - specfn::gaussian_pdf(t, 0.0, v2sq));
    };
    // Even integrand; tail mass beyond 12 standard deviations is < 1e-32.
    return quadrature::adaptive_simpson(integrand, 0.0, 12.0 * s_max, 1e-11);
}

double mixture_tv_limit(std::span<const double> weights,
                        std::span<const std::pair<double, double>> variance_pairs) {
    if (weights.empty() || weights.size() != variance_pairs.size()) {
        throw DomainError("mixture_tv_limit: weights and variance pairs must match and be non-empty");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw DomainError("mixture_tv_limit: weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("mixture_tv_limit: weights must sum to 1");
    }
    double out = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        out += weights[j] * gaussian_tv(variance_pairs[j].first, variance_pairs[j].second);
    }
    return out;
}

GaussianMixture::GaussianMixture(std::vector<GaussianComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) {
        throw DomainError("GaussianMixture: at least one component required");
    }
    double total = 0.0;
    for (const GaussianComponent& c : components_) {
        if (!(c.weight > 0.0) || !(c.variance > 0.0)) {
            throw DomainError("GaussianMixture: weights and variances must be positive");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("GaussianMixture: weights must sum to 1");
    }
}

double GaussianMixture::density(double t) const {
    double d = 0.0;
    for (const GaussianComponent& c : components_) {
        d += c.weight * specfn::gaussian_pdf(t, c.mean, c.variance);
    }
    return d;
}

} // namespace cwchaos::tv
