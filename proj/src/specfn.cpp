#include "specfn.hpp"

#include <cmath>

#include "errors.hpp"

namespace cwchaos::specfn {

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive");
    }
    return std::lgamma(x);
}

double log_binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) {
        return neg_inf;
    }
    // Extended precision keeps the absolute error of the difference below
    // ~1e-13 even for n ~ 1e6, where the individual log factorials are large.
    // The parenthesization keeps the value bit-identical under k <-> n-k.
    const long double lf_n = std::lgamma(static_cast<long double>(n) + 1.0L);
    const long double lf_k = std::lgamma(static_cast<long double>(k) + 1.0L);
    const long double lf_nk = std::lgamma(static_cast<long double>(n - k) + 1.0L);
    return static_cast<double>(lf_n - (lf_k + lf_nk));
}

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("log_beta: arguments must be positive");
    }
    return (std::lgamma(a) + std::lgamma(b)) - std::lgamma(a + b);
}

double gaussian_pdf(double t, double m, double v2) {
    if (!(v2 > 0.0)) {
        throw DomainError("gaussian_pdf: variance must be positive");
    }
    const double d = t - m;
    return std::exp(-d * d / (2.0 * v2)) / std::sqrt(2.0 * M_PI * v2);
}

double std_normal_cdf(double t) {
    return 0.5 * std::erfc(-t / std::sqrt(2.0));
}

double log_sum_exp(std::span<const double> values) {
    double max = neg_inf;
    for (double v : values) {
        if (v > max) max = v;
    }
    if (max == neg_inf) {
        return neg_inf; // empty input or all mass zero
    }
    double sum = 0.0;
    for (double v : values) {
        sum += std::exp(v - max);
    }
    return max + std::log(sum);
}

void LogSumExpAccumulator::add(double log_value) {
    if (log_value == neg_inf) {
        return;
    }
    if (log_value <= max_) {
        sum_ += std::exp(log_value - max_);
    } else {
        sum_ = sum_ * std::exp(max_ - log_value) + 1.0;
        max_ = log_value;
    }
}

double LogSumExpAccumulator::value() const {
    if (max_ == neg_inf) {
        return neg_inf;
    }
    return max_ + std::log(sum_);
}

} // namespace cwchaos::specfn
