#pragma once

#include <limits>
#include <span>

namespace cwchaos::specfn {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// ln C(n, k); -inf when the pair selects nothing (k < 0, k > n or n < 0).
// Symmetric under k <-> n-k as computed.
double log_binomial(long long n, long long k);

// ln B(a, b) for a, b > 0. Symmetric in (a, b) as computed.
double log_beta(double a, double b);

// Density of a Gaussian with mean m and variance v2 > 0 at t.
double gaussian_pdf(double t, double m, double v2);

// Standard normal cdf.
double std_normal_cdf(double t);

// ln sum_i exp(values[i]), shifted by the running maximum. Empty -> -inf.
double log_sum_exp(std::span<const double> values);

// Streaming variant for accumulations too large to materialize.
class LogSumExpAccumulator {
public:
    void add(double log_value);
    double value() const;

private:
    double max_ = neg_inf;
    double sum_ = 0.0; // sum of exp(v - max_)
};

} // namespace cwchaos::specfn
