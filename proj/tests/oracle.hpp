#pragma once

// Independent references used by the test suites. Nothing here goes through
// the library's special-function or pmf machinery: enumeration works on raw
// Gibbs weights, binomials come from Pascal's triangle, and the integrator
// is a self-contained composite Simpson with panel doubling.

#include <cmath>
#include <cstdint>
#include <vector>

namespace cwchaos::oracle {

// P(positive spins among the first k of n) by enumerating all 2^n spin
// configurations under the Gibbs weights; n <= ~20.
std::vector<double> brute_force_marginal(int n, int k, double beta, double h);

// ln of the configuration sum, via long double accumulation.
double brute_force_log_partition(int n, double beta, double h);

// C(n, k) exactly; n <= 62 keeps the result within 64 bits.
std::uint64_t exact_binomial(int n, int k);

namespace detail {

template <class F>
double simpson_fixed(const F& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

} // namespace detail

// Composite Simpson, doubling panels until two refinements agree to tol.
template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-12) {
    int panels = 64;
    double prev = detail::simpson_fixed(f, a, b, panels);
    for (int round = 0; round < 18; ++round) {
        panels *= 2;
        const double cur = detail::simpson_fixed(f, a, b, panels);
        if (std::abs(cur - prev) <= tol) {
            return cur;
        }
        prev = cur;
    }
    return prev;
}

} // namespace cwchaos::oracle
