#pragma once

#include "pmf.hpp"

namespace cwchaos::model {

// Parameter regime; a pure function of (beta, h). The critical point
// (beta, h) = (1, 0) is representable but the limiting variance and the
// mixing parameters are undefined there.
enum class Regime { subcritical, supercritical, field, critical };

const char* regime_name(Regime r);

class ModelParams {
public:
    // beta > 0 (inverse temperature), h any real (external field).
    ModelParams(double beta, double h);

    double beta() const { return beta_; }
    double h() const { return h_; }
    Regime regime() const;
    bool is_critical() const { return regime() == Regime::critical; }

private:
    double beta_;
    double h_;
};

// Which root of z = tanh(beta z + h) the solver reports. For h = 0 and
// beta > 1 the two nonzero roots come in a +/- pair; the solver returns the
// positive one and callers build the symmetric mixture explicitly.
enum class Branch { unique, positive, negative };

struct Magnetization {
    double m;      // largest-in-absolute-value root of z = tanh(beta z + h)
    double v2;     // limiting variance (1-m^2)/(1-beta(1-m^2))
    Branch branch;
};

// Beta mixing parameters matched to the spin-count limit law.
struct GammaPair {
    double gamma1;
    double gamma2;
};

// Root of z = tanh(beta z + h), valid in every regime (0 at the critical
// point). Bisection, tolerance 1e-14.
double magnetization_root(const ModelParams& params);

// Root plus limiting variance; throws CriticalPointError at (1, 0).
Magnetization solve_magnetization(const ModelParams& params);

// (1-m^2)/(1-beta(1-m^2)); throws CriticalPointError at (1, 0).
double limit_variance(const ModelParams& params);

// gamma1 = (1-beta(1-m^2))/(2 beta (1-m)), gamma2 likewise with (1+m).
// Throws CriticalPointError at (1, 0).
GammaPair gamma_pair(const ModelParams& params);

// Law of the number of positive spins among n under the Gibbs measure:
// P(l) proportional to C(n,l) exp(beta (2l-n)^2 / (2n) + h (2l-n)).
// Valid for every (beta, h) including the critical point.
Pmf exact_spin_count_pmf(long long n, const ModelParams& params);

// ln Z_n(beta, h), summed exactly over the spin count in log space.
double log_partition_exact(long long n, const ModelParams& params);

// Asymptotic ln Z_n for beta > 1, h = 0:
// ln[ (2 v / sqrt(1-m^2)) 2^n exp(-n (I(m) - beta m^2 / 2)) ].
double log_partition_asymptotic(long long n, double beta);

// I(x) = ((1+x) ln(1+x) + (1-x) ln(1-x)) / 2 on [-1, 1].
double magnetization_entropy(double x);

// Limiting density of n^{1/4} m_n at the critical point:
// f(x) = exp(-x^4/12) / integral of exp(-y^4/12).
double critical_density(double x);

} // namespace cwchaos::model
