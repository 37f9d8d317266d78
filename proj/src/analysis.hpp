#pragma once

#include <span>
#include <vector>

#include "dist.hpp"
#include "model.hpp"
#include "pmf.hpp"

namespace cwchaos::analysis {

// Beta parameters (gamma1, gamma2) whose mixed binomial matches mean n*a and
// variance n*sigma_sq (up to the O(1) convention of the matching system):
// gamma1 = a^2 (1-a) / (sigma_sq - a(1-a)), gamma2 = a (1-a)^2 / (same).
// Requires sigma_sq > a(1-a) strictly; throws DegenerateVarianceError at or
// below that boundary, where the mixing law collapses to a point mass.
model::GammaPair beta_param_match(double a, double sigma_sq);

// Predicted large-N total variation between the k-spin positive-count law
// (k ~ alpha N) and its product-measure reference.
struct LimitPrediction {
    model::Regime regime;
    double alpha;
    dist::MixingLaw reference_law; // the binomial / two-point-mixture reference
    double predicted_tv;
    double sigma_alpha_sq; // per-spin variance of the matched mixed binomial
};

// Reference mixing law of the chaos statement: Point(1/2) subcritical,
// Point((1+m)/2) in a field, the symmetric two-point mixture when beta > 1
// and h = 0. Throws CriticalPointError at (1, 0).
dist::MixingLaw reference_mixing_law(const model::ModelParams& params);

// The limiting TV value D(sigma_alpha_sq, (1-m^2)/4) with
// sigma_alpha_sq = ((1-m^2)/4) (1 + alpha beta (1-m^2) / (1 - beta(1-m^2))).
// Exactly zero at alpha = 0. Throws CriticalPointError at (1, 0).
LimitPrediction predict_tv_limit(const model::ModelParams& params, double alpha);

// sqrt(n)-scaled sup distance between the exact spin-count pmf and its
// Gaussian local-limit target (single component, or the symmetric two
// component mixture when beta > 1 and h = 0).
double llt_sup_error(long long n, const model::ModelParams& params);

// TV between the exact k-spin count law and the moment-matched beta-binomial
// approximant Bin(k, Beta(gamma1 n, gamma2 n)). Subcritical or field regime.
double beta_binomial_gap(long long n, long long k, const model::ModelParams& params);

// Supercritical analogue with the symmetric two-component beta mixture.
// Requires beta > 1 (and h = 0).
double symmetric_mixture_gap(long long n, long long k, double beta);

struct ConvergenceRow {
    long long n;
    long long k;
    double observed;
    double predicted;
    double gap;
};

class ConvergenceTable {
public:
    explicit ConvergenceTable(std::vector<ConvergenceRow> rows) : rows_(std::move(rows)) {}
    std::span<const ConvergenceRow> rows() const { return rows_; }

private:
    std::vector<ConvergenceRow> rows_;
};

// k(n) for a linear-ratio study: round(alpha n) with ties to even, clamped
// to [1, n]. alpha = 0 selects the canonical sublinear sequence ceil(sqrt(n)).
long long spins_for_alpha(double alpha, long long n);

// Observed vs predicted TV for each n: observed is the distance between the
// exact k-spin count law and the regime reference, predicted is the
// theoretical limit. Rows may be computed on `threads` workers (0 = all
// hardware threads); ordering and values do not depend on the thread count.
ConvergenceTable tv_convergence_table(const model::ModelParams& params, double alpha,
                                      std::span<const long long> ns, int threads = 1);

// Kolmogorov distance between the law of n^{1/4} (2 P_n / n - 1) at the
// critical point and the quartic limit distribution.
double critical_cdf_distance(long long n);

} // namespace cwchaos::analysis
