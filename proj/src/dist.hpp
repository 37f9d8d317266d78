#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "model.hpp"
#include "pmf.hpp"

namespace cwchaos::dist {

// Success-probability law of a mixed binomial: a point mass, a beta law, or
// a finite convex combination of those two (nesting depth at most 2).
class MixingLaw {
public:
    struct Point {
        double p;
    };
    struct Beta {
        double a;
        double b;
    };
    struct Finite {
        std::vector<double> weights;
        std::vector<MixingLaw> components;
    };

    static MixingLaw point(double p);
    static MixingLaw beta(double a, double b);
    static MixingLaw finite(std::vector<double> weights, std::vector<MixingLaw> components);

    const std::variant<Point, Beta, Finite>& value() const { return v_; }

private:
    explicit MixingLaw(std::variant<Point, Beta, Finite> v) : v_(std::move(v)) {}
    std::variant<Point, Beta, Finite> v_;
};

// Bin(n, p) on {0, ..., n}.
Pmf binomial_pmf(long long n, double p);

// HyperG(n, i, k) embedded into {0, ..., k}; points outside the
// combinatorial support carry -inf.
Pmf hypergeometric_pmf(long long n, long long i, long long k);

// Beta-binomial: P(l) = C(k,l) B(l+a, k-l+b) / B(a,b), evaluated term by
// term in log space for uniform accuracy over the whole support.
Pmf beta_binomial_pmf(long long k, double a, double b);

// Mixed binomial Bin(k, law).
Pmf mixed_binomial_pmf(long long k, const MixingLaw& law);

// sum_i weights(i) HyperG(n, i, k) on {0, ..., k}; exact O(n k) double loop
// in log space. The weights' support must lie within {0, ..., n}.
Pmf hypergeometric_mixture(long long n, const Pmf& weights, long long k);

// Exact law of the positive-spin count among k of n spins under the Gibbs
// measure: the hypergeometric mixture driven by the full spin-count law.
Pmf marginal_spin_count_pmf(long long n, long long k, const model::ModelParams& params);

// One draw from the beta-binomial(k, a, b) law by sequential reinforced
// drawing from an urn seeded with weights (a, b); deterministic given seed.
long long polya_urn_sample(long long k, double a, double b, std::uint64_t seed);

} // namespace cwchaos::dist
