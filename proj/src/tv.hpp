#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pmf.hpp"

namespace cwchaos::tv {

// Total variation distance between two normalized integer-supported pmfs:
// half the l1 distance over the union of supports.
double tv_discrete(const Pmf& p, const Pmf& q);

// TV distance between centred Gaussians with variances v1sq and v2sq, in
// closed form via the single density-crossing point t* of the two densities:
// D = 2 (Phi(t*/s2) - Phi(t*/s1)) with s1 >= s2 the standard deviations.
double gaussian_tv(double v1sq, double v2sq);

// The same quantity by direct adaptive quadrature of half the absolute
// density difference; the oracle the closed form is validated against.
double gaussian_tv_quadrature(double v1sq, double v2sq);

// Limiting TV between two sequences obeying matched Gaussian-mixture local
// limit theorems with pairwise distinct component means:
// sum_j weights[j] * D(variance_pairs[j].first, variance_pairs[j].second).
// The distinct-means hypothesis is the caller's obligation; component means
// do not enter the value.
double mixture_tv_limit(std::span<const double> weights,
                        std::span<const std::pair<double, double>> variance_pairs);

struct GaussianComponent {
    double weight;
    double mean;
    double variance;
};

// Finite Gaussian mixture; weights must sum to 1 and variances be positive.
class GaussianMixture {
public:
    explicit GaussianMixture(std::vector<GaussianComponent> components);

    double density(double t) const;
    std::span<const GaussianComponent> components() const { return components_; }

private:
    std::vector<GaussianComponent> components_;
};

} // namespace cwchaos::tv
