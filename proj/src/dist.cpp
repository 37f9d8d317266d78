#include "dist.hpp"

#include <cmath>
#include <utility>

#include "errors.hpp"
#include "specfn.hpp"

namespace cwchaos::dist {

using specfn::neg_inf;

MixingLaw MixingLaw::point(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("MixingLaw::point: p must lie in [0, 1]");
    }
    return MixingLaw(Point{p});
}

MixingLaw MixingLaw::beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("MixingLaw::beta: parameters must be positive and finite");
    }
    return MixingLaw(Beta{a, b});
}

MixingLaw MixingLaw::finite(std::vector<double> weights, std::vector<MixingLaw> components) {
    if (weights.empty() || weights.size() != components.size()) {
        throw DomainError("MixingLaw::finite: weights and components must match and be non-empty");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw DomainError("MixingLaw::finite: weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("MixingLaw::finite: weights must sum to 1");
    }
    for (const MixingLaw& c : components) {
        if (std::holds_alternative<Finite>(c.value())) {
            throw DomainError("MixingLaw::finite: components must be point or beta laws");
        }
    }
    return MixingLaw(Finite{std::move(weights), std::move(components)});
}

Pmf binomial_pmf(long long n, double p) {
    if (n < 0) {
        throw DomainError("binomial_pmf: n must be nonnegative");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("binomial_pmf: p must lie in [0, 1]");
    }
    if (p == 0.0 || p == 1.0) {
        std::vector<double> log_p(static_cast<std::size_t>(n) + 1, neg_inf);
        log_p[p == 0.0 ? 0 : static_cast<std::size_t>(n)] = 0.0;
        Pmf out(0, std::move(log_p));
        return out.normalize();
    }
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    std::vector<double> log_p(static_cast<std::size_t>(n) + 1);
    for (long long l = 0; l <= n; ++l) {
        log_p[static_cast<std::size_t>(l)] = specfn::log_binomial(n, l) +
                                             static_cast<double>(l) * lp +
                                             static_cast<double>(n - l) * lq;
    }
    return Pmf(0, std::move(log_p)).normalize();
}

Pmf hypergeometric_pmf(long long n, long long i, long long k) {
    if (n < 0 || i < 0 || k < 0 || i > n || k > n) {
        throw DomainError("hypergeometric_pmf: requires 0 <= i <= n and 0 <= k <= n");
    }
    const double log_cnk = specfn::log_binomial(n, k);
    std::vector<double> log_p(static_cast<std::size_t>(k) + 1, neg_inf);
    const long long j_lo = std::max<long long>(0, k - (n - i));
    const long long j_hi = std::min(i, k);
    for (long long j = j_lo; j <= j_hi; ++j) {
        log_p[static_cast<std::size_t>(j)] =
            specfn::log_binomial(i, j) + specfn::log_binomial(n - i, k - j) - log_cnk;
    }
    return Pmf(0, std::move(log_p)).normalize();
}

Pmf beta_binomial_pmf(long long k, double a, double b) {
    if (k < 0) {
        throw DomainError("beta_binomial_pmf: k must be nonnegative");
    }
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("beta_binomial_pmf: parameters must be positive");
    }
    const double log_b_ab = specfn::log_beta(a, b);
    std::vector<double> log_p(static_cast<std::size_t>(k) + 1);
    for (long long l = 0; l <= k; ++l) {
        log_p[static_cast<std::size_t>(l)] =
            specfn::log_binomial(k, l) +
            specfn::log_beta(static_cast<double>(l) + a, static_cast<double>(k - l) + b) -
            log_b_ab;
    }
    return Pmf(0, std::move(log_p)).normalize();
}

Pmf mixed_binomial_pmf(long long k, const MixingLaw& law) {
    if (k < 0) {
        throw DomainError("mixed_binomial_pmf: k must be nonnegative");
    }
    struct Visitor {
        long long k;
        Pmf operator()(const MixingLaw::Point& p) const { return binomial_pmf(k, p.p); }
        Pmf operator()(const MixingLaw::Beta& b) const { return beta_binomial_pmf(k, b.a, b.b); }
        Pmf operator()(const MixingLaw::Finite& f) const {
            std::vector<Pmf> parts;
            parts.reserve(f.components.size());
            for (const MixingLaw& c : f.components) {
                parts.push_back(mixed_binomial_pmf(k, c));
            }
            std::vector<double> log_p(static_cast<std::size_t>(k) + 1);
            std::vector<double> terms(parts.size());
            for (long long l = 0; l <= k; ++l) {
                for (std::size_t c = 0; c < parts.size(); ++c) {
                    terms[c] = f.weights[c] > 0.0
                                   ? std::log(f.weights[c]) + parts[c].log_at(l)
                                   : neg_inf;
                }
                log_p[static_cast<std::size_t>(l)] = specfn::log_sum_exp(terms);
            }
            return Pmf(0, std::move(log_p)).normalize();
        }
    };
    return std::visit(Visitor{k}, law.value());
}

Pmf hypergeometric_mixture(long long n, const Pmf& weights, long long k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("hypergeometric_mixture: requires 0 <= k <= n");
    }
    if (weights.offset() < 0 || weights.last() > n) {
        throw DomainError("hypergeometric_mixture: weights support must lie within {0, ..., n}");
    }
    // Log-factorial table; lgamma per entry keeps each value at full accuracy.
    std::vector<double> lf(static_cast<std::size_t>(n) + 1);
    for (long long v = 0; v <= n; ++v) {
        lf[static_cast<std::size_t>(v)] = std::lgamma(static_cast<double>(v) + 1.0);
    }
    const auto log_choose = [&](long long a, long long c) {
        return lf[static_cast<std::size_t>(a)] -
               (lf[static_cast<std::size_t>(c)] + lf[static_cast<std::size_t>(a - c)]);
    };
    const double log_cnk = log_choose(n, k);

    std::vector<double> log_p(static_cast<std::size_t>(k) + 1, neg_inf);
    for (long long j = 0; j <= k; ++j) {
        // HyperG(n, i, k)({j}) > 0 requires j <= i and k - j <= n - i.
        const long long i_lo = std::max(j, weights.offset());
        const long long i_hi = std::min(n - k + j, weights.last());
        specfn::LogSumExpAccumulator acc;
        for (long long i = i_lo; i <= i_hi; ++i) {
            const double lw = weights.log_at(i);
            if (lw == neg_inf) continue;
            acc.add(lw + log_choose(i, j) + log_choose(n - i, k - j) - log_cnk);
        }
        log_p[static_cast<std::size_t>(j)] = acc.value();
    }
    return Pmf(0, std::move(log_p)).normalize();
}

Pmf marginal_spin_count_pmf(long long n, long long k, const model::ModelParams& params) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("marginal_spin_count_pmf: requires 1 <= k <= n");
    }
    return hypergeometric_mixture(n, model::exact_spin_count_pmf(n, params), k);
}

namespace {

// splitmix64; portable and fully determined by the seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

} // namespace

long long polya_urn_sample(long long k, double a, double b, std::uint64_t seed) {
    if (k < 0) {
        throw DomainError("polya_urn_sample: k must be nonnegative");
    }
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("polya_urn_sample: urn weights must be positive");
    }
    std::uint64_t state = seed;
    double white = a;
    double total = a + b;
    long long count = 0;
    for (long long t = 0; t < k; ++t) {
        if (uniform01(state) < white / total) {
            ++count;
            white += 1.0;
        }
        total += 1.0;
    }
    return count;
}

} // namespace cwchaos::dist
