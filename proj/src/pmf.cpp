#include "pmf.hpp"

#include <cmath>
#include <utility>

#include "errors.hpp"
#include "specfn.hpp"

namespace cwchaos {

using specfn::neg_inf;

Pmf::Pmf(long long offset, std::vector<double> log_p) : offset_(offset), log_p_(std::move(log_p)) {
    if (log_p_.empty()) {
        throw DomainError("Pmf: support must be non-empty");
    }
    for (double v : log_p_) {
        if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
            throw DomainError("Pmf: log probabilities must be finite or -inf");
        }
    }
}

Pmf Pmf::point_mass(long long at) {
    Pmf p(at, std::vector<double>{0.0});
    p.normalized_ = true;
    return p;
}

Pmf Pmf::from_probabilities(long long offset, std::span<const double> p) {
    std::vector<double> log_p(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (std::isnan(p[i]) || p[i] < 0.0) {
            throw DomainError("Pmf: probabilities must be nonnegative");
        }
        log_p[i] = p[i] > 0.0 ? std::log(p[i]) : neg_inf;
    }
    return Pmf(offset, std::move(log_p)).normalize();
}

double Pmf::log_at(long long l) const {
    if (l < offset_ || l > last()) {
        return neg_inf;
    }
    return log_p_[static_cast<std::size_t>(l - offset_)];
}

double Pmf::at(long long l) const { return std::exp(log_at(l)); }

Pmf& Pmf::normalize() {
    const double lz = log_normalizer();
    if (lz == neg_inf) {
        throw DomainError("Pmf: cannot normalize a zero measure");
    }
    for (double& v : log_p_) {
        if (v != neg_inf) v -= lz;
    }
    normalized_ = true;
    return *this;
}

double Pmf::log_normalizer() const { return specfn::log_sum_exp(log_p_); }

double Pmf::total_mass() const {
    double s = 0.0;
    for (double v : log_p_) {
        s += std::exp(v);
    }
    return s;
}

double Pmf::mean() const {
    // Weighted against the max to stay usable on unnormalized input.
    const double shift = specfn::log_sum_exp(log_p_);
    double m = 0.0;
    for (long long i = 0; i < size(); ++i) {
        m += std::exp(log_p_[static_cast<std::size_t>(i)] - shift) *
             static_cast<double>(offset_ + i);
    }
    return m;
}

double Pmf::variance() const {
    const double shift = specfn::log_sum_exp(log_p_);
    const double m = mean();
    double v = 0.0;
    for (long long i = 0; i < size(); ++i) {
        const double d = static_cast<double>(offset_ + i) - m;
        v += std::exp(log_p_[static_cast<std::size_t>(i)] - shift) * d * d;
    }
    return v;
}

} // namespace cwchaos
