#pragma once

#include <span>
#include <vector>

namespace cwchaos {

// Probability mass function on a contiguous integer range, stored as log
// probabilities. -inf encodes an impossible point inside the support range.
// Mass queries outside the range return zero.
class Pmf {
public:
    // Takes raw (typically unnormalized) log weights for the points
    // offset, offset+1, ..., offset+len-1. NaN entries are rejected.
    Pmf(long long offset, std::vector<double> log_p);

    static Pmf point_mass(long long at);
    static Pmf from_probabilities(long long offset, std::span<const double> p);

    long long offset() const { return offset_; }
    long long size() const { return static_cast<long long>(log_p_.size()); }
    long long last() const { return offset_ + size() - 1; }
    bool normalized() const { return normalized_; }

    // Log mass / mass at an arbitrary integer; -inf / 0 outside the range.
    double log_at(long long l) const;
    double at(long long l) const;

    std::span<const double> log_values() const { return log_p_; }

    // Subtracts the log normalizer so that total_mass() == 1.
    Pmf& normalize();

    double log_normalizer() const;
    double total_mass() const;
    double mean() const;
    double variance() const;

private:
    long long offset_;
    std::vector<double> log_p_;
    bool normalized_ = false;
};

} // namespace cwchaos
