#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "pmf.hpp"
#include "specfn.hpp"

using namespace cwchaos;
using specfn::neg_inf;

TEST_CASE("construction and normalization") {
    Pmf p(3, {std::log(2.0), std::log(6.0)});
    CHECK_FALSE(p.normalized());
    p.normalize();
    CHECK(p.normalized());
    CHECK(p.at(3) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p.at(4) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("queries outside the range return zero mass") {
    const Pmf p = Pmf::point_mass(-2);
    CHECK(p.normalized());
    CHECK(p.at(-2) == 1.0);
    CHECK(p.at(-3) == 0.0);
    CHECK(p.log_at(5) == neg_inf);
    CHECK(p.offset() == -2);
    CHECK(p.size() == 1);
}

TEST_CASE("minus-infinity entries encode impossible points") {
    Pmf p(0, {neg_inf, 0.0, neg_inf});
    p.normalize();
    CHECK(p.at(0) == 0.0);
    CHECK(p.at(1) == 1.0);
    CHECK(p.at(2) == 0.0);
    CHECK(p.mean() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("from_probabilities round trip") {
    const std::vector<double> probs{0.125, 0.5, 0.25, 0.125};
    const Pmf p = Pmf::from_probabilities(10, probs);
    CHECK(p.normalized());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        CHECK(p.at(10 + static_cast<long long>(i)) == doctest::Approx(probs[i]).epsilon(1e-14));
    }
    CHECK(p.mean() == doctest::Approx(10 * 0.125 + 11 * 0.5 + 12 * 0.25 + 13 * 0.125).epsilon(1e-13));
}

TEST_CASE("variance of a fair coin") {
    const Pmf p = Pmf::from_probabilities(0, std::vector<double>{0.5, 0.5});
    CHECK(p.mean() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p.variance() == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("invalid constructions are rejected") {
    CHECK_THROWS_AS(Pmf(0, {}), DomainError);
    CHECK_THROWS_AS(Pmf(0, {0.0, std::nan("")}), DomainError);
    CHECK_THROWS_AS(Pmf(0, {0.0, std::numeric_limits<double>::infinity()}), DomainError);
    CHECK_THROWS_AS(Pmf(0, {neg_inf, neg_inf}).normalize(), DomainError);
    CHECK_THROWS_AS(Pmf::from_probabilities(0, std::vector<double>{0.5, -0.1}), DomainError);
}
