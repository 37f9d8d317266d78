#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "analysis.hpp"
#include "dist.hpp"
#include "errors.hpp"
#include "model.hpp"
#include "tv.hpp"

using namespace cwchaos;
using model::ModelParams;

namespace {

const std::vector<double> kBetaGrid{0.2, 0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 5.0};
const std::vector<double> kFieldGrid{-1.0, -0.5, 0.0, 0.5, 1.0};

} // namespace

TEST_CASE("beta_param_match closed form") {
    const auto g = analysis::beta_param_match(0.5, 0.5);
    CHECK(g.gamma1 == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(g.gamma2 == doctest::Approx(0.5).epsilon(1e-13));

    for (double a : {0.2, 0.5, 0.77}) {
        for (double excess : {1e-3, 0.1, 2.0}) {
            const auto pair = analysis::beta_param_match(a, a * (1 - a) + excess);
            CHECK(pair.gamma1 / (pair.gamma1 + pair.gamma2) == doctest::Approx(a).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(analysis::beta_param_match(0.3, 0.21), DegenerateVarianceError);
    CHECK_THROWS_AS(analysis::beta_param_match(0.3, 0.1), DegenerateVarianceError);
    CHECK_THROWS_AS(analysis::beta_param_match(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(analysis::beta_param_match(1.0, 0.5), DomainError);
}

namespace {

// Smallest relative gamma discrepancy resolvable in double precision: the
// defining subtraction sigma_sq - a(1-a) amplifies the rounding of its
// already-rounded inputs; near |m| -> 1 the amplification reaches ~1e9.
double matching_tolerance(double a, double sigma_sq) {
    const double excess = sigma_sq - a * (1.0 - a);
    const double amplification =
        (a * std::abs(1.0 - 2.0 * a) + sigma_sq + a * (1.0 - a)) / excess;
    return std::max(1e-9, 8.0 * std::numeric_limits<double>::epsilon() * amplification);
}

} // namespace

TEST_CASE("moment matching reproduces the model gamma pair") {
    for (double beta : kBetaGrid) {
        for (double h : kFieldGrid) {
            if (beta == 1.0 && h == 0.0) continue;
            const ModelParams params(beta, h);
            const auto mag = model::solve_magnetization(params);
            const double a = (1.0 + mag.m) / 2.0;
            const double sigma_sq = mag.v2 / 4.0;
            const auto direct = model::gamma_pair(params);
            const auto matched = analysis::beta_param_match(a, sigma_sq);
            const double tol = matching_tolerance(a, sigma_sq);
            CHECK(std::abs(matched.gamma1 - direct.gamma1) <= tol * direct.gamma1);
            CHECK(std::abs(matched.gamma2 - direct.gamma2) <= tol * direct.gamma2);
        }
    }
}

TEST_CASE("matched variance equals the alpha-adjusted variance route") {
    for (double beta : kBetaGrid) {
        for (double h : kFieldGrid) {
            if (beta == 1.0 && h == 0.0) continue;
            const ModelParams params(beta, h);
            const auto g = model::gamma_pair(params);
            for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
                const double total = g.gamma1 + g.gamma2;
                const double via_gammas = g.gamma1 * g.gamma2 / (total * total) +
                                          alpha * g.gamma1 * g.gamma2 / (total * total * total);
                const auto prediction = analysis::predict_tv_limit(params, alpha);
                CHECK(std::abs(prediction.sigma_alpha_sq - via_gammas) <= 1e-10);
            }
        }
    }
}

TEST_CASE("limit prediction per regime") {
    // subcritical, full ratio: D((1-beta+alpha beta)/(4(1-beta)), 1/4) = D(1/2, 1/4)
    const auto sub = analysis::predict_tv_limit(ModelParams(0.5, 0.0), 1.0);
    CHECK(sub.regime == model::Regime::subcritical);
    CHECK(sub.sigma_alpha_sq == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sub.predicted_tv == doctest::Approx(tv::gaussian_tv(0.5, 0.25)).epsilon(1e-12));

    // vanishing ratio kills the limit in every regime, exactly
    for (auto [beta, h] : {std::pair{0.5, 0.0}, {2.0, 0.0}, {0.8, 0.3}}) {
        const auto p = analysis::predict_tv_limit(ModelParams(beta, h), 0.0);
        CHECK(p.predicted_tv == 0.0);
    }

    // supercritical value against the quadrature oracle
    const ModelParams low_temp(2.0, 0.0);
    const auto mag = model::solve_magnetization(low_temp);
    const auto sup = analysis::predict_tv_limit(low_temp, 1.0);
    const double base = (1.0 - mag.m * mag.m) / 4.0;
    CHECK(sup.predicted_tv ==
          doctest::Approx(tv::gaussian_tv_quadrature(sup.sigma_alpha_sq, base)).epsilon(1e-7));
    CHECK(sup.sigma_alpha_sq >= base);

    CHECK_THROWS_AS(analysis::predict_tv_limit(ModelParams(1.0, 0.0), 0.5), CriticalPointError);
    CHECK_THROWS_AS(analysis::predict_tv_limit(ModelParams(0.5, 0.0), 1.5), DomainError);
}

TEST_CASE("limit prediction is continuous in alpha") {
    for (auto [beta, h] : {std::pair{0.5, 0.0}, {2.0, 0.0}, {0.8, 0.3}}) {
        const ModelParams params(beta, h);
        double prev = analysis::predict_tv_limit(params, 0.0).predicted_tv;
        CHECK(prev == 0.0);
        for (double step = 0.05; step <= 1.0 + 1e-12; step += 0.05) {
            const double alpha = std::min(step, 1.0);
            const double cur = analysis::predict_tv_limit(params, alpha).predicted_tv;
            CHECK(cur >= prev);              // variance gap grows with alpha
            CHECK(cur - prev <= 0.06);       // no jumps on the grid
            prev = cur;
        }
    }
}

TEST_CASE("two-component mixture limit equals the supercritical prediction") {
    // matched mixture local limits at beta = 2, full ratio: both components
    // share the same variance pair, so the weighted sum reproduces the
    // single-pair prediction
    const ModelParams low_temp(2.0, 0.0);
    const auto prediction = analysis::predict_tv_limit(low_temp, 1.0);
    const double base = (1.0 - std::pow(model::magnetization_root(low_temp), 2)) / 4.0;
    const std::vector<double> weights{0.5, 0.5};
    const std::vector<std::pair<double, double>> pairs{
        {prediction.sigma_alpha_sq, base}, {prediction.sigma_alpha_sq, base}};
    CHECK(tv::mixture_tv_limit(weights, pairs) ==
          doctest::Approx(prediction.predicted_tv).epsilon(1e-12));
}

TEST_CASE("reference mixing law shapes") {
    const auto sub = analysis::reference_mixing_law(ModelParams(0.5, 0.0));
    CHECK(std::holds_alternative<dist::MixingLaw::Point>(sub.value()));
    const auto field = analysis::reference_mixing_law(ModelParams(0.8, 0.3));
    CHECK(std::get<dist::MixingLaw::Point>(field.value()).p > 0.5);
    const auto sup = analysis::reference_mixing_law(ModelParams(2.0, 0.0));
    CHECK(std::holds_alternative<dist::MixingLaw::Finite>(sup.value()));
    CHECK_THROWS_AS(analysis::reference_mixing_law(ModelParams(1.0, 0.0)), CriticalPointError);
}

TEST_CASE("llt sup error decays") {
    const ModelParams sub(0.5, 0.0);
    CHECK(analysis::llt_sup_error(1024, sub) < analysis::llt_sup_error(256, sub));
    const ModelParams sup(2.0, 0.0);
    CHECK(analysis::llt_sup_error(2048, sup) < analysis::llt_sup_error(512, sup));
    const ModelParams field(0.8, 0.3);
    CHECK(analysis::llt_sup_error(1024, field) < analysis::llt_sup_error(256, field));
    CHECK_THROWS_AS(analysis::llt_sup_error(256, ModelParams(1.0, 0.0)), CriticalPointError);
}

TEST_CASE("beta-binomial gap shrinks and respects data processing") {
    const ModelParams sub(0.5, 0.0);
    const double g256 = analysis::beta_binomial_gap(256, 256, sub);
    const double g1024 = analysis::beta_binomial_gap(1024, 1024, sub);
    CHECK(g1024 < g256);

    // a 1-spin marginal is a coarsening of the k = n law
    CHECK(analysis::beta_binomial_gap(256, 1, sub) <= g256 + 1e-12);

    const ModelParams field(0.8, 0.3);
    CHECK(analysis::beta_binomial_gap(4096, 2048, field) <= 0.05);

    CHECK_THROWS_AS(analysis::beta_binomial_gap(64, 32, ModelParams(2.0, 0.0)), DomainError);
    CHECK_THROWS_AS(analysis::beta_binomial_gap(64, 32, ModelParams(1.0, 0.0)),
                    CriticalPointError);
}

TEST_CASE("symmetric mixture gap shrinks") {
    CHECK(analysis::symmetric_mixture_gap(1024, 1024, 2.0) <
          analysis::symmetric_mixture_gap(256, 256, 2.0));
    CHECK(analysis::symmetric_mixture_gap(2048, 1024, 1.5) <= 0.08);
    CHECK_THROWS_AS(analysis::symmetric_mixture_gap(64, 32, 0.5), DomainError);
    CHECK_THROWS_AS(analysis::symmetric_mixture_gap(64, 32, 1.0), CriticalPointError);
}

TEST_CASE("spins_for_alpha rounding") {
    CHECK(analysis::spins_for_alpha(1.0, 777) == 777);
    CHECK(analysis::spins_for_alpha(0.5, 5) == 2);   // 2.5 ties to even
    CHECK(analysis::spins_for_alpha(0.5, 7) == 4);   // 3.5 ties to even
    CHECK(analysis::spins_for_alpha(0.3, 10) == 3);
    CHECK(analysis::spins_for_alpha(1e-9, 4) == 1);  // clamped into [1, n]
    CHECK(analysis::spins_for_alpha(0.0, 4096) == 64);
    CHECK(analysis::spins_for_alpha(0.0, 1000) == 32); // ceil(sqrt(1000))
    CHECK_THROWS_AS(analysis::spins_for_alpha(-0.1, 10), DomainError);
    CHECK_THROWS_AS(analysis::spins_for_alpha(2.0, 10), DomainError);
}

TEST_CASE("convergence table closes on the predicted limit") {
    const ModelParams sub(0.5, 0.0);
    const std::vector<long long> ns{128, 512};
    const auto table = analysis::tv_convergence_table(sub, 1.0, ns);
    REQUIRE(table.rows().size() == 2);
    CHECK(table.rows()[0].n == 128);
    CHECK(table.rows()[0].k == 128);
    CHECK(table.rows()[1].gap < table.rows()[0].gap);
    for (const auto& row : table.rows()) {
        CHECK(row.observed >= 0.0);
        CHECK(row.observed <= 1.0);
        CHECK(row.predicted == doctest::Approx(tv::gaussian_tv(0.5, 0.25)).epsilon(1e-12));
        CHECK(row.gap == doctest::Approx(std::abs(row.observed - row.predicted)).epsilon(1e-15));
    }
}

TEST_CASE("worker-pool failures surface as ordinary errors") {
    const std::vector<long long> bad{64, 0};
    CHECK_THROWS_AS(analysis::tv_convergence_table(ModelParams(0.5, 0.0), 1.0, bad, 2),
                    DomainError);
}

TEST_CASE("convergence table rows do not depend on the thread count") {
    const ModelParams field(0.8, 0.3);
    const std::vector<long long> ns{64, 128, 256, 512};
    const auto serial = analysis::tv_convergence_table(field, 0.5, ns, 1);
    const auto parallel = analysis::tv_convergence_table(field, 0.5, ns, 4);
    REQUIRE(serial.rows().size() == parallel.rows().size());
    for (std::size_t i = 0; i < serial.rows().size(); ++i) {
        CHECK(serial.rows()[i].n == parallel.rows()[i].n);
        CHECK(serial.rows()[i].k == parallel.rows()[i].k);
        CHECK(serial.rows()[i].observed == parallel.rows()[i].observed);
        CHECK(serial.rows()[i].gap == parallel.rows()[i].gap);
    }
}

TEST_CASE("sublinear spin counts keep the chaos") {
    const ModelParams sub(0.5, 0.0);
    const std::vector<long long> ns{256, 1024};
    const auto table = analysis::tv_convergence_table(sub, 0.0, ns);
    CHECK(table.rows()[0].k == 16);
    CHECK(table.rows()[1].k == 32);
    CHECK(table.rows()[1].observed < table.rows()[0].observed);
    CHECK(table.rows()[1].observed <= 0.05);
    for (const auto& row : table.rows()) {
        CHECK(row.predicted == 0.0);
    }
}

TEST_CASE("critical law study") {
    CHECK(analysis::critical_cdf_distance(1024) < analysis::critical_cdf_distance(256));
    CHECK(analysis::critical_cdf_distance(256) <= 1.0);
    CHECK_THROWS_AS(analysis::critical_cdf_distance(1), DomainError);

    // spin-flip symmetry puts the median of the scaled magnetization at 0
    const Pmf pmf = model::exact_spin_count_pmf(256, ModelParams(1.0, 0.0));
    double below = 0.0;
    for (long long l = 0; l < 128; ++l) below += pmf.at(l);
    CHECK(below + 0.5 * pmf.at(128) == doctest::Approx(0.5).epsilon(1e-12));
}
