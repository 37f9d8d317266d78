// cwchaos command line front end. Talks to the shared library exclusively
// through the C interface in cwchaos.h and renders CSV or JSON tables with
// locale-independent, byte-stable formatting.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cwchaos.h"

namespace {

struct RunConfig {
    std::string command;
    double beta = 0.0;
    double h = 0.0;
    std::int64_t n = 0;
    std::optional<std::int64_t> k;
    std::optional<double> alpha;
    std::vector<std::int64_t> ns;
    std::string format; // "csv" or "json"
    std::string output_path;
    std::uint64_t seed = 0; // reserved for sampling-based queries
    int threads = 0;        // 0 = resolve from CW_CHAOS_THREADS / hardware
};

// 12 significant digits, '.' separator, no locale dependence.
std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string fmt(std::int64_t v) { return std::to_string(v); }

[[noreturn]] void fail_status(cw_status status) {
    std::cerr << "{\"error\":\"" << cw_status_name(status) << "\",\"detail\":\""
              << cw_last_error_message() << "\"}\n";
    std::exit(1);
}

void check(cw_status status) {
    if (status != CW_OK) {
        fail_status(status);
    }
}

void emit(const std::string& body, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out || !(out << body)) {
        std::cerr << "{\"error\":\"IoError\",\"detail\":\"cannot write " << output_path
                  << "\"}\n";
        std::exit(1);
    }
}

struct TableRows {
    std::vector<std::int64_t> n, k;
    std::vector<double> observed, predicted, gap;

    void add(std::int64_t n_, std::int64_t k_, double obs, double pred, double gap_) {
        n.push_back(n_);
        k.push_back(k_);
        observed.push_back(obs);
        predicted.push_back(pred);
        gap.push_back(gap_);
    }
    std::size_t size() const { return n.size(); }
};

std::string render_table(const TableRows& rows, const std::string& format) {
    std::ostringstream out;
    if (format == "csv") {
        out << "N,k,observed,predicted,gap\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << fmt(rows.n[i]) << ',' << fmt(rows.k[i]) << ',' << fmt(rows.observed[i]) << ','
                << fmt(rows.predicted[i]) << ',' << fmt(rows.gap[i]) << '\n';
        }
        return out.str();
    }
    out << "{\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ',';
        out << "{\"N\":" << fmt(rows.n[i]) << ",\"k\":" << fmt(rows.k[i])
            << ",\"observed\":" << fmt(rows.observed[i])
            << ",\"predicted\":" << fmt(rows.predicted[i]) << ",\"gap\":" << fmt(rows.gap[i])
            << '}';
    }
    out << "]}\n";
    return out.str();
}

std::string render_pmf(const cw_pmf* pmf, const std::string& format) {
    std::ostringstream out;
    const std::int64_t offset = cw_pmf_offset(pmf);
    const std::int64_t size = cw_pmf_size(pmf);
    if (format == "csv") {
        out << "l,p,log_p\n";
        for (std::int64_t i = 0; i < size; ++i) {
            const std::int64_t l = offset + i;
            out << fmt(l) << ',' << fmt(cw_pmf_prob(pmf, l)) << ',' << fmt(cw_pmf_log_prob(pmf, l))
                << '\n';
        }
        return out.str();
    }
    out << "{\"offset\":" << fmt(offset) << ",\"p\":[";
    for (std::int64_t i = 0; i < size; ++i) {
        if (i) out << ',';
        out << fmt(cw_pmf_prob(pmf, offset + i));
    }
    out << "],\"log_p\":[";
    for (std::int64_t i = 0; i < size; ++i) {
        if (i) out << ',';
        out << fmt(cw_pmf_log_prob(pmf, offset + i));
    }
    out << "],\"mean\":" << fmt(cw_pmf_mean(pmf)) << "}\n";
    return out.str();
}

int resolve_threads(const RunConfig& config, bool threads_given) {
    if (threads_given) {
        return config.threads;
    }
    if (const char* env = std::getenv("CW_CHAOS_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 0; // library default: hardware concurrency
}

std::int64_t resolve_k(const RunConfig& config) {
    if (config.k) {
        return *config.k;
    }
    std::int64_t k = 0;
    check(cw_spins_for_alpha(*config.alpha, config.n, &k));
    return k;
}

std::string reference_json(cw_regime regime, double beta, double h) {
    if (regime == CW_REGIME_SUBCRITICAL) {
        return "{\"type\":\"binomial\",\"p\":0.5}";
    }
    double m = 0.0;
    check(cw_solve(beta, h, &m, nullptr, nullptr, nullptr));
    if (regime == CW_REGIME_FIELD) {
        return "{\"type\":\"binomial\",\"p\":" + fmt((1.0 + m) / 2.0) + '}';
    }
    return "{\"type\":\"binomial_mixture\",\"weights\":[0.5,0.5],\"p\":[" + fmt((1.0 + m) / 2.0) +
           ',' + fmt((1.0 - m) / 2.0) + "]}";
}

int run(const RunConfig& config, bool threads_given) {
    const std::string& cmd = config.command;
    const std::string& format = config.format;

    if (cmd == "solve") {
        double m = 0.0, v2 = 0.0, g1 = 0.0, g2 = 0.0;
        check(cw_solve(config.beta, config.h, &m, &v2, &g1, &g2));
        cw_regime regime = CW_REGIME_CRITICAL;
        check(cw_regime_of(config.beta, config.h, &regime));
        std::ostringstream out;
        if (format == "csv") {
            out << "beta,h,regime,m,v2,gamma1,gamma2\n"
                << fmt(config.beta) << ',' << fmt(config.h) << ',' << cw_regime_name(regime) << ','
                << fmt(m) << ',' << fmt(v2) << ',' << fmt(g1) << ',' << fmt(g2) << '\n';
        } else {
            out << "{\"beta\":" << fmt(config.beta) << ",\"h\":" << fmt(config.h)
                << ",\"regime\":\"" << cw_regime_name(regime) << "\",\"m\":" << fmt(m)
                << ",\"v2\":" << fmt(v2) << ",\"gamma1\":" << fmt(g1) << ",\"gamma2\":" << fmt(g2)
                << "}\n";
        }
        emit(out.str(), config.output_path);
        return 0;
    }

    if (cmd == "limit") {
        cw_regime regime = CW_REGIME_CRITICAL;
        double predicted = 0.0, sigma = 0.0;
        check(cw_tv_limit_prediction(config.beta, config.h, *config.alpha, &regime, &predicted,
                                     &sigma));
        std::ostringstream out;
        if (format == "csv") {
            out << "beta,h,alpha,regime,predicted_tv,sigma_alpha_sq\n"
                << fmt(config.beta) << ',' << fmt(config.h) << ',' << fmt(*config.alpha) << ','
                << cw_regime_name(regime) << ',' << fmt(predicted) << ',' << fmt(sigma) << '\n';
        } else {
            out << "{\"beta\":" << fmt(config.beta) << ",\"h\":" << fmt(config.h)
                << ",\"alpha\":" << fmt(*config.alpha) << ",\"regime\":\""
                << cw_regime_name(regime) << "\",\"predicted_tv\":" << fmt(predicted)
                << ",\"sigma_alpha_sq\":" << fmt(sigma)
                << ",\"reference\":" << reference_json(regime, config.beta, config.h) << "}\n";
        }
        emit(out.str(), config.output_path);
        return 0;
    }

    if (cmd == "pmf" || cmd == "marginal") {
        cw_pmf* pmf = nullptr;
        if (cmd == "pmf") {
            check(cw_exact_spin_count_pmf(config.n, config.beta, config.h, &pmf));
        } else {
            check(cw_marginal_spin_count_pmf(config.n, resolve_k(config), config.beta, config.h,
                                             &pmf));
        }
        const std::string body = render_pmf(pmf, format);
        cw_pmf_free(pmf);
        emit(body, config.output_path);
        return 0;
    }

    if (cmd == "tv") {
        const std::int64_t k = resolve_k(config);
        const double alpha = config.alpha ? *config.alpha
                                          : static_cast<double>(k) / static_cast<double>(config.n);
        cw_table* table = nullptr;
        const std::int64_t n = config.n;
        check(cw_tv_convergence_table(config.beta, config.h, alpha, &n, 1, 1, &table));
        TableRows rows;
        std::int64_t rn = 0, rk = 0;
        double obs = 0.0, pred = 0.0, gap = 0.0;
        check(cw_table_row(table, 0, &rn, &rk, &obs, &pred, &gap));
        cw_table_free(table);
        rows.add(rn, rk, obs, pred, gap);
        emit(render_table(rows, format), config.output_path);
        return 0;
    }

    if (cmd == "sweep") {
        cw_table* table = nullptr;
        check(cw_tv_convergence_table(config.beta, config.h, *config.alpha, config.ns.data(),
                                      static_cast<std::int64_t>(config.ns.size()),
                                      resolve_threads(config, threads_given), &table));
        TableRows rows;
        for (std::int64_t i = 0; i < cw_table_rows(table); ++i) {
            std::int64_t n = 0, k = 0;
            double obs = 0.0, pred = 0.0, gap = 0.0;
            check(cw_table_row(table, i, &n, &k, &obs, &pred, &gap));
            rows.add(n, k, obs, pred, gap);
        }
        cw_table_free(table);
        emit(render_table(rows, format), config.output_path);
        return 0;
    }

    if (cmd == "llt" || cmd == "critical") {
        TableRows rows;
        for (const std::int64_t n : config.ns) {
            double value = 0.0;
            if (cmd == "llt") {
                check(cw_llt_sup_error(n, config.beta, config.h, &value));
            } else {
                check(cw_critical_cdf_distance(n, &value));
            }
            rows.add(n, n, value, 0.0, value);
        }
        emit(render_table(rows, format), config.output_path);
        return 0;
    }

    if (cmd == "gap34" || cmd == "gap36") {
        TableRows rows;
        for (const std::int64_t n : config.ns) {
            std::int64_t k = 0;
            if (config.k) {
                k = *config.k;
            } else {
                check(cw_spins_for_alpha(*config.alpha, n, &k));
            }
            double value = 0.0;
            if (cmd == "gap34") {
                check(cw_beta_binomial_gap(n, k, config.beta, config.h, &value));
            } else {
                check(cw_symmetric_mixture_gap(n, k, config.beta, &value));
            }
            rows.add(n, k, value, 0.0, value);
        }
        emit(render_table(rows, format), config.output_path);
        return 0;
    }

    std::cerr << "unknown command: " << cmd << '\n';
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig config;

    CLI::App app{"Curie-Weiss spin-count laws, approximants and total-variation studies"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", config.output_path, "write to a file instead of stdout");
        // accepted for config parity; no primary command draws samples
        sub->add_option("--seed", config.seed, "random seed for sampling-based queries (reserved)");
        sub->set_help_flag("--help", "print this help and exit");
    };

    CLI::Option* threads_opt = nullptr;

    auto* solve = app.add_subcommand("solve", "magnetization, variance and mixing parameters");
    solve->add_option("--beta", config.beta)->required();
    solve->add_option("--h", config.h)->required();
    add_common(solve);

    auto* pmf = app.add_subcommand("pmf", "exact positive-spin-count law");
    pmf->add_option("--beta", config.beta)->required();
    pmf->add_option("--h", config.h)->required();
    pmf->add_option("--N", config.n)->required();
    add_common(pmf);

    auto* marginal = app.add_subcommand("marginal", "exact k-spin positive-count law");
    marginal->add_option("--beta", config.beta)->required();
    marginal->add_option("--h", config.h)->required();
    marginal->add_option("--N", config.n)->required();
    auto* marginal_k = marginal->add_option("--k", config.k);
    marginal->add_option("--alpha", config.alpha)->excludes(marginal_k);
    add_common(marginal);

    auto* tv = app.add_subcommand("tv", "observed vs predicted TV at a single size");
    tv->add_option("--beta", config.beta)->required();
    tv->add_option("--h", config.h)->required();
    tv->add_option("--N", config.n)->required();
    auto* tv_k = tv->add_option("--k", config.k);
    tv->add_option("--alpha", config.alpha)->excludes(tv_k);
    add_common(tv);

    auto* limit = app.add_subcommand("limit", "predicted limiting TV for k ~ alpha N");
    limit->add_option("--beta", config.beta)->required();
    limit->add_option("--h", config.h)->required();
    limit->add_option("--alpha", config.alpha)->required();
    add_common(limit);

    auto* llt = app.add_subcommand("llt", "scaled sup error of the Gaussian local limit");
    llt->add_option("--beta", config.beta)->required();
    llt->add_option("--h", config.h)->required();
    llt->add_option("--Ns", config.ns)->required()->delimiter(',');
    add_common(llt);

    auto* gap34 = app.add_subcommand("gap34", "TV gap to the beta-binomial approximant");
    gap34->add_option("--beta", config.beta)->required();
    gap34->add_option("--h", config.h)->required();
    gap34->add_option("--Ns", config.ns)->required()->delimiter(',');
    auto* gap34_k = gap34->add_option("--k", config.k);
    gap34->add_option("--alpha", config.alpha)->excludes(gap34_k);
    add_common(gap34);

    auto* gap36 = app.add_subcommand("gap36",
                                     "TV gap to the symmetric beta-mixture approximant (h = 0)");
    gap36->add_option("--beta", config.beta)->required();
    gap36->add_option("--Ns", config.ns)->required()->delimiter(',');
    auto* gap36_k = gap36->add_option("--k", config.k);
    gap36->add_option("--alpha", config.alpha)->excludes(gap36_k);
    add_common(gap36);

    auto* sweep = app.add_subcommand("sweep", "observed vs predicted TV over a size grid");
    sweep->add_option("--beta", config.beta)->required();
    sweep->add_option("--h", config.h)->required();
    sweep->add_option("--alpha", config.alpha)->required();
    sweep->add_option("--Ns", config.ns)->required()->delimiter(',');
    threads_opt = sweep->add_option("--threads", config.threads,
                                    "worker threads for the size grid (default: CW_CHAOS_THREADS "
                                    "or all hardware threads)");
    add_common(sweep);

    auto* critical = app.add_subcommand("critical",
                                        "Kolmogorov distance to the quartic law at beta = 1");
    critical->add_option("--Ns", config.ns)->required()->delimiter(',');
    add_common(critical);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    config.command = sub->get_name();
    if (config.format.empty()) {
        const bool scalar = config.command == "solve" || config.command == "limit";
        config.format = scalar ? "json" : "csv";
    }

    const bool needs_k = config.command == "marginal" || config.command == "tv" ||
                         config.command == "gap34" || config.command == "gap36";
    if (needs_k && !config.k && !config.alpha) {
        std::cerr << "exactly one of --k / --alpha is required for " << config.command << '\n';
        return 2;
    }

    return run(config, threads_opt != nullptr && threads_opt->count() > 0);
}
