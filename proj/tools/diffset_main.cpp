// diffset: exact computations and theorem-verification sweeps over Z_q.
//
//   diffset verify <suite>     batch sweeps, one JSON report line per instance
//   diffset compute <quantity> one exact value with its certificate
//   diffset search <objective> seeded hill-climb for extremal instances
//
// Report streams are deterministic: identical (suite, flags, seed) runs emit
// byte-identical output regardless of --jobs. Exit code is nonzero iff an
// assertion-grade row failed.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diffset/search.hpp"
#include "diffset/suites.hpp"

using namespace diffset;

namespace {

// "11,13" or "2..100" or "36"
std::vector<uint32_t> parse_q_list(const std::string& text) {
    std::vector<uint32_t> out;
    if (text.empty()) return out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const uint32_t lo = std::stoul(text.substr(0, dots));
        const uint32_t hi = std::stoul(text.substr(dots + 2));
        if (lo < 2 || hi < lo) throw CLI::ValidationError("--q", "bad range: " + text);
        for (uint32_t q = lo; q <= hi; ++q) out.push_back(q);
        return out;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(std::stoul(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        out.push_back(std::stod(text.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("DIFFSET_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

int run_verify(const std::string& suite, const std::string& q_text, const SuiteConfig& base,
               bool csv, bool timings) {
    SuiteConfig cfg = base;
    cfg.qs = parse_q_list(q_text);

    uint64_t rows = 0;
    RowSink sink = [&](const VerificationReport& r) {
        ++rows;
        if (csv && suite == "schur") {
            if (rows == 1) std::cout << "p,S_size,cov_plus,cov_times,gap\n";
            std::cout << r.instance["p"].get<uint32_t>() << ","
                      << r.witness["S_size"].get<uint32_t>() << ","
                      << r.witness["cov_plus"].get<uint32_t>() << ","
                      << r.witness["cov_times"].get<uint32_t>() << ","
                      << r.witness["gap"].get<uint32_t>() << "\n";
            return;
        }
        std::cout << r.to_json(timings).dump() << "\n";
    };
    const uint64_t failures = run_suite(suite, cfg, sink);
    std::cerr << "suite " << suite << ": " << rows << " rows, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

SubsetZq require_set(const std::string& text, uint32_t q, const char* flag) {
    if (text.empty()) throw CLI::ValidationError(flag, "set literal required");
    return parse_subset(text, q);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact set algebra, covering numbers and equation counting over Z_q"};
    app.require_subcommand(1);

    // ---- verify ----
    std::string v_suite, v_q, v_densities, v_eps, v_m;
    SuiteConfig cfg;
    cfg.jobs = default_jobs();
    bool v_csv = false, v_timings = false;
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("suite", v_suite,
                       "one of: fish1d fish2d vinh covm covtransfer cov2a2a covintersect bohr "
                       "schur energy regularize weil parseval")
        ->required();
    verify->add_option("--q", v_q, "moduli: 11,13 or 2..100 (suite default when omitted)");
    verify->add_option("--samples", cfg.samples, "random instances per modulus");
    verify->add_option("--seed", cfg.seed, "master seed");
    verify->add_option("--densities", v_densities, "density list, e.g. 0.1,0.3");
    verify->add_option("--eps", v_eps, "epsilon list (regularize)");
    verify->add_option("--M", v_m, "M list (regularize)");
    verify->add_flag("--exhaustive", cfg.exhaustive, "sweep all subsets instead of sampling");
    verify->add_option("--jobs", cfg.jobs, "worker threads (default $DIFFSET_JOBS or 1)");
    verify->add_flag("--csv", v_csv, "growth-table CSV output (schur)");
    verify->add_flag("--timings", v_timings,
                     "include runtime_ms in rows (breaks byte-determinism)");

    // ---- compute ----
    std::string c_quantity, c_a, c_b, c_s, c_a2, c_b2, c_gamma, c_kind = "times",
                            c_mode = "full", c_form = "product";
    uint32_t c_q = 0, c_lam = 0, c_r = 0, c_p = 0;
    double c_eps = 0.25, c_m = 2.0;
    auto* compute = app.add_subcommand("compute", "one exact computation");
    compute->add_option("quantity", c_quantity,
                        "one of: diffset product_of_differences minimal_d cov kloosterman "
                        "energy bohr regularize")
        ->required();
    compute->add_option("--q", c_q, "modulus");
    compute->add_option("--A", c_a, "set literal {a1,a2,...}");
    compute->add_option("--B", c_b, "set literal");
    compute->add_option("--S", c_s, "set literal");
    compute->add_option("--A2", c_a2, "2-D set literal {(x,y),...}");
    compute->add_option("--B2", c_b2, "2-D set literal");
    compute->add_option("--lam", c_lam, "lambda");
    compute->add_option("--r", c_r, "frequency r");
    compute->add_option("--kind", c_kind, "cover kind: plus | times");
    compute->add_option("--mode", c_mode, "inclusion mode: units | full");
    compute->add_option("--form", c_form, "bilinear form: product | squarediff");
    compute->add_option("--eps", c_eps, "epsilon (bohr, regularize)");
    compute->add_option("--M", c_m, "M (regularize)");
    compute->add_option("--p", c_p, "prime (bohr)");
    compute->add_option("--gamma", c_gamma, "frequency set literal (bohr)");

    // ---- search ----
    std::string s_objective;
    uint32_t s_q = 0;
    double s_alpha = 0.25, s_beta = 0.25;
    uint64_t s_budget = 1000, s_seed = 1;
    auto* search = app.add_subcommand("search", "hill-climb for extremal instances");
    search->add_option("objective", s_objective, "one of: max_covx max_d")->required();
    search->add_option("--q", s_q, "modulus")->required();
    search->add_option("--alpha", s_alpha, "density of A (max_covx)");
    search->add_option("--beta", s_beta, "density of A (max_d)");
    search->add_option("--budget", s_budget, "objective evaluations");
    search->add_option("--seed", s_seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            SuiteConfig c = cfg;
            if (!v_densities.empty()) c.densities = parse_double_list(v_densities);
            if (!v_eps.empty()) c.eps_list = parse_double_list(v_eps);
            if (!v_m.empty()) c.m_list = parse_double_list(v_m);
            return run_verify(v_suite, v_q, c, v_csv, v_timings);
        }

        if (*compute) {
            nlohmann::json out;
            if (c_quantity == "diffset") {
                auto a = require_set(c_a, c_q, "--A");
                auto d = difference_set(a);
                out = {{"q", a.q()}, {"diffset", to_literal(d, false)}, {"size", d.size()}};
            } else if (c_quantity == "product_of_differences") {
                auto a = require_set(c_a, c_q, "--A");
                auto b = require_set(c_b.empty() ? c_a : c_b, c_q, "--B");
                auto p = product_of_differences(a, b);
                out = {{"q", a.q()}, {"set", to_literal(p, false)}, {"size", p.size()}};
            } else if (c_quantity == "minimal_d") {
                if (!c_a2.empty()) {
                    auto a = parse_subset2d(c_a2, c_q);
                    auto b = c_b2.empty() ? a : parse_subset2d(c_b2, c_q);
                    RingCtx ctx(a.q());
                    const auto mode =
                        c_mode == "units" ? InclusionMode::units : InclusionMode::full;
                    const auto form = c_form == "squarediff" ? BilinearForm::squarediff
                                                             : BilinearForm::product;
                    auto res = minimal_divisor_d_2d(a, b, mode, form, ctx);
                    out = {{"q", a.q()},
                           {"mode", c_mode},
                           {"form", c_form},
                           {"value_set", to_literal(res.value_set, false)}};
                    if (res.d)
                        out["d"] = *res.d;
                    else
                        out["d"] = nullptr;
                } else {
                    auto a = require_set(c_a, c_q, "--A");
                    auto b = require_set(c_b.empty() ? c_a : c_b, c_q, "--B");
                    RingCtx ctx(a.q());
                    auto res = minimal_divisor_d(a, b, ctx);
                    out = {{"q", a.q()},
                           {"d", res.d},
                           {"product_set", to_literal(res.certificate, false)}};
                }
            } else if (c_quantity == "cov") {
                auto s = require_set(c_s.empty() ? c_a : c_s, c_q, "--S");
                const auto kind =
                    (c_kind == "plus" || c_kind == "additive") ? CoverKind::additive
                                                               : CoverKind::multiplicative;
                auto res = cov_exact(s, kind);
                out = {{"q", s.q()},
                       {"kind", cover_kind_name(kind)},
                       {"cov", res.k},
                       {"X", to_literal(res.cert.x_set, false)},
                       {"verified", res.cert.verified}};
            } else if (c_quantity == "kloosterman") {
                RingCtx ctx(c_q);
                const auto k = kloosterman(ctx, c_lam, c_r);
                out = {{"q", c_q}, {"lam", c_lam}, {"r", c_r}, {"re", k.real()}, {"im", k.imag()}};
            } else if (c_quantity == "energy") {
                auto pts = parse_subset2d(c_a2.empty() ? c_a : c_a2, c_q);
                RingCtx ctx(pts.q());
                auto rep = energy_report(pts, ctx);
                out = rep.to_json();
            } else if (c_quantity == "bohr") {
                const uint32_t p = c_p ? c_p : c_q;
                auto gam = parse_subset(c_gamma, p).elements();
                auto rep = bohr_cover_report(p, gam, c_eps);
                out = rep.to_json();
                out["B"] = to_literal(bohr_set(p, gam, c_eps), false);
            } else if (c_quantity == "regularize") {
                auto a = require_set(c_a, c_q, "--A");
                auto res = regularize(a, c_eps, c_m);
                nlohmann::json chain = nlohmann::json::array();
                for (const auto& step : res.chain)
                    chain.push_back({{"q_j", step.modulus},
                                     {"fiber", step.fiber},
                                     {"prime_power", step.prime_power}});
                out = {{"q", a.q()},
                       {"eps", c_eps},
                       {"M", c_m},
                       {"q_star", res.q_star},
                       {"A_star", to_literal(res.a_star, false)},
                       {"A_star_normalized", to_literal(res.a_star_normalized, false)},
                       {"shift", res.shift[0]},
                       {"chain", chain},
                       {"chain_bound", res.chain_bound}};
            } else {
                std::cerr << "unknown quantity: " << c_quantity << "\n";
                return 2;
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*search) {
            if (s_objective != "max_covx" && s_objective != "max_d") {
                std::cerr << "unknown objective: " << s_objective << "\n";
                return 2;
            }
            SearchResult res = s_objective == "max_covx"
                                   ? search_max_covx(s_q, s_alpha, s_budget, s_seed)
                                   : search_max_d(s_q, s_beta, s_budget, s_seed);
            std::cout << res.report.to_json().dump() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
