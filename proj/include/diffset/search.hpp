#pragma once

// Randomized hill-climb over fixed-size subsets, exploring extremal behavior
// of the bounds: maximize cov_x(A-A) at fixed density, or maximize the
// minimal divisor d at fixed density. Deterministic under a seed; the best
// instance found is re-verified with the exact solvers before reporting.

#include <cstdint>
#include <string>

#include "diffset/covering.hpp"
#include "diffset/equations.hpp"
#include "diffset/report.hpp"
#include "diffset/rng.hpp"

namespace diffset {

struct SearchResult {
    SubsetZq best;
    double objective = 0.0;
    uint64_t evaluations = 0;
    VerificationReport report;
};

namespace detail {

// Swap one member for one non-member, keeping |A| fixed.
inline SubsetZq mutate(const SubsetZq& a, Rng& rng) {
    const uint32_t q = a.q();
    if (a.size() == 0 || a.size() == q) return a;
    SubsetZq out = a;
    const auto in = a.elements();
    uint32_t drop = in[rng.below(static_cast<uint32_t>(in.size()))];
    uint32_t add;
    do {
        add = rng.below(q);
    } while (a.contains(add));
    out.remove(drop);
    out.add(add);
    return out;
}

}  // namespace detail

// objective: exact cov_x(A-A), to maximize.
inline double covx_objective(const SubsetZq& a) {
    const SubsetZq diff = difference_set(a);
    if (!cov_feasible(diff, CoverKind::multiplicative)) return 0.0;
    return cov_exact(diff, CoverKind::multiplicative).k;
}

inline double max_d_objective(const SubsetZq& a, const RingCtx& ctx) {
    return minimal_divisor_d(a, a, ctx).d;
}

inline SearchResult search_max_covx(uint32_t q, double alpha, uint64_t budget, uint64_t seed) {
    Rng rng(seed);
    const uint32_t size = std::max<uint32_t>(1, static_cast<uint32_t>(alpha * q + 0.5));
    SubsetZq best = sample_subset(rng, q, size);
    double best_obj = covx_objective(best);
    uint64_t evals = 1;
    SubsetZq cur = best;
    double cur_obj = best_obj;
    while (evals < budget) {
        SubsetZq cand = detail::mutate(cur, rng);
        const double obj = covx_objective(cand);
        ++evals;
        if (obj >= cur_obj) {  // plateau moves keep the walk from stalling
            cur = cand;
            cur_obj = obj;
            if (obj > best_obj) {
                best = cand;
                best_obj = obj;
            }
        }
    }

    SearchResult out{best, best_obj, evals, {}};
    const double bound = 1.0 / best.density() + 1.0;
    out.report.suite = "search.max_covx";
    out.report.instance = {{"q", q}, {"alpha", alpha}, {"seed", seed}, {"budget", budget}};
    out.report.claim = "max cov_x(A-A) found by hill-climb vs 1/alpha + 1";
    out.report.lhs = best_obj;
    out.report.rhs = bound;
    out.report.outcome = Outcome::informational;
    out.report.witness = {{"A", to_literal(best, false)},
                          {"evaluations", evals},
                          {"reverified", covx_objective(best) == best_obj}};
    return out;
}

inline SearchResult search_max_d(uint32_t q, double beta, uint64_t budget, uint64_t seed) {
    RingCtx ctx(q);
    Rng rng(seed);
    const uint32_t size = std::max<uint32_t>(1, static_cast<uint32_t>(beta * q + 0.5));
    SubsetZq best = sample_subset(rng, q, size);
    double best_obj = max_d_objective(best, ctx);
    uint64_t evals = 1;
    SubsetZq cur = best;
    double cur_obj = best_obj;
    while (evals < budget) {
        SubsetZq cand = detail::mutate(cur, rng);
        const double obj = max_d_objective(cand, ctx);
        ++evals;
        if (obj >= cur_obj) {
            cur = cand;
            cur_obj = obj;
            if (obj > best_obj) {
                best = cand;
                best_obj = obj;
            }
        }
    }

    SearchResult out{best, best_obj, evals, {}};
    out.report.suite = "search.max_d";
    out.report.instance = {{"q", q}, {"beta", beta}, {"seed", seed}, {"budget", budget}};
    out.report.claim = "max minimal-divisor d found by hill-climb vs the divisor lattice";
    out.report.lhs = best_obj;
    out.report.rhs = static_cast<double>(q);
    out.report.outcome = Outcome::informational;
    out.report.witness = {{"A", to_literal(best, false)},
                          {"evaluations", evals},
                          {"divisors", ctx.divisors()}};
    return out;
}

}  // namespace diffset
