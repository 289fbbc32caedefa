#pragma once

// Regularization by divisor-fiber descent: repeatedly locate a divisor
// q1 >= M of the current modulus and a fiber xi mod q1 holding more than
// |A| / q1^(1-eps) points, restrict to that fiber and renormalize it into
// Z_{q/q1}, until every large divisor has near-uniform fibers. The density
// gains a factor >= M^eps per step, so the descent terminates quickly.
//
// Violator choice: the pair (q1, xi) with the largest relative violation
// count * q1^(1-eps) / |A|, ties broken by smallest q1 then smallest xi,
// which makes runs deterministic and reproducible.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "diffset/ring.hpp"
#include "diffset/subset.hpp"

namespace diffset {

struct RegStep {
    uint32_t modulus = 0;             // the divisor q_j descended through
    std::vector<uint32_t> fiber;      // fiber label xi, one residue per coordinate
    bool prime_power = false;         // whether q_j was a prime power
};

template <class SetT>
struct RegularizationResult {
    SetT a_star;             // surviving points, still in the original Z_q (or Z_q^2)
    SetT a_star_normalized;  // the same points translated/divided into Z_{q_star}
    uint32_t q_star = 0;
    std::vector<RegStep> chain;
    std::vector<uint32_t> shift;  // the single residue of pi_{q/q_star}(a_star), per coordinate
    double epsilon = 0.0;
    double M = 0.0;
    uint32_t chain_bound = 0;  // ceil(log(1/delta) / (eps log M))

    uint32_t descent_product() const {
        uint32_t p = 1;
        for (const auto& s : chain) p *= s.modulus;
        return p;
    }
};

namespace detail {

template <size_t N>
uint64_t fiber_index(const std::array<uint32_t, N>& p, uint32_t qt) {
    uint64_t idx = 0;
    for (size_t c = 0; c < N; ++c) idx = idx * qt + (p[c] % qt);
    return idx;
}

template <size_t N>
std::array<uint32_t, N> fiber_label(uint64_t idx, uint32_t qt) {
    std::array<uint32_t, N> xi{};
    for (size_t c = N; c-- > 0;) {
        xi[c] = static_cast<uint32_t>(idx % qt);
        idx /= qt;
    }
    return xi;
}

// Returns true iff the multiset of points mod qt has a fiber above the
// regularity threshold; reports the worst one.
template <size_t N>
bool worst_fiber(const std::vector<std::array<uint32_t, N>>& pts, uint32_t qt, double eps,
                 uint64_t* out_idx, double* out_ratio) {
    uint64_t cells = 1;
    for (size_t c = 0; c < N; ++c) cells *= qt;
    std::vector<uint32_t> counts(cells, 0);
    for (const auto& p : pts) ++counts[fiber_index<N>(p, qt)];
    const double threshold =
        static_cast<double>(pts.size()) / std::pow(static_cast<double>(qt), 1.0 - eps);
    uint32_t best_count = 0;
    uint64_t best_idx = 0;
    for (uint64_t i = 0; i < cells; ++i)
        if (counts[i] > best_count) {
            best_count = counts[i];
            best_idx = i;
        }
    if (static_cast<double>(best_count) <= threshold) return false;
    *out_idx = best_idx;
    *out_ratio = static_cast<double>(best_count) / threshold;
    return true;
}

template <size_t N, class SetT, class Emit, class Extract>
RegularizationResult<SetT> regularize_points(const SetT& a, double eps, double M, Emit emit,
                                             Extract extract) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("regularize: eps must be in (0,1)");
    if (M < 2.0) throw std::invalid_argument("regularize: M must be >= 2");
    a.check_nonempty("regularize");

    const uint32_t q0 = a.q();
    std::vector<std::array<uint32_t, N>> orig = extract(a);
    std::vector<std::array<uint32_t, N>> cur = orig;
    uint32_t q_cur = q0;

    RegularizationResult<SetT> res{SetT(q0), SetT(q0), q0, {}, std::vector<uint32_t>(N, 0),
                                   eps,      M,        0};
    const double delta0 = a.density();
    res.chain_bound = delta0 >= 1.0
                          ? 0
                          : static_cast<uint32_t>(
                                std::ceil(std::log(1.0 / delta0) / (eps * std::log(M))));

    while (q_cur >= 2) {
        RingCtx ctx(q_cur);
        uint32_t pick_q = 0;
        uint64_t pick_idx = 0;
        double pick_ratio = 0.0;
        for (uint32_t qt : ctx.divisors()) {
            if (qt < 2 || static_cast<double>(qt) < M) continue;
            uint64_t idx;
            double ratio;
            if (worst_fiber<N>(cur, qt, eps, &idx, &ratio) && ratio > pick_ratio) {
                pick_q = qt;
                pick_idx = idx;
                pick_ratio = ratio;
            }
        }
        if (pick_q == 0) break;

        const auto xi = fiber_label<N>(pick_idx, pick_q);
        RingCtx pick_ctx(pick_q);
        res.chain.push_back(
            RegStep{pick_q, std::vector<uint32_t>(xi.begin(), xi.end()), pick_ctx.omega() == 1});

        std::vector<std::array<uint32_t, N>> next_orig, next_cur;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (fiber_index<N>(cur[i], pick_q) != pick_idx) continue;
            std::array<uint32_t, N> norm;
            for (size_t c = 0; c < N; ++c) norm[c] = (cur[i][c] - xi[c]) / pick_q;
            next_orig.push_back(orig[i]);
            next_cur.push_back(norm);
        }
        orig = std::move(next_orig);
        cur = std::move(next_cur);
        q_cur /= pick_q;
    }

    res.q_star = q_cur;
    res.a_star = SetT(q0);
    res.a_star_normalized = SetT(std::max<uint32_t>(q_cur, 1));
    for (const auto& p : orig) emit(res.a_star, p);
    for (const auto& p : cur) emit(res.a_star_normalized, p);

    // accumulated shift: xi_1 + q_1 (xi_2 + q_2 (...)), per coordinate
    for (size_t c = 0; c < N; ++c) {
        uint64_t s = 0;
        for (size_t j = res.chain.size(); j-- > 0;)
            s = res.chain[j].fiber[c] + static_cast<uint64_t>(res.chain[j].modulus) * s;
        res.shift[c] = static_cast<uint32_t>(s);
    }

    // guard: the claimed regularity must hold before returning
    if (q_cur >= 2) {
        RingCtx star_ctx(q_cur);
        for (uint32_t qt : star_ctx.divisors()) {
            if (qt < 2 || static_cast<double>(qt) < M) continue;
            uint64_t idx;
            double ratio;
            if (worst_fiber<N>(cur, qt, eps, &idx, &ratio))
                throw std::logic_error("regularize: postcondition violated");
        }
    }
    return res;
}

}  // namespace detail

inline RegularizationResult<SubsetZq> regularize(const SubsetZq& a, double eps, double M) {
    return detail::regularize_points<1, SubsetZq>(
        a, eps, M, [](SubsetZq& s, const std::array<uint32_t, 1>& p) { s.add(p[0]); },
        [](const SubsetZq& s) {
            std::vector<std::array<uint32_t, 1>> pts;
            pts.reserve(s.size());
            s.for_each([&](uint32_t x) { pts.push_back({x}); });
            return pts;
        });
}

inline RegularizationResult<Subset2D> regularize(const Subset2D& a, double eps, double M) {
    return detail::regularize_points<2, Subset2D>(
        a, eps, M, [](Subset2D& s, const std::array<uint32_t, 2>& p) { s.add(p[0], p[1]); },
        [](const Subset2D& s) {
            std::vector<std::array<uint32_t, 2>> pts;
            pts.reserve(s.size());
            s.for_each([&](uint32_t x, uint32_t y) { pts.push_back({x, y}); });
            return pts;
        });
}

// Independent check of the regularity condition on a returned result, used
// as the oracle by tests and the verify driver: for every divisor qt >= M of
// q_star the largest fiber of the normalized set must be at most
// |A*| / qt^(1-eps). Exhaustive over the divisor lattice.
inline bool regularity_holds(const SubsetZq& a_norm, uint32_t q_star, double eps, double M) {
    if (q_star < 2) return true;
    RingCtx ctx(q_star);
    for (uint32_t qt : ctx.divisors()) {
        if (qt < 2 || static_cast<double>(qt) < M) continue;
        const auto eta = fiber_counts(a_norm, qt);
        uint32_t maxc = 0;
        for (uint32_t c : eta) maxc = std::max(maxc, c);
        if (static_cast<double>(maxc) >
            static_cast<double>(a_norm.size()) / std::pow(static_cast<double>(qt), 1.0 - eps))
            return false;
    }
    return true;
}

inline bool regularity_holds(const Subset2D& a_norm, uint32_t q_star, double eps, double M) {
    if (q_star < 2) return true;
    RingCtx ctx(q_star);
    for (uint32_t qt : ctx.divisors()) {
        if (qt < 2 || static_cast<double>(qt) < M) continue;
        const auto eta = fiber_counts(a_norm, qt);
        uint32_t maxc = 0;
        for (uint32_t c : eta) maxc = std::max(maxc, c);
        if (static_cast<double>(maxc) >
            static_cast<double>(a_norm.size()) / std::pow(static_cast<double>(qt), 1.0 - eps))
            return false;
    }
    return true;
}

}  // namespace diffset
