#pragma once

// Exact solution counting for the bilinear forms
//   (a1-b1)(a2-b2) = lambda          (product form)
//   (a1-b1)^2 - (a2-b2)^2 = lambda   (square-difference form)
// over 2-D sets, minimal-divisor inclusion searches for d*Z_q inside value
// sets and inside (A-A)(B-B), Vinh-type deviation sweeps for prime q, and a
// CRT-factored fast path for product instances. Brute-force enumeration is
// the reference path throughout; the fast path is validated against it.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "diffset/report.hpp"
#include "diffset/ring.hpp"
#include "diffset/subset.hpp"

namespace diffset {

enum class BilinearForm { product, squarediff };
enum class InclusionMode { units, full };

inline const char* form_name(BilinearForm f) {
    return f == BilinearForm::product ? "product" : "squarediff";
}

inline uint32_t form_value(uint32_t u, uint32_t v, uint32_t q, BilinearForm f) {
    if (f == BilinearForm::product) return static_cast<uint32_t>(uint64_t{u} * v % q);
    const uint64_t uu = uint64_t{u} * u % q, vv = uint64_t{v} * v % q;
    return static_cast<uint32_t>((uu + q - vv) % q);
}

struct SolutionCount {
    uint32_t lambda = 0;
    uint64_t count = 0;
    double main_term = 0.0;  // expected count under equidistribution
    double deviation = 0.0;  // |count - main_term|
};

// One pass over all pairs, bucketing by the form value: histogram[lambda]
// is the exact solution count for every lambda simultaneously.
inline std::vector<uint64_t> solution_histogram(const Subset2D& a, const Subset2D& b,
                                                BilinearForm form) {
    a.check_same_modulus(b);
    const uint32_t q = a.q();
    std::vector<uint64_t> hist(q, 0);
    const auto bs = b.elements();
    a.for_each([&](uint32_t a1, uint32_t a2) {
        for (const auto& [b1, b2] : bs) {
            const uint32_t u = (a1 + q - b1) % q, v = (a2 + q - b2) % q;
            ++hist[form_value(u, v, q, form)];
        }
    });
    return hist;
}

// R(lambda) = #{(u,v) in Z_q^2 : form(u,v) = lambda}; the equidistribution
// reference for main terms. For the product form and unit lambda this is
// exactly phi(q).
inline std::vector<uint64_t> form_pair_histogram(uint32_t q, BilinearForm form) {
    std::vector<uint64_t> hist(q, 0);
    for (uint32_t u = 0; u < q; ++u)
        for (uint32_t v = 0; v < q; ++v) ++hist[form_value(u, v, q, form)];
    return hist;
}

inline SolutionCount make_solution_count(uint64_t n, uint32_t lambda, uint64_t pairs,
                                         uint64_t r_lambda, uint32_t q) {
    SolutionCount out;
    out.lambda = lambda;
    out.count = n;
    out.main_term = static_cast<double>(pairs) * r_lambda / (static_cast<double>(q) * q);
    out.deviation = std::abs(static_cast<double>(n) - out.main_term);
    return out;
}

inline SolutionCount count_solutions(const Subset2D& a, const Subset2D& b, uint32_t lambda,
                                     BilinearForm form) {
    a.check_same_modulus(b);
    const uint32_t q = a.q();
    lambda %= q;
    uint64_t n = 0;
    const auto bs = b.elements();
    a.for_each([&](uint32_t a1, uint32_t a2) {
        for (const auto& [b1, b2] : bs) {
            const uint32_t u = (a1 + q - b1) % q, v = (a2 + q - b2) % q;
            if (form_value(u, v, q, form) == lambda) ++n;
        }
    });
    uint64_t r_lambda = 0;
    for (uint32_t u = 0; u < q; ++u)
        for (uint32_t v = 0; v < q; ++v)
            if (form_value(u, v, q, form) == lambda) ++r_lambda;
    return make_solution_count(n, lambda, uint64_t{a.size()} * b.size(), r_lambda, q);
}

inline SolutionCount count_product_solutions(const Subset2D& a, const Subset2D& b,
                                             uint32_t lambda) {
    return count_solutions(a, b, lambda, BilinearForm::product);
}

inline SolutionCount count_squarediff_solutions(const Subset2D& a, const Subset2D& b,
                                                uint32_t lambda) {
    return count_solutions(a, b, lambda, BilinearForm::squarediff);
}

// (A-A)(B-B) as an exact set.
inline SubsetZq product_of_differences(const SubsetZq& a, const SubsetZq& b) {
    a.check_same_modulus(b);
    return product_set(difference_set(a), difference_set(b));
}

struct MinimalDivisor {
    uint32_t d = 0;
    SubsetZq certificate;  // the product set, for audit
};

// Smallest divisor d of q with d*Z_q inside (A-A)(B-B). Always succeeds:
// d = q asks only for {0}, and 0 = 0*(b-b') is always present.
inline MinimalDivisor minimal_divisor_d(const SubsetZq& a, const SubsetZq& b,
                                        const RingCtx& ctx) {
    a.check_nonempty("minimal_divisor_d");
    b.check_nonempty("minimal_divisor_d");
    SubsetZq prod = product_of_differences(a, b);
    for (uint32_t d : ctx.divisors())
        if (dilate_subgroup_subset_test(d, prod)) return {d, std::move(prod)};
    return {ctx.q(), std::move(prod)};  // unreachable: d = q always passes
}

// {form(a1-b1, a2-b2)} over all pairs.
inline SubsetZq value_set_2d(const Subset2D& a, const Subset2D& b, BilinearForm form) {
    a.check_same_modulus(b);
    const uint32_t q = a.q();
    SubsetZq out(q);
    const auto bs = b.elements();
    a.for_each([&](uint32_t a1, uint32_t a2) {
        for (const auto& [b1, b2] : bs) {
            const uint32_t u = (a1 + q - b1) % q, v = (a2 + q - b2) % q;
            out.add(form_value(u, v, q, form));
        }
    });
    return out;
}

struct MinimalDivisor2D {
    std::optional<uint32_t> d;  // empty when no divisor works (possible when A != B)
    SubsetZq value_set;
};

inline MinimalDivisor2D minimal_divisor_d_2d(const Subset2D& a, const Subset2D& b,
                                             InclusionMode mode, BilinearForm form,
                                             const RingCtx& ctx) {
    a.check_nonempty("minimal_divisor_d_2d");
    b.check_nonempty("minimal_divisor_d_2d");
    SubsetZq values = value_set_2d(a, b, form);
    for (uint32_t d : ctx.divisors())
        if (dilate_subgroup_subset_test(d, values, mode == InclusionMode::units))
            return {d, std::move(values)};
    return {std::nullopt, std::move(values)};
}

// Vinh-type deviation sweep at prime q:
//   |N(lambda) - |A||B|/q| < 4 q^(7/8) sqrt(|A||B|)   for every lambda.
inline VerificationReport vinh_deviation_report(const Subset2D& a, const Subset2D& b,
                                                BilinearForm form, const RingCtx& ctx) {
    if (!ctx.is_prime())
        throw std::invalid_argument("vinh_deviation_report: the bound is stated for prime q");
    const uint32_t q = ctx.q();
    const auto hist = solution_histogram(a, b, form);
    const double pairs = static_cast<double>(a.size()) * b.size();
    const double main = pairs / q;
    const double bound = 4.0 * std::pow(static_cast<double>(q), 7.0 / 8.0) * std::sqrt(pairs);

    double max_dev = 0.0;
    uint32_t arg = 0;
    bool ok = true;
    for (uint32_t lam = 0; lam < q; ++lam) {
        const double dev = std::abs(static_cast<double>(hist[lam]) - main);
        if (dev > max_dev) {
            max_dev = dev;
            arg = lam;
        }
        if (dev >= bound) ok = false;
    }
    const bool threshold_met = pairs >= 16.0 * std::pow(static_cast<double>(q), 15.0 / 4.0);

    VerificationReport rep;
    rep.suite = "vinh";
    rep.instance = {{"q", q}, {"A_size", a.size()}, {"B_size", b.size()},
                    {"form", form_name(form)}};
    rep.claim = "|N(lambda) - |A||B|/q| < 4 q^{7/8} sqrt(|A||B|) for all lambda";
    rep.lhs = max_dev;
    rep.rhs = bound;
    rep.outcome = outcome_of(ok);
    rep.witness = {{"argmax_lambda", arg}, {"solvability_threshold_met", threshold_met}};
    return rep;
}

struct FiberSelection {
    SubsetZq set;     // {b - s : b in B, b = s mod q'}; every element divisible by q'
    uint32_t shift;   // the chosen s
};

// Densest fiber of B over residues mod q', normalized by subtracting the
// shift. Pigeonhole guarantees |set| >= |B| / q'.
inline FiberSelection fiber_shift_select(const SubsetZq& b, uint32_t qp) {
    b.check_nonempty("fiber_shift_select");
    if (qp == 0 || b.q() % qp != 0)
        throw std::invalid_argument("fiber_shift_select: q' must divide q");
    const auto eta = fiber_counts(b, qp);
    uint32_t best_s = 0;
    for (uint32_t s = 1; s < qp; ++s)
        if (eta[s] > eta[best_s]) best_s = s;
    SubsetZq out(b.q());
    b.for_each([&](uint32_t x) {
        if (x % qp == best_s) out.add(x - best_s);
    });
    return {std::move(out), best_s};
}

// ---- CRT product instances ----------------------------------------------

// Builds the subset of Z_q^2 whose reduction mod each prime-power factor of
// q lies in the corresponding part. Parts are aligned with ctx.factors().
inline Subset2D crt_product_2d(const std::vector<Subset2D>& parts, const RingCtx& ctx) {
    if (parts.size() != ctx.factors().size())
        throw std::invalid_argument("crt_product_2d: part count mismatch");
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i].q() != ctx.factors()[i].value)
            throw std::invalid_argument("crt_product_2d: part modulus mismatch");
    const uint32_t q = ctx.q();
    Subset2D out(q);
    for (uint32_t x = 0; x < q; ++x)
        for (uint32_t y = 0; y < q; ++y) {
            bool in = true;
            for (size_t i = 0; i < parts.size() && in; ++i) {
                const uint32_t m = ctx.factors()[i].value;
                in = parts[i].contains(x % m, y % m);
            }
            if (in) out.add(x, y);
        }
    return out;
}

// Fast path: when A and B are CRT products over the prime-power factors of
// q, the count over Z_q factors as the product of per-component counts.
inline uint64_t crt_factored_count(const std::vector<Subset2D>& a_parts,
                                   const std::vector<Subset2D>& b_parts, uint32_t lambda,
                                   BilinearForm form, const RingCtx& ctx) {
    if (a_parts.size() != ctx.factors().size() || b_parts.size() != ctx.factors().size())
        throw std::invalid_argument("crt_factored_count: part count mismatch");
    uint64_t total = 1;
    for (size_t i = 0; i < a_parts.size(); ++i) {
        const uint32_t m = ctx.factors()[i].value;
        const auto hist = solution_histogram(a_parts[i], b_parts[i], form);
        total *= hist[lambda % m];
    }
    return total;
}

}  // namespace diffset
