#pragma once

// Additive characters of Z_q, the definition-level DFT, Kloosterman sums,
// and the numeric checks built on them. Everything is double precision with
// explicit tolerances; q stays small enough that accumulated error is orders
// of magnitude below the slack.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "diffset/report.hpp"
#include "diffset/ring.hpp"
#include "diffset/subset.hpp"

namespace diffset {

inline constexpr double kIdentityTol = 1e-9;    // equalities (Parseval, realness)
inline constexpr double kInequalityTol = 1e-6;  // inequality slack (Weil bound)

// e_q(k) = exp(2 pi i k / q) for k in [0, q), tabulated once.
class RootTable {
public:
    explicit RootTable(uint32_t q) : q_(q), roots_(q) {
        for (uint32_t k = 0; k < q; ++k) {
            const double t = 2.0 * std::numbers::pi * k / q;
            roots_[k] = {std::cos(t), std::sin(t)};
        }
    }
    uint32_t q() const { return q_; }
    std::complex<double> operator()(uint64_t k) const { return roots_[k % q_]; }

private:
    uint32_t q_;
    std::vector<std::complex<double>> roots_;
};

struct SpectrumZq {
    uint32_t q = 0;
    std::vector<std::complex<double>> values;  // values[r] = fhat(r)
};

// fhat(r) = sum_x f(x) e_q(x r). Direct O(q^2) sum.
inline SpectrumZq fourier_transform(const std::vector<double>& f, const RootTable& roots) {
    const uint32_t q = roots.q();
    if (f.size() != q) throw std::invalid_argument("fourier_transform: length mismatch");
    SpectrumZq out{q, std::vector<std::complex<double>>(q)};
    for (uint32_t r = 0; r < q; ++r) {
        std::complex<double> acc = 0.0;
        for (uint32_t x = 0; x < q; ++x)
            if (f[x] != 0.0) acc += f[x] * roots(static_cast<uint64_t>(x) * r);
        out.values[r] = acc;
    }
    return out;
}

inline SpectrumZq fourier_transform(const std::vector<double>& f, uint32_t q) {
    return fourier_transform(f, RootTable(q));
}

inline std::vector<double> indicator_vector(const SubsetZq& a) {
    std::vector<double> f(a.q(), 0.0);
    a.for_each([&](uint32_t x) { f[x] = 1.0; });
    return f;
}

// |sum_r |fhat(r)|^2 - q sum_x f(x)^2| relative to the right-hand side.
inline double parseval_relative_error(const std::vector<double>& f, const SpectrumZq& fhat) {
    double lhs = 0.0, rhs = 0.0;
    for (const auto& v : fhat.values) lhs += std::norm(v);
    for (double x : f) rhs += x * x;
    rhs *= fhat.q;
    if (rhs == 0.0) return lhs == 0.0 ? 0.0 : 1.0;
    return std::abs(lhs - rhs) / rhs;
}

// Unit inverse table: inv[x] = x^-1 for units, 0 elsewhere (0 never marks a
// unit since inverses are nonzero).
inline std::vector<uint32_t> unit_inverse_table(uint32_t q) {
    std::vector<uint32_t> inv(q, 0);
    for (uint32_t x = 1; x < q; ++x)
        if (std::gcd(x, q) == 1) inv[x] = mod_inverse(x, q);
    return inv;
}

// K_q(lambda, r) = sum over units x of e_q(lambda * x^-1 + r * x).
inline std::complex<double> kloosterman(const RootTable& roots,
                                        const std::vector<uint32_t>& inv_table, uint32_t lambda,
                                        uint32_t r) {
    const uint32_t q = roots.q();
    std::complex<double> acc = 0.0;
    for (uint32_t x = 1; x < q; ++x) {
        if (inv_table[x] == 0) continue;
        acc += roots(static_cast<uint64_t>(lambda) * inv_table[x] +
                     static_cast<uint64_t>(r) * x);
    }
    return acc;
}

inline std::complex<double> kloosterman(const RingCtx& ctx, uint32_t lambda, uint32_t r) {
    return kloosterman(RootTable(ctx.q()), unit_inverse_table(ctx.q()), lambda % ctx.q(),
                       r % ctx.q());
}

// Sweeps lambda in Z_q^*, r in Z_q, checking realness, the Weil-type bound
// |K| <= 2 tau(q) sqrt(q), and the Ramanujan value K(lambda, 0) = mu(q) on
// squarefree q.
inline VerificationReport weil_bound_report(const RingCtx& ctx) {
    const uint32_t q = ctx.q();
    if (q > 4096) throw std::invalid_argument("weil_bound_report: q too large for a full sweep");
    const RootTable roots(q);
    const auto inv = unit_inverse_table(q);

    const double bound = 2.0 * ctx.tau() * std::sqrt(static_cast<double>(q));
    double max_abs = 0.0, max_im = 0.0;
    uint32_t arg_lambda = 0, arg_r = 0;
    bool ramanujan_ok = true;
    bool ok = true;

    for (uint32_t lambda = 1; lambda < q; ++lambda) {
        if (!ctx.is_unit(lambda)) continue;
        for (uint32_t r = 0; r < q; ++r) {
            const auto k = kloosterman(roots, inv, lambda, r);
            max_im = std::max(max_im, std::abs(k.imag()));
            const double a = std::abs(k);
            if (a > max_abs) {
                max_abs = a;
                arg_lambda = lambda;
                arg_r = r;
            }
            if (a > bound + kInequalityTol) ok = false;
            if (r == 0 && ctx.is_squarefree() &&
                std::abs(k.real() - ctx.mobius()) > kIdentityTol)
                ramanujan_ok = false;
        }
    }
    if (max_im > kIdentityTol) ok = false;
    if (!ramanujan_ok) ok = false;

    VerificationReport rep;
    rep.suite = "weil";
    rep.instance = {{"q", q}};
    rep.claim = "max |K_q(lambda,r)| <= 2 tau(q) sqrt(q), K real, K(lambda,0)=mu(q) if squarefree";
    rep.lhs = max_abs;
    rep.rhs = bound;
    rep.outcome = outcome_of(ok);
    rep.witness = {{"argmax_lambda", arg_lambda},
                   {"argmax_r", arg_r},
                   {"max_im", max_im},
                   {"ramanujan_ok", ramanujan_ok}};
    return rep;
}

}  // namespace diffset
