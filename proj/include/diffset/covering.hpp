#pragma once

// Additive and multiplicative covering numbers with constructive
// certificates. cov_exact is a branch-and-bound exact set-cover solver over
// the candidate shifts/dilators: greedy seed for the upper bound, then DFS
// choosing the uncovered element with the fewest candidate covers, pruned by
// a coverage lower bound. Dominated candidates are dropped up front, which
// keeps the tree small on the highly symmetric instances that arise here.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "diffset/equations.hpp"
#include "diffset/report.hpp"
#include "diffset/ring.hpp"
#include "diffset/rng.hpp"
#include "diffset/subset.hpp"

namespace diffset {

enum class CoverKind { additive, multiplicative };

struct infeasible_cover : std::domain_error {
    using std::domain_error::domain_error;
};

inline const char* cover_kind_name(CoverKind k) {
    return k == CoverKind::additive ? "additive" : "multiplicative";
}

struct CoverCertificate {
    CoverKind kind = CoverKind::additive;
    SubsetZq x_set;
    SubsetZq target;
    bool verified = false;
};

// Elementwise recomputation of X+S (or the union of x*S), deliberately not
// sharing code with the solver's mask machinery.
inline bool verify_cover(const SubsetZq& x_set, const SubsetZq& target, CoverKind kind) {
    const uint32_t q = target.q();
    std::vector<bool> hit(q, false);
    x_set.for_each([&](uint32_t x) {
        target.for_each([&](uint32_t s) {
            if (kind == CoverKind::additive)
                hit[(x + s) % q] = true;
            else
                hit[static_cast<uint32_t>(uint64_t{x} * s % q)] = true;
        });
    });
    for (bool h : hit)
        if (!h) return false;
    return true;
}

inline CoverCertificate make_certificate(CoverKind kind, SubsetZq x_set, SubsetZq target) {
    CoverCertificate cert{kind, std::move(x_set), std::move(target), false};
    cert.verified = verify_cover(cert.x_set, cert.target, kind);
    return cert;
}

namespace detail {

struct CoverProblem {
    uint32_t q = 0;
    std::vector<uint32_t> rep;     // representative shift/dilator per candidate
    std::vector<Bitvec> mask;      // what the candidate covers
    std::vector<std::vector<uint32_t>> covers_of;  // element -> candidate indices
    uint32_t max_mask_size = 0;
};

inline Bitvec candidate_mask(const SubsetZq& s, uint32_t x, CoverKind kind) {
    const uint32_t q = s.q();
    Bitvec m(q);
    if (kind == CoverKind::additive)
        m.or_rotated(s.bits(), x);
    else
        s.for_each([&](uint32_t e) { m.set(static_cast<uint32_t>(uint64_t{x} * e % q)); });
    return m;
}

inline CoverProblem build_cover_problem(const SubsetZq& s, CoverKind kind) {
    const uint32_t q = s.q();
    std::vector<Bitvec> raw;
    raw.reserve(q);
    for (uint32_t x = 0; x < q; ++x) raw.push_back(candidate_mask(s, x, kind));

    // feasibility: some selection of candidates must be able to reach everything
    Bitvec reach(q);
    for (const auto& m : raw) reach |= m;
    if (reach.count() != q)
        throw infeasible_cover(std::string("cov_exact: no ") + cover_kind_name(kind) +
                               " cover exists (union of all candidates misses elements)");

    CoverProblem pb;
    pb.q = q;
    for (uint32_t x = 0; x < q; ++x) {
        bool dominated = false;
        for (uint32_t y = 0; y < q && !dominated; ++y) {
            if (y == x || !raw[x].is_subset_of(raw[y])) continue;
            // equal masks keep the smaller representative
            dominated = !(raw[y] == raw[x]) || y < x;
        }
        if (!dominated) {
            pb.rep.push_back(x);
            pb.mask.push_back(raw[x]);
            pb.max_mask_size = std::max(pb.max_mask_size, raw[x].count());
        }
    }
    pb.covers_of.assign(q, {});
    for (uint32_t c = 0; c < pb.mask.size(); ++c)
        pb.mask[c].for_each_bit([&](uint32_t e) { pb.covers_of[e].push_back(c); });
    return pb;
}

class CoverSolver {
public:
    explicit CoverSolver(const CoverProblem& pb) : pb_(pb) {}

    std::vector<uint32_t> solve() {
        Bitvec uncovered(pb_.q);
        uncovered.fill_all();
        best_ = greedy(uncovered);
        cur_.clear();
        dfs(uncovered);
        return best_;
    }

private:
    std::vector<uint32_t> greedy(Bitvec uncovered) const {
        std::vector<uint32_t> picks;
        while (uncovered.any()) {
            size_t best_c = 0;
            uint32_t best_gain = 0;
            for (size_t c = 0; c < pb_.mask.size(); ++c) {
                Bitvec tmp = pb_.mask[c];
                tmp &= uncovered;
                const uint32_t gain = tmp.count();
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            picks.push_back(static_cast<uint32_t>(best_c));
            uncovered.and_not(pb_.mask[best_c]);
        }
        return picks;
    }

    void dfs(const Bitvec& uncovered) {
        const uint32_t cnt = uncovered.count();
        if (cnt == 0) {
            if (cur_.size() < best_.size()) best_ = cur_;
            return;
        }
        const uint32_t lb = (cnt + pb_.max_mask_size - 1) / pb_.max_mask_size;
        if (cur_.size() + lb >= best_.size()) return;

        // element with the fewest candidate covers
        uint32_t pick_e = 0;
        size_t pick_n = SIZE_MAX;
        uncovered.for_each_bit([&](uint32_t e) {
            if (pb_.covers_of[e].size() < pick_n) {
                pick_n = pb_.covers_of[e].size();
                pick_e = e;
            }
        });

        // branch on candidates covering it, most new coverage first
        std::vector<std::pair<uint32_t, uint32_t>> order;  // (gain, candidate)
        for (uint32_t c : pb_.covers_of[pick_e]) {
            Bitvec tmp = pb_.mask[c];
            tmp &= uncovered;
            order.emplace_back(tmp.count(), c);
        }
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (const auto& [gain, c] : order) {
            Bitvec next = uncovered;
            next.and_not(pb_.mask[c]);
            cur_.push_back(c);
            dfs(next);
            cur_.pop_back();
        }
    }

    const CoverProblem& pb_;
    std::vector<uint32_t> best_, cur_;
};

}  // namespace detail

struct CoverResult {
    uint32_t k = 0;
    CoverCertificate cert;
};

// Exact minimum cover size with a verified witness. Throws infeasible_cover
// for the multiplicative kind when the union over all dilators cannot reach
// Z_q (no unit in S).
inline CoverResult cov_exact(const SubsetZq& s, CoverKind kind) {
    s.check_nonempty("cov_exact");
    const auto pb = detail::build_cover_problem(s, kind);
    detail::CoverSolver solver(pb);
    const auto picks = solver.solve();
    SubsetZq x_set(s.q());
    for (uint32_t c : picks) x_set.add(pb.rep[c]);
    CoverResult out{static_cast<uint32_t>(picks.size()), make_certificate(kind, x_set, s)};
    if (!out.cert.verified) throw std::logic_error("cov_exact: certificate failed to verify");
    return out;
}

inline bool cov_feasible(const SubsetZq& s, CoverKind kind) {
    if (kind == CoverKind::additive) return !s.empty();
    bool has_unit = false;
    const uint32_t q = s.q();
    s.for_each([&](uint32_t x) { has_unit = has_unit || std::gcd(x, q) == 1; });
    return has_unit;
}

// Ruzsa covering: greedy maximal packing of disjoint translates A+z gives Z
// with Z_q = (A-A) + Z and |Z| <= q/|A|.
inline CoverCertificate ruzsa_cover(const SubsetZq& a) {
    a.check_nonempty("ruzsa_cover");
    const uint32_t q = a.q();
    Bitvec occupied(q);
    SubsetZq z(q);
    for (uint32_t shift = 0; shift < q; ++shift) {
        Bitvec translate(q);
        translate.or_rotated(a.bits(), shift);
        if (!translate.intersects(occupied)) {
            z.add(shift);
            occupied |= translate;
        }
    }
    return make_certificate(CoverKind::additive, z, difference_set(a));
}

struct TheoremCover {
    uint32_t k_star = 0;
    bool precondition_ok = false;  // least prime factor of q > 2/alpha + 3
    bool x_built = false;          // all of 1..k_star invertible mod q
    CoverCertificate cert;         // X = [k_star]^-1 against target A-A
};

// k* = ceil(1/alpha - 1) + 1 and X = { j^-1 : j in [k*] }. When the least
// prime factor of q exceeds 2/alpha + 3 the certificate must verify:
// X (A-A) = Z_q.
inline TheoremCover theorem_cover_certificate(const SubsetZq& a, const RingCtx& ctx) {
    a.check_nonempty("theorem_cover_certificate");
    const uint32_t q = ctx.q();
    TheoremCover out;
    out.k_star = (q - 1) / a.size() + 1;  // = ceil(q/|A| - 1) + 1 in integers
    // p1 > 2 q/|A| + 3  <=>  p1 |A| > 2q + 3|A|
    out.precondition_ok =
        static_cast<uint64_t>(ctx.least_prime()) * a.size() > 2ull * q + 3ull * a.size();

    SubsetZq x_set(q);
    out.x_built = true;
    for (uint32_t j = 1; j <= out.k_star && out.x_built; ++j) {
        if (std::gcd(j, q) != 1) {
            out.x_built = false;  // only possible when the precondition fails
            break;
        }
        x_set.add(mod_inverse(j, q));
    }
    out.cert = out.x_built
                   ? make_certificate(CoverKind::multiplicative, x_set, difference_set(a))
                   : CoverCertificate{CoverKind::multiplicative, SubsetZq(q), difference_set(a),
                                      false};
    return out;
}

// cov^x(S-S) <= cov^+(S), asserted when 1..cov^+(S) are all units. Also
// exercises the constructive route: the dilates j^-1 (S-S), j in [cov^+(S)],
// must already cover Z_q.
inline VerificationReport prop_cov_transfer(const SubsetZq& s, const RingCtx& ctx) {
    const uint32_t q = ctx.q();
    const auto add = cov_exact(s, CoverKind::additive);
    bool precondition = true;
    for (uint32_t j = 1; j <= add.k; ++j) precondition = precondition && ctx.is_unit(j);

    VerificationReport rep;
    rep.suite = "covtransfer";
    rep.instance = {{"q", q}, {"S", to_literal(s, false)}};
    rep.claim = "cov_x(S-S) <= cov_+(S) when [1..cov_+(S)] are units";
    rep.rhs = add.k;

    const SubsetZq diff = difference_set(s);
    if (!precondition) {
        rep.outcome = Outcome::informational;
        rep.witness = {{"precondition_ok", false},
                       {"cov_plus_X", to_literal(add.cert.x_set, false)}};
        return rep;
    }
    if (!cov_feasible(diff, CoverKind::multiplicative)) {
        // with the precondition in force the dilates of S-S must cover
        rep.outcome = Outcome::failed;
        rep.witness = {{"precondition_ok", true}, {"infeasible", true}};
        return rep;
    }

    const auto mul = cov_exact(diff, CoverKind::multiplicative);
    SubsetZq constructive(q);
    for (uint32_t j = 1; j <= add.k; ++j) constructive.add(mod_inverse(j, q));
    const bool constructive_ok = verify_cover(constructive, diff, CoverKind::multiplicative);

    rep.lhs = mul.k;
    rep.outcome = outcome_of(mul.k <= add.k && constructive_ok);
    rep.witness = {{"precondition_ok", true},
                   {"cov_plus_X", to_literal(add.cert.x_set, false)},
                   {"cov_times_X", to_literal(mul.cert.x_set, false)},
                   {"constructive_route_ok", constructive_ok}};
    return rep;
}

// cov^x(2A-2A) <= 1/alpha, asserted when 1..floor(1/alpha) are all units.
inline VerificationReport corollary_2a2a(const SubsetZq& a, const RingCtx& ctx) {
    a.check_nonempty("corollary_2a2a");
    const uint32_t q = ctx.q();
    const uint32_t bound = q / a.size();  // floor(1/alpha)
    bool precondition = true;
    for (uint32_t j = 1; j <= bound; ++j) precondition = precondition && ctx.is_unit(j);

    SubsetZq twice = higher_sumset(2, a);
    SubsetZq t = sumset(twice, negate_set(twice));  // 2A - 2A

    VerificationReport rep;
    rep.suite = "cov2a2a";
    rep.instance = {{"q", q}, {"A", to_literal(a, false)}};
    rep.claim = "cov_x(2A-2A) <= 1/alpha when [1..floor(1/alpha)] are units";
    rep.rhs = static_cast<double>(q) / a.size();

    if (!precondition) {
        rep.outcome = Outcome::informational;
        rep.witness = {{"precondition_ok", false}};
        return rep;
    }
    if (!cov_feasible(t, CoverKind::multiplicative)) {
        rep.outcome = Outcome::failed;
        rep.witness = {{"precondition_ok", true}, {"infeasible", true}};
        return rep;
    }
    const auto mul = cov_exact(t, CoverKind::multiplicative);
    rep.lhs = mul.k;
    // integer cov <= real 1/alpha  <=>  cov * |A| <= q
    rep.outcome = outcome_of(static_cast<uint64_t>(mul.k) * a.size() <= q);
    rep.witness = {{"precondition_ok", true}, {"X", to_literal(mul.cert.x_set, false)}};
    return rep;
}

struct IntersectionCover {
    double bound = 0.0;            // 1/(alpha_1 ... alpha_k) + 1
    std::vector<uint32_t> shifts;  // s* maximizing |A_1 cap (A_2 - s_1) cap ...|
    uint32_t best_size = 0;
    bool exhaustive = false;
    TheoremCover tc;               // certificate produced from A_{s*}
    CoverCertificate cert;         // the same X against the intersection of (A_i - A_i)
};

namespace detail {

inline SubsetZq shifted_intersection(const std::vector<SubsetZq>& as,
                                     const std::vector<uint32_t>& shifts) {
    const uint32_t q = as[0].q();
    SubsetZq acc = as[0];
    for (size_t i = 1; i < as.size(); ++i) {
        // A_i - s  =  rotate(A_i, q - s)
        Bitvec rotated(q);
        rotated.or_rotated(as[i].bits(), (q - shifts[i - 1] % q) % q);
        acc.mutable_bits() &= rotated;
    }
    return acc;
}

}  // namespace detail

// Finds the densest shifted intersection A_1 cap (A_2 - s_1) cap ... and
// applies the covering theorem to it; the resulting X covers the full
// intersection of difference sets. Shift search is exhaustive while
// q^(k-1) <= 10^6, seeded random sampling beyond that.
inline IntersectionCover intersection_cover(const std::vector<SubsetZq>& as, const RingCtx& ctx,
                                            uint64_t seed = 1, uint64_t sample_budget = 20000) {
    if (as.empty()) throw std::invalid_argument("intersection_cover: need at least one set");
    for (const auto& a : as) {
        a.check_nonempty("intersection_cover");
        if (a.q() != ctx.q()) throw std::invalid_argument("intersection_cover: modulus mismatch");
    }
    const uint32_t q = ctx.q();
    const size_t k = as.size();

    IntersectionCover out;
    double alpha_prod = 1.0;
    for (const auto& a : as) alpha_prod *= a.density();
    out.bound = 1.0 / alpha_prod + 1.0;

    std::vector<uint32_t> best_shifts(k - 1, 0);
    uint32_t best_size = 0;
    double combos = 1.0;
    for (size_t i = 1; i < k; ++i) combos *= q;
    out.exhaustive = combos <= 1e6;

    if (out.exhaustive) {
        std::vector<uint32_t> shifts(k - 1, 0);
        for (;;) {
            const uint32_t sz = detail::shifted_intersection(as, shifts).size();
            if (sz > best_size) {
                best_size = sz;
                best_shifts = shifts;
            }
            size_t pos = 0;
            while (pos < shifts.size() && ++shifts[pos] == q) shifts[pos++] = 0;
            if (pos == shifts.size()) break;
        }
    } else {
        // pigeonhole guarantees a shift with |A_s| >= alpha_prod * q; sample
        // until we see one (or the budget runs out, keeping the best)
        Rng rng(seed);
        const uint32_t floor_target = static_cast<uint32_t>(std::ceil(alpha_prod * q));
        std::vector<uint32_t> shifts(k - 1, 0);
        for (uint64_t it = 0; it < sample_budget; ++it) {
            for (auto& s : shifts) s = rng.below(q);
            const uint32_t sz = detail::shifted_intersection(as, shifts).size();
            if (sz > best_size) {
                best_size = sz;
                best_shifts = shifts;
            }
            if (best_size >= floor_target) break;
        }
    }

    out.shifts = best_shifts;
    out.best_size = best_size;
    const SubsetZq a_star = detail::shifted_intersection(as, best_shifts);
    out.tc = theorem_cover_certificate(a_star, ctx);

    SubsetZq target = difference_set(as[0]);
    for (size_t i = 1; i < k; ++i) target &= difference_set(as[i]);
    out.cert = out.tc.x_built
                   ? make_certificate(CoverKind::multiplicative, out.tc.cert.x_set, target)
                   : CoverCertificate{CoverKind::multiplicative, SubsetZq(q), target, false};
    return out;
}

// B(Gamma, eps) = { x : || x gamma / p || <= eps for all gamma }.
inline SubsetZq bohr_set(uint32_t p, const std::vector<uint32_t>& gamma, double eps) {
    if (!is_prime_u32(p)) throw std::invalid_argument("bohr_set: p must be prime");
    if (gamma.empty()) throw std::invalid_argument("bohr_set: frequency set must be nonempty");
    if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("bohr_set: eps must be in (0,1]");
    SubsetZq out(p);
    const double threshold = eps * p;
    for (uint32_t x = 0; x < p; ++x) {
        bool in = true;
        for (uint32_t g : gamma) {
            const uint32_t r = static_cast<uint32_t>(uint64_t{x} * (g % p) % p);
            if (std::min(r, p - r) > threshold) {
                in = false;
                break;
            }
        }
        if (in) out.add(x);
    }
    return out;
}

// cov^x(B(Gamma,eps)) against eps^{-|Gamma|}; asserted while the pigeonhole
// box count ceil(1/eps)^{|Gamma|} stays below p, informational otherwise.
inline VerificationReport bohr_cover_report(uint32_t p, const std::vector<uint32_t>& gamma,
                                            double eps) {
    const SubsetZq b = bohr_set(p, gamma, eps);
    const double claimed = std::pow(1.0 / eps, static_cast<double>(gamma.size()));
    const double boxes =
        std::pow(std::ceil(1.0 / eps - 1e-9), static_cast<double>(gamma.size()));
    const bool assertable = boxes < static_cast<double>(p);

    VerificationReport rep;
    rep.suite = "bohr";
    rep.instance = {{"p", p}, {"gamma", gamma}, {"eps", eps}};
    rep.claim = "cov_x(B(Gamma,eps)) <= eps^{-|Gamma|}";
    rep.rhs = claimed;
    if (!cov_feasible(b, CoverKind::multiplicative)) {
        rep.outcome = outcome_of(!assertable);  // must not happen under the pigeonhole regime
        rep.witness = {{"B_size", b.size()}, {"infeasible", true}};
        return rep;
    }
    const auto mul = cov_exact(b, CoverKind::multiplicative);
    rep.lhs = mul.k;
    rep.outcome = assertable ? outcome_of(static_cast<double>(mul.k) <= boxes)
                             : Outcome::informational;
    rep.witness = {{"B_size", b.size()},
                   {"B", to_literal(b, false)},
                   {"X", to_literal(mul.cert.x_set, false)},
                   {"box_bound", boxes}};
    return rep;
}

// The interval S = [p/3, 2p/3): sum-free in Z_p, positive density, yet its
// multiplicative covering number grows with p.
inline SubsetZq schur_interval(uint32_t p) {
    SubsetZq s(p);
    const uint32_t lo = (p + 2) / 3;       // ceil(p/3)
    const uint32_t hi = (2 * p + 2) / 3;   // ceil(2p/3), exclusive
    for (uint32_t x = lo; x < hi; ++x) s.add(x);
    return s;
}

inline VerificationReport schur_interval_example(uint32_t p) {
    if (p < 7 || !is_prime_u32(p))
        throw std::invalid_argument("schur_interval_example: p must be a prime >= 7");
    const SubsetZq s = schur_interval(p);

    bool sum_free = true;
    s.for_each([&](uint32_t a) {
        s.for_each([&](uint32_t b) {
            if (s.contains((a + b) % p)) sum_free = false;
        });
    });

    const auto mul = cov_exact(s, CoverKind::multiplicative);
    const auto add = cov_exact(s, CoverKind::additive);

    VerificationReport rep;
    rep.suite = "schur";
    rep.instance = {{"p", p}};
    rep.claim = "S=[p/3,2p/3) is sum-free; cov_x(S) recorded for the growth table";
    rep.lhs = mul.k;
    rep.rhs = 0.0;
    rep.outcome = outcome_of(sum_free);
    rep.witness = {{"S", to_literal(s, false)},
                   {"S_size", s.size()},
                   {"cov_plus", add.k},
                   {"cov_times", mul.k},
                   {"gap", max_gap(s)},
                   {"sum_free", sum_free}};
    return rep;
}

// Alternate route to the product-of-differences theorem through covering:
// X(B-B) = Z_q from the covering theorem, then the smallest d >= 1 (any
// integer, divisor of q or not) with d*X inside A-A gives
// d * Z_q inside (A-A)(B-B), with d <= alpha^{-(beta^-1 + 1)}.
inline VerificationReport fish_via_covering(const SubsetZq& a, const SubsetZq& b,
                                            const RingCtx& ctx) {
    a.check_nonempty("fish_via_covering");
    b.check_nonempty("fish_via_covering");
    const uint32_t q = ctx.q();
    const double alpha = a.density(), beta = b.density();

    VerificationReport rep;
    rep.suite = "fish1d";
    rep.instance = {{"q", q}, {"A", to_literal(a, false)}, {"B", to_literal(b, false)}};
    rep.claim = "exists d <= alpha^{-1/beta - 1} with d*Z_q in (A-A)(B-B), via covering";

    const TheoremCover tc = theorem_cover_certificate(b, ctx);
    if (!tc.precondition_ok || !tc.x_built || !tc.cert.verified) {
        rep.outcome = Outcome::informational;
        rep.witness = {{"precondition_ok", tc.precondition_ok}, {"cover_verified", tc.cert.verified}};
        return rep;
    }

    const SubsetZq diff_a = difference_set(a);
    const uint32_t n = tc.cert.x_set.size();
    const double limit_real = std::pow(alpha, -static_cast<double>(n));
    const uint64_t limit =
        limit_real > 1e18 ? ~uint64_t{0} : static_cast<uint64_t>(std::floor(limit_real + 1e-9));
    // the pigeonhole guarantee can be astronomically large at low density;
    // cap the scan and report instead of hanging
    constexpr uint64_t kScanBudget = 10'000'000;
    const uint64_t scan_to = std::min(limit, kScanBudget);
    uint64_t found_d = 0;
    for (uint64_t d = 1; d <= scan_to; ++d) {
        bool ok = true;
        tc.cert.x_set.for_each([&](uint32_t x) {
            if (!diff_a.contains(static_cast<uint32_t>(d * x % q))) ok = false;
        });
        if (ok) {
            found_d = d;
            break;
        }
    }
    if (found_d == 0 && scan_to < limit) {
        rep.outcome = Outcome::informational;
        rep.witness = {{"scan_budget_exhausted", true}, {"scanned_up_to", scan_to}};
        return rep;
    }

    const double claimed_bound = std::pow(alpha, -(1.0 / beta + 1.0));
    bool inclusion_ok = false;
    if (found_d != 0) {
        const SubsetZq prod = product_of_differences(a, b);
        inclusion_ok =
            dilated_full_group(static_cast<uint32_t>(found_d % q), q).is_subset_of(prod);
    }
    rep.lhs = static_cast<double>(found_d);
    rep.rhs = claimed_bound;
    rep.outcome = outcome_of(found_d != 0 && static_cast<double>(found_d) <= claimed_bound + 1e-9 &&
                             inclusion_ok);
    rep.witness = {{"X", to_literal(tc.cert.x_set, false)},
                   {"k_star", tc.k_star},
                   {"pigeonhole_limit", limit},
                   {"inclusion_verified", inclusion_ok}};
    return rep;
}

}  // namespace diffset
