#pragma once

// Exact arithmetic over Z_q for small moduli: factorization, divisor
// lattice, CRT, units, Legendre symbol. Everything is deterministic and
// sized for q <= 2^20; residues are canonical representatives in [0, q).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffset {

inline constexpr uint32_t kMinModulus = 2;
inline constexpr uint32_t kMaxModulus = 1u << 20;

struct not_a_unit : std::domain_error {
    using std::domain_error::domain_error;
};

struct PrimePower {
    uint32_t prime = 0;
    uint32_t exponent = 0;
    uint32_t value = 0;  // prime^exponent
};

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

// Immutable context for one modulus. Safe to share across threads.
class RingCtx {
public:
    explicit RingCtx(uint32_t q) : q_(q) {
        if (q < kMinModulus || q > kMaxModulus)
            throw std::invalid_argument("RingCtx: modulus out of supported range [2, 2^20]: " +
                                        std::to_string(q));
        uint32_t n = q;
        for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= n; ++p) {
            if (n % p != 0) continue;
            PrimePower f{p, 0, 1};
            while (n % p == 0) {
                n /= p;
                ++f.exponent;
                f.value *= p;
            }
            factors_.push_back(f);
        }
        if (n > 1) factors_.push_back(PrimePower{n, 1, n});

        phi_ = q;
        for (const auto& f : factors_) phi_ = phi_ / f.prime * (f.prime - 1);

        divisors_.push_back(1);
        for (const auto& f : factors_) {
            const size_t base = divisors_.size();
            uint32_t pk = 1;
            for (uint32_t e = 1; e <= f.exponent; ++e) {
                pk *= f.prime;
                for (size_t i = 0; i < base; ++i) divisors_.push_back(divisors_[i] * pk);
            }
        }
        std::sort(divisors_.begin(), divisors_.end());
    }

    uint32_t q() const { return q_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    const std::vector<uint32_t>& divisors() const { return divisors_; }
    uint32_t phi() const { return phi_; }
    uint32_t tau() const { return static_cast<uint32_t>(divisors_.size()); }
    uint32_t omega() const { return static_cast<uint32_t>(factors_.size()); }
    uint32_t least_prime() const { return factors_.front().prime; }

    bool is_prime() const { return factors_.size() == 1 && factors_[0].exponent == 1; }
    bool is_squarefree() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const PrimePower& f) { return f.exponent == 1; });
    }
    bool divides(uint32_t d) const { return d >= 1 && q_ % d == 0; }
    bool is_unit(uint32_t x) const { return std::gcd(x % q_, q_) == 1; }

    // Moebius function of q itself.
    int mobius() const {
        if (!is_squarefree()) return 0;
        return (factors_.size() % 2 == 0) ? 1 : -1;
    }

private:
    uint32_t q_;
    std::vector<PrimePower> factors_;
    std::vector<uint32_t> divisors_;
    uint32_t phi_ = 0;
};

inline RingCtx build_ctx(uint32_t q) { return RingCtx(q); }

// Inverse of x in Z_q*, extended Euclid. Throws not_a_unit if gcd(x,q) > 1.
inline uint32_t mod_inverse(uint32_t x, uint32_t q) {
    x %= q;
    int64_t r0 = q, r1 = x, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const int64_t k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        s0 -= k * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1)
        throw not_a_unit("mod_inverse: gcd(" + std::to_string(x) + ", " + std::to_string(q) +
                         ") = " + std::to_string(r0));
    return static_cast<uint32_t>(s0 < 0 ? s0 + q : s0);
}

inline uint32_t mod_inverse(uint32_t x, const RingCtx& ctx) { return mod_inverse(x, ctx.q()); }

// x mod p_i^rho_i for each prime power of q, in factor order.
inline std::vector<uint32_t> crt_split(uint32_t x, const RingCtx& ctx) {
    std::vector<uint32_t> parts;
    parts.reserve(ctx.factors().size());
    for (const auto& f : ctx.factors()) parts.push_back(x % f.value);
    return parts;
}

inline uint32_t crt_combine(const std::vector<uint32_t>& parts, const RingCtx& ctx) {
    if (parts.size() != ctx.factors().size())
        throw std::invalid_argument("crt_combine: component count mismatch");
    uint64_t x = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        const uint32_t m = ctx.factors()[i].value;
        const uint32_t rest = ctx.q() / m;
        // x += parts[i] * rest * (rest^-1 mod m), all mod q
        const uint64_t coeff = static_cast<uint64_t>(rest) * mod_inverse(rest % m, m) % ctx.q();
        x = (x + static_cast<uint64_t>(parts[i] % m) * coeff) % ctx.q();
    }
    return static_cast<uint32_t>(x);
}

// Legendre symbol via the Euler criterion.
inline int legendre_symbol(uint32_t a, uint32_t p) {
    if (p == 2 || !is_prime_u32(p))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime, got " +
                                    std::to_string(p));
    a %= p;
    if (a == 0) return 0;
    return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Q1 = prod p_j^{gamma_j} over prime factors of q, gamma_j maximal with
// p_j^{gamma_j} <= M. Satisfies Q1 | q and Q1 <= M^{omega(q)}.
inline uint32_t compute_Q1(const RingCtx& ctx, double M) {
    if (M < 2) throw std::invalid_argument("compute_Q1: requires M >= 2");
    uint64_t q1 = 1;
    for (const auto& f : ctx.factors()) {
        uint64_t pk = 1;
        for (uint32_t e = 1; e <= f.exponent; ++e) {
            if (static_cast<double>(pk) * f.prime > M) break;
            pk *= f.prime;
        }
        q1 *= pk;
    }
    return static_cast<uint32_t>(q1);
}

}  // namespace diffset
