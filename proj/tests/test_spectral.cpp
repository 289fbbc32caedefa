#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "diffset/spectral.hpp"

using namespace diffset;

TEST_CASE("fourier transform of delta and full set") {
    // delta at 0 -> all ones
    std::vector<double> delta(8, 0.0);
    delta[0] = 1.0;
    auto fh = fourier_transform(delta, 8);
    for (const auto& v : fh.values) CHECK(std::abs(v - 1.0) < kIdentityTol);

    // full indicator -> q at frequency 0, zero elsewhere
    auto full = fourier_transform(std::vector<double>(8, 1.0), 8);
    CHECK(std::abs(full.values[0] - 8.0) < kIdentityTol);
    for (uint32_t r = 1; r < 8; ++r) CHECK(std::abs(full.values[r]) < kIdentityTol);

    CHECK_THROWS_AS(fourier_transform(std::vector<double>(7, 0.0), 8), std::invalid_argument);
}

TEST_CASE("fourier transform of {0,2,4} mod 6") {
    auto f = indicator_vector(SubsetZq(6, {0, 2, 4}));
    auto fh = fourier_transform(f, 6);
    for (uint32_t r = 0; r < 6; ++r) {
        const double expected = (r == 0 || r == 3) ? 3.0 : 0.0;
        CHECK(std::abs(fh.values[r] - expected) < kIdentityTol);
    }
}

TEST_CASE("fhat(0) is the mass") {
    std::mt19937 gen(21);
    for (uint32_t q : {5u, 12u, 30u}) {
        std::vector<double> f(q);
        double mass = 0.0;
        for (auto& x : f) {
            x = (gen() % 5) * 0.5;
            mass += x;
        }
        auto fh = fourier_transform(f, q);
        REQUIRE(std::abs(fh.values[0] - mass) < kIdentityTol);
    }
}

TEST_CASE("parseval identity on random indicators") {
    std::mt19937 gen(33);
    for (uint32_t q : {12u, 30u, 49u, 64u}) {
        RootTable roots(q);
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<double> f(q, 0.0);
            for (uint32_t x = 0; x < q; ++x) f[x] = (gen() & 1) ? 1.0 : 0.0;
            auto fh = fourier_transform(f, roots);
            REQUIRE(parseval_relative_error(f, fh) < kIdentityTol);
        }
    }
}

TEST_CASE("kloosterman reference values") {
    RingCtx c5(5);
    const double expected = 2.0 + 2.0 * std::cos(4.0 * std::numbers::pi / 5.0);
    auto k = kloosterman(c5, 1, 1);
    CHECK(std::abs(k.real() - expected) < kIdentityTol);
    CHECK(std::abs(k.real() - 0.3819660112501051) < 1e-12);
    CHECK(std::abs(k.imag()) < kIdentityTol);

    // Ramanujan sum: K_6(1,0) = mu(6) = 1
    auto k6 = kloosterman(RingCtx(6), 1, 0);
    CHECK(std::abs(k6.real() - 1.0) < kIdentityTol);

    // K_q(0,0) = phi(q)
    for (uint32_t q : {4u, 9u, 10u, 36u}) {
        RingCtx c(q);
        auto k0 = kloosterman(c, 0, 0);
        CHECK(std::abs(k0.real() - c.phi()) < kIdentityTol);
    }
}

TEST_CASE("kloosterman realness for all pairs, moderate moduli") {
    for (uint32_t q : {2u, 3u, 8u, 12u, 29u, 45u, 60u}) {
        RootTable roots(q);
        auto inv = unit_inverse_table(q);
        for (uint32_t lam = 0; lam < q; ++lam)
            for (uint32_t r = 0; r < q; ++r)
                REQUIRE(std::abs(kloosterman(roots, inv, lam, r).imag()) < kIdentityTol);
    }
    // random spot checks on larger q
    std::mt19937 gen(55);
    for (uint32_t q : {128u, 255u, 512u}) {
        RootTable roots(q);
        auto inv = unit_inverse_table(q);
        for (int rep = 0; rep < 200; ++rep)
            REQUIRE(std::abs(kloosterman(roots, inv, gen() % q, gen() % q).imag()) <
                    kIdentityTol);
    }
}

TEST_CASE("kloosterman symmetry K(lambda,r) = K(r,lambda) on units, prime q") {
    for (uint32_t p = 2; p <= 100; ++p) {
        if (!is_prime_u32(p)) continue;
        RootTable roots(p);
        auto inv = unit_inverse_table(p);
        for (uint32_t lam = 1; lam < p; ++lam)
            for (uint32_t r = lam; r < p; ++r)
                REQUIRE(std::abs(kloosterman(roots, inv, lam, r).real() -
                                 kloosterman(roots, inv, r, lam).real()) < kIdentityTol);
    }
}

TEST_CASE("ramanujan identity on squarefree moduli up to 200") {
    for (uint32_t q = 2; q <= 200; ++q) {
        RingCtx c(q);
        if (!c.is_squarefree()) continue;
        RootTable roots(q);
        auto inv = unit_inverse_table(q);
        for (uint32_t lam = 1; lam < q; ++lam) {
            if (!c.is_unit(lam)) continue;
            REQUIRE(std::abs(kloosterman(roots, inv, lam, 0).real() - c.mobius()) <
                    kIdentityTol);
        }
    }
}

TEST_CASE("weil bound report") {
    auto r5 = weil_bound_report(RingCtx(5));
    CHECK(r5.outcome == Outcome::passed);
    CHECK(r5.lhs < 2.0 * std::sqrt(5.0) + kInequalityTol);  // prime case: true Weil constant

    CHECK(weil_bound_report(RingCtx(7)).outcome == Outcome::passed);
    auto r15 = weil_bound_report(RingCtx(15));
    CHECK(r15.outcome == Outcome::passed);
    CHECK(r15.rhs == Catch::Approx(2.0 * 4 * std::sqrt(15.0)));
}
