#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "diffset/regularize.hpp"

using namespace diffset;

namespace {

SubsetZq random_subset_of_size(uint32_t q, uint32_t size, std::mt19937& gen) {
    std::vector<uint32_t> pool(q);
    std::iota(pool.begin(), pool.end(), 0);
    SubsetZq s(q);
    for (uint32_t i = 0; i < size; ++i) {
        std::uniform_int_distribution<uint32_t> pick(i, q - 1);
        std::swap(pool[i], pool[pick(gen)]);
        s.add(pool[i]);
    }
    return s;
}

}  // namespace

TEST_CASE("full set is already regular") {
    for (uint32_t q : {6u, 12u, 30u}) {
        auto res = regularize(SubsetZq::full(q), 0.25, 2.0);
        CHECK(res.chain.empty());
        CHECK(res.q_star == q);
        CHECK(res.a_star == SubsetZq::full(q));
        CHECK(res.a_star_normalized == SubsetZq::full(q));
        CHECK(res.shift == std::vector<uint32_t>{0});
        CHECK(res.chain_bound == 0);
    }
}

TEST_CASE("single fiber mod 3 descends to Z_4") {
    SubsetZq a(12, {0, 3, 6, 9});
    auto res = regularize(a, 0.25, 3.0);
    REQUIRE(res.chain.size() == 1);
    CHECK(res.chain[0].modulus == 3);
    CHECK(res.chain[0].fiber == std::vector<uint32_t>{0});
    CHECK(res.chain[0].prime_power);
    CHECK(res.q_star == 4);
    CHECK(res.a_star == a);
    CHECK(res.a_star_normalized == SubsetZq::full(4));
    CHECK(res.shift == std::vector<uint32_t>{0});
}

TEST_CASE("vacuous condition keeps the set") {
    // With M = 12 only the divisor 12 qualifies, and a dense set keeps all
    // fibers below the threshold.
    SubsetZq a(12, {0, 1, 2, 3, 4, 5, 6, 7});
    auto res = regularize(a, 0.25, 12.0);
    CHECK(res.chain.empty());
    CHECK(res.q_star == 12);
    CHECK(res.a_star == a);
}

TEST_CASE("parameter validation") {
    SubsetZq a(12, {0});
    CHECK_THROWS_AS(regularize(a, 0.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(regularize(a, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(regularize(a, 0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(regularize(SubsetZq(12), 0.5, 2.0), std::invalid_argument);
}

TEST_CASE("descent invariants on random 1-D instances") {
    std::mt19937 gen(101);
    for (uint32_t q : {12u, 24u, 36u, 360u}) {
        for (double density : {0.1, 0.3}) {
            for (int rep = 0; rep < 60; ++rep) {
                const uint32_t size = std::max<uint32_t>(1, static_cast<uint32_t>(density * q));
                SubsetZq a = random_subset_of_size(q, size, gen);
                for (double eps : {0.25, 0.5}) {
                    for (double M : {2.0, 3.0, 5.0}) {
                        auto res = regularize(a, eps, M);

                        // subset relation and fiber collapse
                        REQUIRE(res.a_star.is_subset_of(a));
                        REQUIRE(!res.a_star.empty());
                        const uint32_t qq = q / res.q_star;
                        REQUIRE(res.q_star * qq == q);
                        REQUIRE(res.descent_product() == qq);
                        if (qq > 1)
                            REQUIRE(project(res.a_star, qq).size() == 1);

                        // elements reconstruct from shift + q/q* * normalized
                        REQUIRE(res.a_star.size() == res.a_star_normalized.size());
                        res.a_star_normalized.for_each([&](uint32_t x) {
                            REQUIRE(res.a_star.contains(res.shift[0] + qq * x));
                        });

                        // regularity oracle, exhaustive over the divisors of q*
                        REQUIRE(regularity_holds(res.a_star_normalized, res.q_star, eps, M));

                        // chain bound and per-entry divisor range
                        REQUIRE(res.chain.size() <= res.chain_bound);
                        const double delta0 = a.density();
                        for (const auto& step : res.chain) {
                            REQUIRE(static_cast<double>(step.modulus) >= M);
                            REQUIRE(static_cast<double>(step.modulus) <=
                                    std::pow(delta0, -1.0 / eps) * (1 + 1e-9));
                        }

                        // density increases by at least M^eps per step
                        const double final_density = res.a_star_normalized.density();
                        REQUIRE(final_density >=
                                delta0 * std::pow(M, eps * res.chain.size()) * (1 - 1e-9));
                    }
                }
            }
        }
    }
}

TEST_CASE("2-D regularization") {
    std::mt19937 gen(202);
    for (uint32_t q : {6u, 12u, 30u}) {
        for (int rep = 0; rep < 40; ++rep) {
            Subset2D a(q);
            const uint32_t size = 1 + gen() % (q * q / 4);
            while (a.size() < size) a.add(gen() % q, gen() % q);
            for (double eps : {0.25, 0.5}) {
                auto res = regularize(a, eps, 2.0);
                REQUIRE(!res.a_star.empty());
                REQUIRE(res.a_star.size() == res.a_star_normalized.size());
                REQUIRE(regularity_holds(res.a_star_normalized, res.q_star, eps, 2.0));
                const uint32_t qq = q / res.q_star;
                if (qq > 1) REQUIRE(project(res.a_star, qq).size() == 1);
                res.a_star.for_each([&](uint32_t x, uint32_t y) {
                    REQUIRE(a.contains(x, y));
                    REQUIRE(x % qq == res.shift[0] % qq);
                    REQUIRE(y % qq == res.shift[1] % qq);
                });
                REQUIRE(res.chain.size() <= res.chain_bound);
            }
        }
    }
}

TEST_CASE("sparse single point collapses fully") {
    SubsetZq a(16, {5});
    auto res = regularize(a, 0.5, 2.0);
    CHECK(res.a_star == a);
    CHECK(res.a_star_normalized.size() == 1);
    // every divisor >= 2 of q* would see a full fiber of this singleton,
    // so q* must be small enough that the threshold is met
    CHECK(regularity_holds(res.a_star_normalized, res.q_star, 0.5, 2.0));
}
