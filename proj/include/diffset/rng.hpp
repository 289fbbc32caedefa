#pragma once

// Pinned, splittable randomness for reproducible sweeps. Every instance of a
// sweep derives its own generator from (master_seed, instance_index), so
// results are independent of worker count and scheduling. splitmix64 is used
// both as the mixer and as the generator; rejection sampling keeps `below`
// unbiased. No std::random distributions: their output is
// implementation-defined and would not pin byte-identical streams.

#include <cstdint>
#include <numeric>
#include <vector>

#include "diffset/subset.hpp"

namespace diffset {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(splitmix64(seed ^ 0x5851f42d4c957f2dull)) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), unbiased
    uint32_t below(uint32_t n) {
        if (n == 0) return 0;
        const uint64_t span = ~uint64_t{0} - (~uint64_t{0} % n + 1) % n;
        for (;;) {
            const uint64_t v = next_u64();
            if (v <= span || span == ~uint64_t{0}) return static_cast<uint32_t>(v % n);
        }
    }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

private:
    uint64_t state_;
};

// Per-instance generator: hash of (master seed, instance index).
inline Rng instance_rng(uint64_t master_seed, uint64_t index) {
    return Rng(splitmix64(master_seed) ^ splitmix64(index * 0xd1342543de82ef95ull + 1));
}

// Exactly `size` distinct elements via partial Fisher-Yates.
inline SubsetZq sample_subset(Rng& rng, uint32_t q, uint32_t size) {
    if (size > q) size = q;
    std::vector<uint32_t> pool(q);
    std::iota(pool.begin(), pool.end(), 0);
    SubsetZq out(q);
    for (uint32_t i = 0; i < size; ++i) {
        const uint32_t j = i + rng.below(q - i);
        std::swap(pool[i], pool[j]);
        out.add(pool[i]);
    }
    return out;
}

inline Subset2D sample_subset2d(Rng& rng, uint32_t q, uint32_t size) {
    const uint32_t cells = q * q;
    if (size > cells) size = cells;
    std::vector<uint32_t> pool(cells);
    std::iota(pool.begin(), pool.end(), 0);
    Subset2D out(q);
    for (uint32_t i = 0; i < size; ++i) {
        const uint32_t j = i + rng.below(cells - i);
        std::swap(pool[i], pool[j]);
        out.add(pool[i] / q, pool[i] % q);
    }
    return out;
}

}  // namespace diffset
