#pragma once

// Fixed-length bit vector with the cyclic-rotate-and-OR primitive that all
// sumset/difference-set kernels are built on. Word-parallel: one rotation is
// O(n/64) regardless of how many bits are set.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace diffset {

class Bitvec {
public:
    Bitvec() = default;
    explicit Bitvec(uint32_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    uint32_t size_bits() const { return n_; }

    void set(uint32_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }
    void fill_all() {
        std::fill(w_.begin(), w_.end(), ~uint64_t{0});
        trim();
    }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t x : w_) c += static_cast<uint32_t>(std::popcount(x));
        return c;
    }
    bool none() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    Bitvec& operator|=(const Bitvec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitvec& operator&=(const Bitvec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitvec& and_not(const Bitvec& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    bool operator==(const Bitvec& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool is_subset_of(const Bitvec& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitvec& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // this |= rotate(src, s): bit i of src lands on bit (i + s) mod n.
    void or_rotated(const Bitvec& src, uint32_t s) {
        s %= n_;
        if (s == 0) {
            *this |= src;
            return;
        }
        static thread_local std::vector<uint64_t> scratch;
        scratch.assign(w_.size(), 0);
        shifted_or_into(scratch, src.w_, s, n_);            // bits [0, n-s) -> [s, n)
        shifted_or_into_down(scratch, src.w_, n_ - s, n_);  // bits [n-s, n) -> [0, s)
        trim_words(scratch, n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= scratch[i];
    }

    // Visit set bits in increasing order.
    template <class Fn>
    void for_each_bit(Fn&& fn) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                const uint32_t b = static_cast<uint32_t>(std::countr_zero(x));
                fn(static_cast<uint32_t>(wi * 64 + b));
                x &= x - 1;
            }
        }
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    void trim() {
        if (n_ % 64) w_.back() &= (~uint64_t{0}) >> (64 - n_ % 64);
    }
    static void trim_words(std::vector<uint64_t>& w, uint32_t n) {
        if (n % 64) w.back() &= (~uint64_t{0}) >> (64 - n % 64);
    }
    // out |= (src << k), bit i -> i + k, bits past n dropped.
    static void shifted_or_into(std::vector<uint64_t>& out, const std::vector<uint64_t>& src,
                                uint32_t k, uint32_t /*n*/) {
        const uint32_t ws = k >> 6, bs = k & 63;
        for (size_t i = out.size(); i-- > ws;) {
            uint64_t v = src[i - ws] << bs;
            if (bs && i > ws) v |= src[i - ws - 1] >> (64 - bs);
            out[i] |= v;
        }
    }
    // out |= (src >> k), bit i -> i - k.
    static void shifted_or_into_down(std::vector<uint64_t>& out, const std::vector<uint64_t>& src,
                                     uint32_t k, uint32_t /*n*/) {
        const uint32_t ws = k >> 6, bs = k & 63;
        const size_t nw = src.size();
        for (size_t i = 0; i + ws < nw; ++i) {
            uint64_t v = src[i + ws] >> bs;
            if (bs && i + ws + 1 < nw) v |= src[i + ws + 1] << (64 - bs);
            out[i] |= v;
        }
    }

    uint32_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace diffset
