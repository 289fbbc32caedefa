#pragma once

// Dense bit-indexed subsets of Z_q and Z_q x Z_q, plus the set operations
// used everywhere else: difference/sum/product sets, dilation, projection,
// fiber counts, gap statistics. All operations return fresh values and never
// mutate their inputs, so values can be shared freely across workers.
//
// Text literal format (fixtures and CLI):
//   1-D   q=12; {0,3,6,9}
//   2-D   q=5; {(0,0),(1,4)}
// A bare "{0,3,6,9}" is also accepted where q is known from context.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffset/bitvec.hpp"
#include "diffset/ring.hpp"

namespace diffset {

inline constexpr uint32_t kMax2DModulus = 2048;

class SubsetZq {
public:
    SubsetZq() : SubsetZq(1) {}
    explicit SubsetZq(uint32_t q) : q_(q), bits_(q) {
        if (q < 1 || q > kMaxModulus) throw std::invalid_argument("SubsetZq: bad modulus");
    }
    SubsetZq(uint32_t q, std::initializer_list<uint32_t> xs) : SubsetZq(q) {
        for (uint32_t x : xs) add(x);
    }

    static SubsetZq full(uint32_t q) {
        SubsetZq s(q);
        s.bits_.fill_all();
        return s;
    }

    uint32_t q() const { return q_; }
    void add(uint32_t x) { bits_.set(x % q_); }
    void remove(uint32_t x) { bits_.reset(x % q_); }
    bool contains(uint32_t x) const { return bits_.test(x % q_); }
    uint32_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    double density() const { return static_cast<double>(size()) / q_; }

    std::vector<uint32_t> elements() const {
        std::vector<uint32_t> out;
        out.reserve(size());
        bits_.for_each_bit([&](uint32_t x) { out.push_back(x); });
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        bits_.for_each_bit(fn);
    }

    bool operator==(const SubsetZq& o) const { return q_ == o.q_ && bits_ == o.bits_; }
    bool is_subset_of(const SubsetZq& o) const { return bits_.is_subset_of(o.bits_); }
    bool is_full() const { return size() == q_; }

    SubsetZq& operator|=(const SubsetZq& o) {
        check_same_modulus(o);
        bits_ |= o.bits_;
        return *this;
    }
    SubsetZq& operator&=(const SubsetZq& o) {
        check_same_modulus(o);
        bits_ &= o.bits_;
        return *this;
    }

    const Bitvec& bits() const { return bits_; }
    Bitvec& mutable_bits() { return bits_; }

    void check_same_modulus(const SubsetZq& o) const {
        if (q_ != o.q_) throw std::invalid_argument("SubsetZq: modulus mismatch");
    }
    void check_nonempty(const char* op) const {
        if (empty()) throw std::invalid_argument(std::string(op) + ": empty input set");
    }

private:
    uint32_t q_;
    Bitvec bits_;
};

class Subset2D {
public:
    Subset2D() : Subset2D(1) {}
    explicit Subset2D(uint32_t q) : q_(q), bits_(q * q) {
        if (q < 1 || q > kMax2DModulus)
            throw std::invalid_argument("Subset2D: modulus out of range [1, 2048]");
    }

    static Subset2D full(uint32_t q) {
        Subset2D s(q);
        s.bits_.fill_all();
        return s;
    }
    // Cartesian product X x Y.
    static Subset2D cartesian(const SubsetZq& x, const SubsetZq& y) {
        x.check_same_modulus(y);
        Subset2D s(x.q());
        x.for_each([&](uint32_t a) { y.for_each([&](uint32_t b) { s.add(a, b); }); });
        return s;
    }

    uint32_t q() const { return q_; }
    void add(uint32_t x, uint32_t y) { bits_.set((x % q_) * q_ + (y % q_)); }
    bool contains(uint32_t x, uint32_t y) const { return bits_.test((x % q_) * q_ + (y % q_)); }
    uint32_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    double density() const { return static_cast<double>(size()) / q_ / q_; }

    std::vector<std::pair<uint32_t, uint32_t>> elements() const {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        out.reserve(size());
        bits_.for_each_bit([&](uint32_t i) { out.emplace_back(i / q_, i % q_); });
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        bits_.for_each_bit([&](uint32_t i) { fn(i / q_, i % q_); });
    }

    bool operator==(const Subset2D& o) const { return q_ == o.q_ && bits_ == o.bits_; }

    void check_same_modulus(const Subset2D& o) const {
        if (q_ != o.q_) throw std::invalid_argument("Subset2D: modulus mismatch");
    }
    void check_nonempty(const char* op) const {
        if (empty()) throw std::invalid_argument(std::string(op) + ": empty input set");
    }

private:
    uint32_t q_;
    Bitvec bits_;
};

// ---- core set operations ----------------------------------------------

// A - A = union over a' in A of (A rotated by -a').
inline SubsetZq difference_set(const SubsetZq& a) {
    a.check_nonempty("difference_set");
    const uint32_t q = a.q();
    SubsetZq out(q);
    a.for_each([&](uint32_t ap) { out.mutable_bits().or_rotated(a.bits(), (q - ap) % q); });
    return out;
}

inline SubsetZq sumset(const SubsetZq& a, const SubsetZq& b) {
    a.check_same_modulus(b);
    a.check_nonempty("sumset");
    b.check_nonempty("sumset");
    const SubsetZq& small = a.size() <= b.size() ? a : b;
    const SubsetZq& large = a.size() <= b.size() ? b : a;
    SubsetZq out(a.q());
    small.for_each([&](uint32_t s) { out.mutable_bits().or_rotated(large.bits(), s); });
    return out;
}

inline SubsetZq higher_sumset(uint32_t n, const SubsetZq& a) {
    if (n == 0) throw std::invalid_argument("higher_sumset: n must be positive");
    SubsetZq out = a;
    for (uint32_t i = 1; i < n; ++i) out = sumset(out, a);
    return out;
}

inline SubsetZq negate_set(const SubsetZq& a) {
    SubsetZq out(a.q());
    a.for_each([&](uint32_t x) { out.add(x == 0 ? 0 : a.q() - x); });
    return out;
}

inline SubsetZq dilate(uint32_t lambda, const SubsetZq& a) {
    const uint32_t q = a.q();
    SubsetZq out(q);
    const uint64_t lam = lambda % q;
    a.for_each([&](uint32_t x) { out.add(static_cast<uint32_t>(lam * x % q)); });
    return out;
}

inline SubsetZq product_set(const SubsetZq& a, const SubsetZq& b) {
    a.check_same_modulus(b);
    const SubsetZq& small = a.size() <= b.size() ? a : b;
    const SubsetZq& large = a.size() <= b.size() ? b : a;
    SubsetZq out(a.q());
    small.for_each([&](uint32_t s) { out |= dilate(s, large); });
    return out;
}

inline SubsetZq project(const SubsetZq& a, uint32_t q_star) {
    if (q_star == 0 || a.q() % q_star != 0)
        throw std::invalid_argument("project: q* must divide q");
    SubsetZq out(q_star);
    a.for_each([&](uint32_t x) { out.add(x % q_star); });
    return out;
}

inline Subset2D project(const Subset2D& a, uint32_t q_star) {
    if (q_star == 0 || a.q() % q_star != 0)
        throw std::invalid_argument("project: q* must divide q");
    Subset2D out(q_star);
    a.for_each([&](uint32_t x, uint32_t y) { out.add(x % q_star, y % q_star); });
    return out;
}

// eta_{q2}(xi) = #{a in A : a = xi mod q2}.
inline std::vector<uint32_t> fiber_counts(const SubsetZq& a, uint32_t q2) {
    if (q2 == 0 || a.q() % q2 != 0)
        throw std::invalid_argument("fiber_counts: q2 must divide q");
    std::vector<uint32_t> eta(q2, 0);
    a.for_each([&](uint32_t x) { ++eta[x % q2]; });
    return eta;
}

// 2-D fibers indexed by q2*xi_x + xi_y.
inline std::vector<uint32_t> fiber_counts(const Subset2D& a, uint32_t q2) {
    if (q2 == 0 || a.q() % q2 != 0)
        throw std::invalid_argument("fiber_counts: q2 must divide q");
    std::vector<uint32_t> eta(static_cast<size_t>(q2) * q2, 0);
    a.for_each([&](uint32_t x, uint32_t y) { ++eta[(x % q2) * q2 + (y % q2)]; });
    return eta;
}

// d * Z_q as a set (d | q gives the subgroup of q/d multiples; d = q gives {0}).
inline SubsetZq dilated_full_group(uint32_t d, uint32_t q) {
    SubsetZq out(q);
    const uint64_t dd = d % q;
    if (dd == 0) {
        out.add(0);
        return out;
    }
    for (uint64_t x = 0; x < q; ++x) out.add(static_cast<uint32_t>(dd * x % q));
    return out;
}

// d * Z_q^* as a set.
inline SubsetZq dilated_unit_group(uint32_t d, uint32_t q) {
    SubsetZq out(q);
    const uint64_t dd = d % q;
    for (uint64_t u = 0; u < q; ++u)
        if (std::gcd(u, static_cast<uint64_t>(q)) == 1) out.add(static_cast<uint32_t>(dd * u % q));
    return out;
}

// true iff d * Z_q (or d * Z_q^* in the unit variant) is contained in S.
inline bool dilate_subgroup_subset_test(uint32_t d, const SubsetZq& s, bool units_only = false) {
    if (d == 0 || s.q() % d != 0)
        throw std::invalid_argument("dilate_subgroup_subset_test: d must divide q");
    const SubsetZq probe =
        units_only ? dilated_unit_group(d, s.q()) : dilated_full_group(d, s.q());
    return probe.is_subset_of(s);
}

// Maximum cyclic gap between consecutive elements. Singleton -> q.
inline uint32_t max_gap(const SubsetZq& s) {
    s.check_nonempty("max_gap");
    const auto xs = s.elements();  // sorted ascending
    if (xs.size() == 1) return s.q();
    uint32_t best = s.q() - xs.back() + xs.front();
    for (size_t i = 1; i < xs.size(); ++i) best = std::max(best, xs[i] - xs[i - 1]);
    return best;
}

// ---- text literals ------------------------------------------------------

inline std::string to_literal(const SubsetZq& a, bool with_modulus = true) {
    std::ostringstream os;
    if (with_modulus) os << "q=" << a.q() << "; ";
    os << "{";
    bool first = true;
    a.for_each([&](uint32_t x) {
        if (!first) os << ",";
        os << x;
        first = false;
    });
    os << "}";
    return os.str();
}

inline std::string to_literal(const Subset2D& a, bool with_modulus = true) {
    std::ostringstream os;
    if (with_modulus) os << "q=" << a.q() << "; ";
    os << "{";
    bool first = true;
    a.for_each([&](uint32_t x, uint32_t y) {
        if (!first) os << ",";
        os << "(" << x << "," << y << ")";
        first = false;
    });
    os << "}";
    return os.str();
}

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline uint32_t parse_uint(const std::string& s, size_t& i) {
    skip_ws(s, i);
    if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("set literal: expected integer at offset " + std::to_string(i) +
                                    " in \"" + s + "\"");
    uint64_t v = 0;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 0xffffffffull) throw std::invalid_argument("set literal: integer overflow");
        ++i;
    }
    return static_cast<uint32_t>(v);
}

inline void expect(const std::string& s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw std::invalid_argument(std::string("set literal: expected '") + c + "' in \"" + s +
                                    "\"");
    ++i;
}

// Parses optional "q=<int>;" prefix; returns 0 if absent.
inline uint32_t parse_modulus_prefix(const std::string& s, size_t& i) {
    skip_ws(s, i);
    if (i < s.size() && s[i] == 'q') {
        ++i;
        expect(s, i, '=');
        const uint32_t q = parse_uint(s, i);
        expect(s, i, ';');
        return q;
    }
    return 0;
}

}  // namespace detail

// Accepts "q=<int>; {e1,e2,...}" or "{e1,e2,...}" (with q_hint supplied).
inline SubsetZq parse_subset(const std::string& text, uint32_t q_hint = 0) {
    size_t i = 0;
    uint32_t q = detail::parse_modulus_prefix(text, i);
    if (q == 0) q = q_hint;
    if (q == 0) throw std::invalid_argument("set literal: modulus missing: \"" + text + "\"");
    SubsetZq out(q);
    detail::expect(text, i, '{');
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == '}') {
        ++i;
        return out;
    }
    while (true) {
        const uint32_t x = detail::parse_uint(text, i);
        if (x >= q) throw std::invalid_argument("set literal: element out of range: \"" + text + "\"");
        out.add(x);
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    detail::expect(text, i, '}');
    return out;
}

// Accepts "q=<int>; {(x1,y1),...}" or "{(x1,y1),...}" with q_hint.
inline Subset2D parse_subset2d(const std::string& text, uint32_t q_hint = 0) {
    size_t i = 0;
    uint32_t q = detail::parse_modulus_prefix(text, i);
    if (q == 0) q = q_hint;
    if (q == 0) throw std::invalid_argument("set literal: modulus missing: \"" + text + "\"");
    Subset2D out(q);
    detail::expect(text, i, '{');
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == '}') {
        ++i;
        return out;
    }
    while (true) {
        detail::expect(text, i, '(');
        const uint32_t x = detail::parse_uint(text, i);
        detail::expect(text, i, ',');
        const uint32_t y = detail::parse_uint(text, i);
        detail::expect(text, i, ')');
        if (x >= q || y >= q)
            throw std::invalid_argument("set literal: element out of range: \"" + text + "\"");
        out.add(x, y);
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    detail::expect(text, i, '}');
    return out;
}

}  // namespace diffset
