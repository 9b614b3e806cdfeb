#ifndef UBIM_JET_HPP
#define UBIM_JET_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ubim/precision.hpp"

namespace ubim {

// Truncated Taylor expansion about a fixed point: c[k] holds the k-th Taylor
// coefficient f^{(k)}/k!.  Arithmetic propagates derivatives automatically.
template <class T, std::size_t N>
struct Jet {
    std::array<T, N> c;

    Jet() { c.fill(T(0)); }
    explicit Jet(const T& value) : Jet() { c[0] = value; }
    explicit Jet(int value) : Jet() { c[0] = T(value); }

    static Jet variable(const T& value) {
        Jet j(value);
        j.c[1] = T(1);
        return j;
    }
    static Jet from_bigreal(const BigReal& v) { return Jet(T(v)); }

    Jet operator-() const {
        Jet r;
        for (std::size_t k = 0; k < N; ++k) r.c[k] = -c[k];
        return r;
    }
    Jet operator+(const Jet& o) const {
        Jet r;
        for (std::size_t k = 0; k < N; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (std::size_t k = 0; k < N; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t j = 0; j <= k; ++j) r.c[k] += c[j] * o.c[k - j];
        return r;
    }
    Jet operator/(const Jet& o) const {
        Jet r;
        r.c[0] = c[0] / o.c[0];
        for (std::size_t k = 1; k < N; ++k) {
            T acc = c[k];
            for (std::size_t j = 1; j <= k; ++j) acc = acc - o.c[j] * r.c[k - j];
            r.c[k] = acc / o.c[0];
        }
        return r;
    }
    Jet& operator+=(const Jet& o) { return *this = *this + o; }

    // square root with a caller-chosen branch for the leading coefficient
    static Jet sqrt_with(const Jet& a, const T& root0) {
        Jet r;
        r.c[0] = root0;
        for (std::size_t k = 1; k < N; ++k) {
            T acc = a.c[k];
            for (std::size_t j = 1; j < k; ++j) acc = acc - r.c[j] * r.c[k - j];
            r.c[k] = acc / (T(2) * root0);
        }
        return r;
    }
};

// Truncated Laurent series in an auxiliary small parameter, exponents in
// [lo, hi]; products discard anything falling outside the window.
template <class C>
struct LSeries {
    int lo = 0;
    int hi = 0;
    std::vector<C> c;

    LSeries() = default;
    LSeries(int lo_, int hi_) : lo(lo_), hi(hi_) {
        if (hi < lo) throw std::invalid_argument("LSeries: empty exponent window");
        c.assign(static_cast<std::size_t>(hi - lo + 1), C());
    }

    C& at(int e) { return c[static_cast<std::size_t>(e - lo)]; }
    const C& coeff(int e) const {
        if (e < lo || e > hi) {
            static const C zero{};
            return zero;
        }
        return c[static_cast<std::size_t>(e - lo)];
    }

    LSeries operator+(const LSeries& o) const {
        LSeries r(lo < o.lo ? lo : o.lo, hi > o.hi ? hi : o.hi);
        for (int e = r.lo; e <= r.hi; ++e) r.at(e) = coeff(e) + o.coeff(e);
        return r;
    }
    LSeries operator-(const LSeries& o) const {
        LSeries r(lo < o.lo ? lo : o.lo, hi > o.hi ? hi : o.hi);
        for (int e = r.lo; e <= r.hi; ++e) r.at(e) = coeff(e) - o.coeff(e);
        return r;
    }
    // window of the product is the intersection of what both operands can
    // support, capped by the operands' own windows
    LSeries mul(const LSeries& o, int cap_hi) const {
        LSeries r(lo + o.lo, cap_hi);
        for (int e1 = lo; e1 <= hi; ++e1)
            for (int e2 = o.lo; e2 <= o.hi; ++e2) {
                int e = e1 + e2;
                if (e > cap_hi) continue;
                r.at(e) += c[static_cast<std::size_t>(e1 - lo)] *
                           o.c[static_cast<std::size_t>(e2 - o.lo)];
            }
        return r;
    }
    LSeries scale(const C& s) const {
        LSeries r = *this;
        for (auto& x : r.c) x = x * s;
        return r;
    }
};

} // namespace ubim

#endif
