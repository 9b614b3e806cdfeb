#ifndef UBIM_PSERIES_HPP
#define UBIM_PSERIES_HPP

#include <stdexcept>
#include <vector>

#include "ubim/precision.hpp"

namespace ubim {

// Truncated Laurent-style power series sum_k c[k] * t^{lead+k} with real
// extended-precision coefficients.  `cap` is the largest exponent carried;
// every operation re-truncates to the smaller cap of its operands.  Used at
// startup to expand the turning-point quantities in t = (z-1)^{1/2}.
struct PSeries {
    int lead = 0;
    int cap = 0;
    std::vector<BigReal> c;

    PSeries() = default;
    PSeries(int lead_, int cap_) : lead(lead_), cap(cap_) {
        if (cap < lead) throw std::invalid_argument("PSeries: cap below lead");
        c.assign(static_cast<std::size_t>(cap - lead + 1), BigReal(0));
    }

    static PSeries constant(const BigReal& v, int cap_) {
        PSeries s(0, cap_);
        s.c[0] = v;
        return s;
    }

    static PSeries monomial(const BigReal& v, int power, int cap_) {
        PSeries s(power, cap_);
        s.c[0] = v;
        return s;
    }

    BigReal coeff(int exponent) const {
        if (exponent < lead || exponent > cap) return BigReal(0);
        return c[static_cast<std::size_t>(exponent - lead)];
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }

    // Drops leading zero coefficients (raises `lead`); needed before inverse.
    void tighten() {
        std::size_t k = 0;
        while (k + 1 < c.size() && c[k] == 0) ++k;
        if (k > 0) {
            c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
            lead += static_cast<int>(k);
        }
    }
};

PSeries operator+(const PSeries& a, const PSeries& b);
PSeries operator-(const PSeries& a, const PSeries& b);
PSeries operator*(const PSeries& a, const PSeries& b);
PSeries operator*(const PSeries& a, const BigReal& s);
PSeries operator-(const PSeries& a);
PSeries inverse(const PSeries& a);
PSeries operator/(const PSeries& a, const PSeries& b);
// principal (t^lead coefficient > 0) power a^{p/q}; lead*p must divide q
PSeries pow_rational(const PSeries& a, int p, int q);
// antiderivative in w = t^2 of a series in t (odd exponents map t^k -> 2 t^{k+2}/(k+2))
PSeries integrate_w(const PSeries& a);
BigReal eval_t(const PSeries& a, const BigReal& t);

} // namespace ubim

#endif
