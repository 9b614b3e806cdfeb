#include "ubim/pseries.hpp"

#include <algorithm>

namespace ubim {

namespace {

int common_cap(const PSeries& a, const PSeries& b) { return std::min(a.cap, b.cap); }

// series exp of g with g.lead >= 1
PSeries exp_series(const PSeries& g) {
    PSeries r = PSeries::constant(BigReal(1), g.cap);
    PSeries term = PSeries::constant(BigReal(1), g.cap);
    int order = g.cap + 1;
    for (int k = 1; k <= order; ++k) {
        term = term * g * (BigReal(1) / BigReal(k));
        if (term.lead > g.cap || term.is_zero()) break;
        r = r + term;
    }
    return r;
}

// series log(1+g) with g.lead >= 1
PSeries log1p_series(const PSeries& g) {
    PSeries r(g.lead, g.cap);
    PSeries term = PSeries::constant(BigReal(1), g.cap);
    int sign = 1;
    for (int k = 1; k <= g.cap + 1; ++k) {
        term = term * g;
        if (term.lead > g.cap || term.is_zero()) break;
        r = r + term * (BigReal(sign) / BigReal(k));
        sign = -sign;
    }
    return r;
}

} // namespace

PSeries operator+(const PSeries& a, const PSeries& b) {
    int cap = common_cap(a, b);
    int lead = std::min(a.lead, b.lead);
    PSeries r(lead, cap);
    for (int e = lead; e <= cap; ++e)
        r.c[static_cast<std::size_t>(e - lead)] = a.coeff(e) + b.coeff(e);
    return r;
}

PSeries operator-(const PSeries& a) {
    PSeries r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

PSeries operator-(const PSeries& a, const PSeries& b) { return a + (-b); }

PSeries operator*(const PSeries& a, const PSeries& b) {
    int cap = common_cap(a, b);
    int lead = a.lead + b.lead;
    if (lead > cap) return PSeries(cap, cap); // everything truncated away
    PSeries r(lead, cap);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        int ea = a.lead + static_cast<int>(i);
        if (ea + b.lead > cap) break;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            int e = ea + b.lead + static_cast<int>(j);
            if (e > cap) break;
            r.c[static_cast<std::size_t>(e - lead)] += a.c[i] * b.c[j];
        }
    }
    return r;
}

PSeries operator*(const PSeries& a, const BigReal& s) {
    PSeries r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

PSeries inverse(const PSeries& a) {
    PSeries t = a;
    t.tighten();
    if (t.is_zero()) throw std::domain_error("PSeries inverse of zero");
    BigReal a0 = t.c[0];
    // t = a0 t^L (1 + g); g is the relative series, lead >= 1
    PSeries g(1, t.cap - t.lead);
    for (std::size_t i = 1; i < t.c.size(); ++i) {
        int e = static_cast<int>(i);
        if (e > g.cap) break;
        g.c[static_cast<std::size_t>(e - 1)] = t.c[i] / a0;
    }
    PSeries inv_rel = PSeries::constant(BigReal(1), g.cap);
    PSeries term = PSeries::constant(BigReal(1), g.cap);
    for (int k = 1; k <= g.cap + 1; ++k) {
        term = term * (-g);
        if (term.lead > g.cap || term.is_zero()) break;
        inv_rel = inv_rel + term;
    }
    // shift back: result lead = -L, coefficients inv_rel / a0
    PSeries r(-t.lead, inv_rel.cap - t.lead);
    r.cap = std::min(r.cap, a.cap);
    if (r.cap < r.lead) throw std::domain_error("PSeries inverse: cap underflow");
    r.c.assign(static_cast<std::size_t>(r.cap - r.lead + 1), BigReal(0));
    for (int e = r.lead; e <= r.cap; ++e)
        r.c[static_cast<std::size_t>(e - r.lead)] = inv_rel.coeff(e + t.lead) / a0;
    return r;
}

PSeries operator/(const PSeries& a, const PSeries& b) { return a * inverse(b); }

PSeries pow_rational(const PSeries& a, int p, int q) {
    using std::pow;
    PSeries t = a;
    t.tighten();
    if (t.is_zero()) throw std::domain_error("PSeries pow of zero");
    if ((t.lead * p) % q != 0)
        throw std::domain_error("PSeries pow: fractional leading exponent");
    int new_lead = t.lead * p / q;
    BigReal a0 = t.c[0];
    if (a0 <= 0) throw std::domain_error("PSeries pow: non-positive leading coefficient");
    PSeries g(1, t.cap - t.lead);
    for (std::size_t i = 1; i < t.c.size(); ++i) {
        int e = static_cast<int>(i);
        if (e > g.cap) break;
        g.c[static_cast<std::size_t>(e - 1)] = t.c[i] / a0;
    }
    PSeries rel = exp_series(log1p_series(g) * (BigReal(p) / BigReal(q)));
    BigReal scale = BigReal(pow(a0, BigReal(p) / BigReal(q)));
    PSeries r(new_lead, std::min(a.cap, rel.cap + new_lead));
    for (int e = r.lead; e <= r.cap; ++e)
        r.c[static_cast<std::size_t>(e - r.lead)] = rel.coeff(e - new_lead) * scale;
    return r;
}

PSeries integrate_w(const PSeries& a) {
    PSeries r(a.lead + 2, a.cap + 2);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        int e = a.lead + static_cast<int>(i);
        r.c[static_cast<std::size_t>(e + 2 - r.lead)] = a.c[i] * BigReal(2) / BigReal(e + 2);
    }
    return r;
}

BigReal eval_t(const PSeries& a, const BigReal& t) {
    BigReal acc(0);
    for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * t + a.c[i];
    BigReal tp(1);
    if (a.lead >= 0) {
        for (int i = 0; i < a.lead; ++i) tp *= t;
        return acc * tp;
    }
    for (int i = 0; i < -a.lead; ++i) tp *= t;
    return acc / tp;
}

} // namespace ubim
