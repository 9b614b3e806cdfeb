#include "ubim/airy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "ubim/coeff_engine.hpp"

namespace ubim {

namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPiThirds = 2.0 * kPi / 3.0;
const double kSeam = 9.5;

// ---- double-double arithmetic for the Maclaurin branch -------------------
// The seam at |t| = 9.5 costs up to ~e^{(4/3)|t|^{3/2}} of cancellation in
// Ai; ~17 digits, which plain doubles cannot absorb.

struct dd {
    double hi = 0.0, lo = 0.0;
    dd() = default;
    dd(double h) : hi(h) {}
    dd(double h, double l) : hi(h), lo(l) {}
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(const dd& a, const dd& b) { return a + dd(-b.hi, -b.lo); }

inline dd operator*(const dd& a, const dd& b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(const dd& a, double d) {
    double q1 = a.hi / d;
    dd r = a - two_prod(q1, d);
    double q2 = (r.hi + r.lo) / d;
    return quick_two_sum(q1, q2);
}

struct cdd {
    dd re, im;
};

inline cdd operator+(const cdd& a, const cdd& b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator*(const cdd& a, const cdd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator*(const cdd& a, const dd& s) { return {a.re * s, a.im * s}; }
inline cdd operator/(const cdd& a, double d) { return {a.re / d, a.im / d}; }

inline double mag(const cdd& a) { return std::abs(a.re.hi) + std::abs(a.im.hi); }
inline Cxd to_cxd(const cdd& a) { return Cxd(a.re.hi + a.re.lo, a.im.hi + a.im.lo); }

// Ai(0) etc. as dd; split once from 40-digit values.
struct AiryConstants {
    dd ai0, aip0; // Ai(0), Ai'(0)
};

dd split_dd(const BigReal& v) {
    double hi = static_cast<double>(v);
    double lo = static_cast<double>(v - hi);
    return {hi, lo};
}

const AiryConstants& airy_constants() {
    static const AiryConstants c = [] {
        PrecisionScope scope(40);
        BigReal third = BigReal(1) / 3;
        BigReal g13 = boost::math::tgamma(third);
        BigReal g23 = boost::math::tgamma(2 * third);
        BigReal ai0 = pow(BigReal(3), BigReal(-2) / 3) / g23;
        BigReal aip0 = -pow(BigReal(3), -third) / g13;
        return AiryConstants{split_dd(ai0), split_dd(aip0)};
    }();
    return c;
}

// f, g: the standard pair with f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1 solving
// y'' = t y.  Ai = Ai(0) f + Ai'(0) g;  Bi = sqrt(3) (Ai(0) f - Ai'(0) g).
struct SeriesFG {
    cdd f, fp, g, gp;
};

SeriesFG maclaurin_fg(const Cxd& t) {
    cdd t3 = cdd{dd(t.re), dd(t.im)} * cdd{dd(t.re), dd(t.im)} * cdd{dd(t.re), dd(t.im)};
    cdd t2 = cdd{dd(t.re), dd(t.im)} * cdd{dd(t.re), dd(t.im)};

    SeriesFG s;
    cdd tf{dd(1.0), dd(0.0)};              // f terms
    cdd tfp = t2 / 2.0;                    // f' terms, leading t^2/2
    cdd tg{dd(t.re), dd(t.im)};            // g terms
    cdd tgp{dd(1.0), dd(0.0)};             // g' terms
    s.f = tf;
    s.fp = tfp;
    s.g = tg;
    s.gp = tgp;

    for (int k = 0; k < 600; ++k) {
        double k3 = 3.0 * k;
        tf = tf * t3 / ((k3 + 2) * (k3 + 3));
        tg = tg * t3 / ((k3 + 3) * (k3 + 4));
        tgp = tgp * t3 / ((k3 + 1) * (k3 + 3));
        tfp = tfp * t3 / ((k3 + 3) * (k3 + 5));
        s.f = s.f + tf;
        s.fp = s.fp + tfp;
        s.g = s.g + tg;
        s.gp = s.gp + tgp;
        double m = mag(tf) + mag(tfp) + mag(tg) + mag(tgp);
        if (m < 1e-40 * (mag(s.f) + mag(s.g) + 1.0)) break;
    }
    return s;
}

void maclaurin_airy(const Cxd& t, Cxd& ai, Cxd& aip, Cxd& bi, Cxd& bip) {
    const AiryConstants& c = airy_constants();
    SeriesFG s = maclaurin_fg(t);
    cdd a = s.f * c.ai0 + s.g * c.aip0;
    cdd ap = s.fp * c.ai0 + s.gp * c.aip0;
    dd r3{1.7320508075688772, 1.0035084221806903e-16}; // sqrt(3)
    cdd b = (s.f * c.ai0 + s.g * dd(-c.aip0.hi, -c.aip0.lo)) * r3;
    cdd bp = (s.fp * c.ai0 + s.gp * dd(-c.aip0.hi, -c.aip0.lo)) * r3;
    ai = to_cxd(a);
    aip = to_cxd(ap);
    bi = to_cxd(b);
    bip = to_cxd(bp);
}

// a_s, a~_s as doubles, enough for optimal truncation at the seam.
const std::vector<double>& asym_a() {
    static const std::vector<double> v = [] {
        std::vector<Rational> a, at;
        gen_airy_coeffs(40, a, at);
        std::vector<double> out;
        for (const Rational& r : a) out.push_back(to_double(r));
        return out;
    }();
    return v;
}

const std::vector<double>& asym_at() {
    static const std::vector<double> v = [] {
        std::vector<Rational> a, at;
        gen_airy_coeffs(40, a, at);
        std::vector<double> out;
        for (const Rational& r : at) out.push_back(to_double(r));
        return out;
    }();
    return v;
}

// sum_{s>=1} sgn^s c_s / (s xi^s), truncated at the smallest term
Cxd exp_series(const std::vector<double>& c, const Cxd& xi, double sgn, int n_max) {
    Cxd inv = Cxd(1.0) / xi;
    Cxd p = inv;
    Cxd sum(0.0);
    double last = 1e300;
    for (int s = 1; s <= n_max && s <= static_cast<int>(c.size()); ++s) {
        double sg = (sgn < 0 && s % 2 != 0) ? -1.0 : 1.0;
        Cxd term = p * (sg * c[s - 1] / s);
        double m = abs(term);
        if (m > last) break;
        sum += term;
        last = m;
        if (m < 1e-20) break;
        p *= inv;
    }
    return sum;
}

// Ai and Ai' via the exponential-form expansion; valid |arg t| <= 2pi/3.
void asym_ai(const Cxd& t, ScaledValue& ai, ScaledValue& aip) {
    Cxd t14 = pow(t, 0.25);
    Cxd xi = Cxd(2.0 / 3.0) * t14 * t14 * t14 * t14 * t14 * t14; // t^{3/2}
    double spre = 0.5 / std::sqrt(kPi);
    Cxd osc = exp(Cxd(0.0, -xi.im));
    ai.mantissa = spre / t14 * exp(exp_series(asym_a(), xi, -1.0, 40)) * osc;
    ai.log_scale = -xi.re;
    ai.normalize();
    aip.mantissa = Cxd(-spre) * t14 * exp(exp_series(asym_at(), xi, -1.0, 40)) * osc;
    aip.log_scale = -xi.re;
    aip.normalize();
}

ScaledValue rotate_phase(const ScaledValue& v, const Cxd& phase) {
    ScaledValue r{v.mantissa * phase, v.log_scale};
    return r;
}

void ai_scaled(const Cxd& t, ScaledValue& ai, ScaledValue& aip);

void ai_scaled_upper(const Cxd& t, ScaledValue& ai, ScaledValue& aip) {
    if (abs(t) <= kSeam) {
        Cxd a, ap, b, bp;
        maclaurin_airy(t, a, ap, b, bp);
        ai = ScaledValue::from(a);
        aip = ScaledValue::from(ap);
        return;
    }
    if (arg(t) <= kTwoPiThirds) {
        asym_ai(t, ai, aip);
        return;
    }
    // near the negative axis: rotate into the valid sector
    Cxd wm = polar(1.0, -kTwoPiThirds), wp = polar(1.0, kTwoPiThirds);
    ScaledValue a1, a1p, am1, am1p;
    ai_scaled(t * wm, a1, a1p);
    ai_scaled(t * wp, am1, am1p);
    Cxd e3 = polar(1.0, kPi / 3.0);
    ai = rotate_phase(a1, e3) + rotate_phase(am1, conj(e3));
    aip = rotate_phase(a1p, conj(e3)) + rotate_phase(am1p, e3);
}

void ai_scaled(const Cxd& t, ScaledValue& ai, ScaledValue& aip) {
    if (t.im < 0.0) {
        ai_scaled_upper(conj(t), ai, aip);
        ai.mantissa = conj(ai.mantissa);
        aip.mantissa = conj(aip.mantissa);
        return;
    }
    ai_scaled_upper(t, ai, aip);
}

void bi_scaled(const Cxd& t, ScaledValue& bi, ScaledValue& bip) {
    if (abs(t) <= kSeam) {
        Cxd a, ap, b, bp;
        maclaurin_airy(t, a, ap, b, bp);
        bi = ScaledValue::from(b);
        bip = ScaledValue::from(bp);
        return;
    }
    Cxd wm = polar(1.0, -kTwoPiThirds), wp = polar(1.0, kTwoPiThirds);
    ScaledValue a1, a1p, am1, am1p;
    ai_scaled(t * wm, a1, a1p);
    ai_scaled(t * wp, am1, am1p);
    Cxd e6 = polar(1.0, kPi / 6.0);
    bi = rotate_phase(a1, conj(e6)) + rotate_phase(am1, e6);
    // Bi'(t) = e^{-5 pi i/6} Ai'(t w^{-1}) + e^{5 pi i/6} Ai'(t w)
    Cxd e56 = polar(1.0, 5.0 * kPi / 6.0);
    bip = rotate_phase(a1p, conj(e56)) + rotate_phase(am1p, e56);
}

} // namespace

AiryScaled airy_eval_scaled(const Cxd& t) {
    if (abs(t) > 1e5) throw std::domain_error("airy_eval: |t| > 1e5");
    AiryScaled r;
    r.argument = t;
    ai_scaled(t, r.ai, r.ai_prime);
    bi_scaled(t, r.bi, r.bi_prime);
    return r;
}

AiryValue airy_eval(const Cxd& t) {
    AiryScaled s = airy_eval_scaled(t);
    return AiryValue{t, s.ai.value(), s.ai_prime.value(), s.bi.value(),
                     s.bi_prime.value()};
}

ScaledValue airy_rotated(int l, const Cxd& t) {
    if (l < -1 || l > 1) throw std::domain_error("airy_rotated: l must be in {-1,0,1}");
    ScaledValue ai, aip;
    ai_scaled(t * polar(1.0, -kTwoPiThirds * l), ai, aip);
    return ai;
}

ScaledValue airy_rotated_prime(int l, const Cxd& t) {
    if (l < -1 || l > 1) throw std::domain_error("airy_rotated: l must be in {-1,0,1}");
    ScaledValue ai, aip;
    ai_scaled(t * polar(1.0, -kTwoPiThirds * l), ai, aip);
    aip.mantissa = aip.mantissa * polar(1.0, -kTwoPiThirds * l);
    return aip;
}

namespace {

// large-m zero asymptote: a_m ~ -T(3 pi (4m-1)/8), b_m with (4m-3)
double zero_seed(AiryKind kind, int m) {
    double t = 3.0 * kPi * (4.0 * m - (kind == AiryKind::Ai ? 1.0 : 3.0)) / 8.0;
    double u = 1.0 / (t * t);
    double corr = 1.0 + u * (5.0 / 48.0 + u * (-5.0 / 36.0 + u * (77125.0 / 82944.0)));
    return -std::pow(t, 2.0 / 3.0) * corr;
}

} // namespace

double airy_neg_zero(AiryKind kind, int m) {
    if (m < 1) throw std::domain_error("airy_neg_zero: m >= 1 required");
    double x = zero_seed(kind, m);
    for (int it = 0; it < 60; ++it) {
        AiryScaled v = airy_eval_scaled(Cxd(x, 0.0));
        const ScaledValue& f = (kind == AiryKind::Ai) ? v.ai : v.bi;
        const ScaledValue& fp = (kind == AiryKind::Ai) ? v.ai_prime : v.bi_prime;
        double step = (f / fp).value().re;
        x -= step;
        if (std::abs(step) < 1e-15 * std::abs(x)) break;
    }
    return x;
}

namespace {

// Maclaurin f,g and derivatives at mpfr precision; real t.
void hp_fg(const BigReal& t, BigReal& f, BigReal& fp, BigReal& g, BigReal& gp) {
    BigReal t3 = t * t * t;
    BigReal tf(1), tg(t), tgp(1), tfp = t * t / 2;
    f = tf;
    g = tg;
    gp = tgp;
    fp = tfp;
    BigReal tol = pow(BigReal(10), -static_cast<int>(BigReal::default_precision()) - 5);
    for (int k = 0; k < 100000; ++k) {
        double k3 = 3.0 * k;
        tf = tf * t3 / ((k3 + 2) * (k3 + 3));
        tg = tg * t3 / ((k3 + 3) * (k3 + 4));
        tgp = tgp * t3 / ((k3 + 1) * (k3 + 3));
        tfp = tfp * t3 / ((k3 + 3) * (k3 + 5));
        f += tf;
        g += tg;
        gp += tgp;
        fp += tfp;
        if (abs(tf) + abs(tg) < tol && k3 * k3 > abs(t3)) break;
    }
}

void hp_airy(const BigReal& t, bool want_bi, BigReal& v, BigReal& vp) {
    // oscillatory cancellation for t < 0 costs ~ (2/3)|t|^{3/2} nats
    unsigned base = BigReal::default_precision();
    double at = std::abs(static_cast<double>(t));
    unsigned pad = static_cast<unsigned>(0.29 * at * std::sqrt(at)) + 10;
    PrecisionScope scope(base + pad);
    BigReal tw(t);
    tw.precision(base + pad);
    BigReal f, fp, g, gp;
    hp_fg(tw, f, fp, g, gp);
    BigReal third = BigReal(1) / 3;
    BigReal ai0 = pow(BigReal(3), BigReal(-2) / 3) / boost::math::tgamma(2 * third);
    BigReal aip0 = -pow(BigReal(3), -third) / boost::math::tgamma(third);
    if (want_bi) {
        BigReal r3 = sqrt(BigReal(3));
        v = BigReal(r3 * (ai0 * f - aip0 * g));
        vp = BigReal(r3 * (ai0 * fp - aip0 * gp));
    } else {
        v = BigReal(ai0 * f + aip0 * g);
        vp = BigReal(ai0 * fp + aip0 * gp);
    }
    v.precision(base);
    vp.precision(base);
}

} // namespace

void airy_series_hp(const BigReal& t, BigReal& ai, BigReal& ai_prime) {
    hp_airy(t, false, ai, ai_prime);
}

void airy_series_hp_bi(const BigReal& t, BigReal& bi, BigReal& bi_prime) {
    hp_airy(t, true, bi, bi_prime);
}

BigReal airy_neg_zero_hp(AiryKind kind, int m) {
    if (m < 1) throw std::domain_error("airy_neg_zero: m >= 1 required");
    unsigned digits = BigReal::default_precision();
    BigReal x(airy_neg_zero(kind, m));
    BigReal tol = pow(BigReal(10), -static_cast<int>(digits) + 2);
    for (int it = 0; it < 80; ++it) {
        BigReal v, vp;
        hp_airy(x, kind == AiryKind::Bi, v, vp);
        BigReal step = v / vp;
        x -= step;
        if (abs(step) < tol * abs(x)) break;
    }
    return x;
}

ScaledValue ai_expform(int n, double nu, const TurningPointFrame& frame,
                       AiryExpWhich which) {
    if (n < 2 || n > 8) throw std::domain_error("ai_expform: n must be in 2..8");
    Cxd xi = frame.xi, zeta = frame.zeta;
    if (nu * abs(xi) < 2.0) throw std::domain_error("ai_expform: nu*|xi| < 2");

    const CoefficientTable& tab = default_table();
    bool prime = which == AiryExpWhich::Ai0p || which == AiryExpWhich::Ai1p ||
                 which == AiryExpWhich::Aim1p;
    bool upper = which == AiryExpWhich::Ai1 || which == AiryExpWhich::Ai1p;
    bool lower = which == AiryExpWhich::Aim1 || which == AiryExpWhich::Aim1p;

    // each expansion only holds in its own sector of arg zeta
    double az = std::abs(arg(zeta));
    if (lower) {
        if (az < kPi / 3.0 - 1e-12)
            throw std::domain_error("ai_expform: arg zeta outside the Ai_{-1} sector");
    } else if (az > kTwoPiThirds + 1e-12) {
        throw std::domain_error("ai_expform: |arg zeta| > 2pi/3");
    }
    double sgn = upper ? 1.0 : -1.0; // sign of nu*xi in the exponent

    Cxd sum(0.0);
    Cxd nx = Cxd(nu) * xi;
    Cxd p = Cxd(1.0) / nx;
    for (int s = 1; s <= n - 1; ++s) {
        Rational c = prime ? tab.a_s(s, true) : tab.a_s(s, false);
        double sg = (!upper && s % 2 != 0) ? -1.0 : 1.0;
        sum += p * (sg * to_double(c) / s);
        p = p / nx;
    }

    double spre = 0.5 / std::sqrt(kPi);
    Cxd z14 = pow(zeta, 0.25) * std::pow(nu, 1.0 / 6.0);
    Cxd phase(1.0);
    switch (which) {
        case AiryExpWhich::Ai0: phase = Cxd(1.0); break;
        case AiryExpWhich::Ai0p: phase = Cxd(-1.0); break;
        case AiryExpWhich::Ai1: phase = polar(1.0, kPi / 6.0); break;
        case AiryExpWhich::Ai1p: phase = polar(1.0, kPi / 6.0); break;
        case AiryExpWhich::Aim1: phase = polar(1.0, kPi / 3.0); break;
        case AiryExpWhich::Aim1p: phase = -polar(1.0, kPi / 3.0); break;
    }
    Cxd pre = prime ? phase * z14 * spre : phase * spre / z14;

    ScaledValue r;
    r.mantissa = pre * exp(sum + Cxd(0.0, sgn * nu * xi.im));
    r.log_scale = sgn * nu * xi.re;
    r.normalize();
    return r;
}

} // namespace ubim
