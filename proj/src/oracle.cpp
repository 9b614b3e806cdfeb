#include "ubim/oracle.hpp"

#include <cmath>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "ubim/rational_poly.hpp"

namespace ubim {

namespace {

BigReal big_pi() { return boost::math::constants::pi<BigReal>(); }

BigCx cx_exp(const BigCx& a) {
    BigReal m = exp(a.re);
    return BigCx(BigReal(m * cos(a.im)), BigReal(m * sin(a.im)));
}

BigCx cx_log(const BigCx& a) {
    return BigCx(BigReal(log(abs(a))), BigReal(atan2(a.im, a.re)));
}

BigCx cx_sin(const BigCx& a) {
    return BigCx(BigReal(sin(a.re) * cosh(a.im)), BigReal(cos(a.re) * sinh(a.im)));
}

// Stirling coefficients B_{2n}/(2n(2n-1)), exact
const std::vector<Rational>& stirling_coeffs() {
    static const std::vector<Rational> c = [] {
        const int n_max = 320; // B_0..B_320, covers ~480 working digits
        std::vector<Rational> B(n_max + 1);
        B[0] = 1;
        for (int m = 1; m <= n_max; ++m) {
            // B_m = -1/(m+1) sum_{j<m} C(m+1,j) B_j
            Rational acc = 0;
            Rational cmj = 1; // C(m+1, 0)
            for (int j = 0; j < m; ++j) {
                acc += cmj * B[j];
                cmj = cmj * (m + 1 - j) / (j + 1);
            }
            B[m] = -acc / (m + 1);
        }
        std::vector<Rational> out;
        for (int n = 1; 2 * n <= n_max; ++n)
            out.push_back(B[2 * n] / (2 * n * (2 * n - 1)));
        return out;
    }();
    return c;
}

// log Gamma by Stirling after shifting Re w up; requires Re w >= 1
BigCx log_gamma_shifted(BigCx w, unsigned prec) {
    BigReal pi = big_pi();
    // with the coefficient table capped at 160 terms, the shifted argument
    // must grow as 10^{prec/320} for the truncated tail to stay below target
    double need = std::max(0.7 * prec, 18.8 * std::pow(10.0, prec / 320.0)) + 6.0;
    int shift = 0;
    double rw = static_cast<double>(w.re);
    if (rw < need) shift = static_cast<int>(need - rw) + 1;

    BigCx log_corr(BigReal(0), BigReal(0));
    BigCx ws = w;
    for (int j = 0; j < shift; ++j) {
        log_corr += cx_log(ws);
        ws += BigCx(BigReal(1), BigReal(0));
    }

    BigCx lg = (ws - BigCx(BigReal(1) / 2, BigReal(0))) * cx_log(ws) - ws +
               BigCx(BigReal(log(2 * pi) / 2), BigReal(0));
    const std::vector<Rational>& c = stirling_coeffs();
    BigCx inv = BigCx(BigReal(1), BigReal(0)) / ws;
    BigCx inv2 = inv * inv;
    BigCx p = inv;
    BigReal tol = pow(BigReal(10), -static_cast<int>(prec) - 5);
    BigReal last(1e300);
    for (std::size_t n = 0; n < c.size(); ++n) {
        BigCx term = p * to_bigreal(c[n]);
        BigReal m = abs(term);
        if (m > last) break;
        lg += term;
        last = m;
        if (m < tol) break;
        p = p * inv2;
    }
    return lg - log_corr;
}

BigCx gamma_at(const BigCx& w, unsigned prec) {
    PrecisionScope scope(prec);
    BigCx ww(BigReal(w.re), BigReal(w.im));
    ww.re.precision(prec);
    ww.im.precision(prec);
    if (ww.im == 0 && ww.re <= 0 && floor(ww.re) == ww.re)
        throw oracle_error("gamma_complex: pole at non-positive integer");
    if (ww.re < BigReal(1) / 2) {
        // reflection: Gamma(w) = pi / (sin(pi w) Gamma(1 - w))
        BigReal pi = big_pi();
        BigCx one(BigReal(1), BigReal(0));
        BigCx s = cx_sin(BigCx(BigReal(pi * ww.re), BigReal(pi * ww.im)));
        BigCx g = cx_exp(log_gamma_shifted(one - ww, prec));
        return BigCx(pi, BigReal(0)) / (s * g);
    }
    return cx_exp(log_gamma_shifted(ww, prec));
}

void check_ctx(const PrecisionContext& ctx) {
    if (ctx.digits < 30) throw oracle_error("oracle: ctx.digits must be >= 30");
}

BigReal round_to(const BigReal& v, int digits) {
    BigReal r(v);
    r.precision(digits);
    return r;
}

// ascending series for Bessel order mu = offset + sign*i*nu at complex argument z
BigCx bessel_series(double nu, const BigCx& z, int sign, bool alternating,
                    const PrecisionContext& ctx, int offset = 0) {
    check_ctx(ctx);
    double az = static_cast<double>(abs(z));
    if (az > oracle_t_max(ctx))
        throw oracle_error("oracle: argument exceeds the precision budget");
    unsigned prec = static_cast<unsigned>(ctx.digits + 0.45 * az + 20);
    PrecisionScope scope(prec);

    BigCx half = BigCx(BigReal(z.re), BigReal(z.im));
    half.re.precision(prec);
    half.im.precision(prec);
    half = half / BigReal(2);
    BigReal nuw(nu);
    nuw.precision(prec);
    BigCx mu(BigReal(offset), BigReal(sign) * nuw);

    BigCx g = gamma_at(BigCx(BigReal(1), BigReal(0)) + mu, prec + 10);
    BigCx pref = cx_exp(mu * cx_log(half)); // (z/2)^{offset + sign i nu}

    BigCx h2 = half * half;
    BigCx term = BigCx(BigReal(1), BigReal(0)) / g;
    BigCx sum = term;
    BigReal max_mag = abs(term);
    BigReal tol = pow(BigReal(10), -static_cast<int>(prec) + 3);
    for (int k = 1; k < 1000000; ++k) {
        term = term * h2 / (BigReal(k) * (BigCx(BigReal(k), BigReal(0)) + mu));
        if (alternating) term = -term;
        sum += term;
        BigReal m = abs(term);
        if (m > max_mag) max_mag = m;
        if (m < tol * max_mag && 2.0 * k > az) break;
    }
    BigCx r = pref * sum;
    r.re = round_to(r.re, ctx.digits);
    r.im = round_to(r.im, ctx.digits);
    return r;
}

// tanh-sinh quadrature on (a, b), smooth integrand
template <class F>
BigReal tanh_sinh(F f, const BigReal& a, const BigReal& b, unsigned prec,
                  int tol_digits) {
    BigReal q = big_pi() / 2;
    BigReal c = (a + b) / 2, d = (b - a) / 2;
    double umax = std::log(2.6 * prec * 2.302585 / 3.141592653589793) + 0.7;
    BigReal tol = pow(BigReal(10), -tol_digits);

    // near a zero of the integral the result can sit far below the integrand
    // scale; convergence is judged against both
    BigReal peak(0);
    auto eval = [&](const BigReal& u) -> BigReal {
        BigReal qs = q * sinh(u);
        BigReal ch = cosh(qs);
        BigReal x = c + d * tanh(qs);
        BigReal w = d * q * cosh(u) / (ch * ch);
        BigReal v = f(x) * w;
        if (abs(v) > peak) peak = abs(v);
        return v;
    };

    double h = 1.0;
    BigReal sum = eval(BigReal(0));
    for (double u = h; u <= umax; u += h) {
        sum += eval(BigReal(u)) + eval(BigReal(-u));
    }
    BigReal prev = sum * h;
    for (int level = 1; level <= 14; ++level) {
        h /= 2;
        BigReal add(0);
        for (double u = h; u <= umax; u += 2 * h)
            add += eval(BigReal(u)) + eval(BigReal(-u));
        sum += add;
        BigReal cur = sum * h;
        if (level >= 3 && abs(cur - prev) <= tol * (abs(cur) + peak)) return cur;
        prev = cur;
    }
    throw oracle_error("oracle: quadrature tolerance not met");
}

// shared driver for the K-type integrals
template <class G>
BigReal k_integral(double nu, const BigReal& t, const PrecisionContext& ctx, G weight) {
    check_ctx(ctx);
    if (!(t > 0)) throw oracle_error("oracle: k_iv requires t > 0");
    unsigned prec = static_cast<unsigned>(ctx.digits + 0.683 * nu + 15);
    PrecisionScope scope(prec);
    BigReal tw(t);
    tw.precision(prec);
    BigReal nuw(nu);
    nuw.precision(prec);

    // cutoff S: e^{-t cosh S} below the tolerance floor
    double td = static_cast<double>(t);
    double target = (prec + 10) * 2.302585 / td;
    double S = std::acosh(std::max(2.0, target));
    S = std::max(S, 3.0 / std::sqrt(td) + 1.0); // keep the hump inside for large t

    auto integrand = [&](const BigReal& s) -> BigReal {
        return BigReal(exp(-tw * cosh(s)) * cos(nuw * s) * weight(s));
    };
    // cancellation against the e^{-nu pi/2} scale of K caps the achievable
    // relative accuracy below the padded working precision
    BigReal v = tanh_sinh(integrand, BigReal(0), BigReal(S), prec, ctx.digits + 8);
    return round_to(v, ctx.digits);
}

} // namespace

double oracle_t_max(const PrecisionContext& ctx) {
    (void)ctx;
    return 900.0; // 0.45*t extra digits; keeps the pad under ~400 digits
}

BigCx gamma_complex(const BigCx& w, const PrecisionContext& ctx) {
    check_ctx(ctx);
    BigCx r = gamma_at(w, static_cast<unsigned>(ctx.digits) + 10);
    r.re = round_to(r.re, ctx.digits);
    r.im = round_to(r.im, ctx.digits);
    return r;
}

BigCx j_iv(double nu, const BigReal& t, const PrecisionContext& ctx) {
    if (!(t > 0)) throw oracle_error("oracle: j_iv requires t > 0");
    return bessel_series(nu, BigCx(t, BigReal(0)), 1, true, ctx);
}

BigCx j_1piv(double nu, const BigReal& t, const PrecisionContext& ctx) {
    if (!(t > 0)) throw oracle_error("oracle: j_1piv requires t > 0");
    return bessel_series(nu, BigCx(t, BigReal(0)), 1, true, ctx, 1);
}

BigCx i_iv(double nu, const BigCx& z, int sign, const PrecisionContext& ctx) {
    if (sign != 1 && sign != -1) throw oracle_error("oracle: sign must be +-1");
    return bessel_series(nu, z, sign, false, ctx);
}

BigCx i_shift_iv(double nu, const BigReal& t, int offset, const PrecisionContext& ctx) {
    if (offset < -1 || offset > 1) throw oracle_error("oracle: offset must be in {-1,0,1}");
    if (!(t > 0)) throw oracle_error("oracle: i_shift_iv requires t > 0");
    return bessel_series(nu, BigCx(t, BigReal(0)), 1, false, ctx, offset);
}

BigReal k_iv(double nu, const BigReal& t, const PrecisionContext& ctx) {
    return k_integral(nu, t, ctx, [](const BigReal&) -> BigReal { return BigReal(1); });
}

BigReal k_1piv_re(double nu, const BigReal& t, const PrecisionContext& ctx) {
    return k_integral(nu, t, ctx, [](const BigReal& s) -> BigReal { return cosh(s); });
}

BigReal l_iv(double nu, const BigReal& t, const PrecisionContext& ctx) {
    check_ctx(ctx);
    PrecisionContext inner = ctx;
    inner.digits = ctx.digits + static_cast<int>(0.683 * nu) + 10;
    PrecisionScope scope(inner.digits + 10);
    BigCx zz(t, BigReal(0));
    BigCx sum = i_iv(nu, zz, 1, inner) + i_iv(nu, zz, -1, inner);
    BigReal pi = big_pi();
    BigReal nuw(nu);
    BigReal v = pi / (2 * sinh(nuw * pi)) * sum.re;
    return round_to(v, ctx.digits);
}

BigReal k_iv_series(double nu, const BigReal& t, const PrecisionContext& ctx) {
    check_ctx(ctx);
    PrecisionContext inner = ctx;
    inner.digits = ctx.digits + static_cast<int>(0.683 * nu) + 10;
    PrecisionScope scope(inner.digits + 10);
    BigCx zz(t, BigReal(0));
    BigCx diff = i_iv(nu, zz, 1, inner) - i_iv(nu, zz, -1, inner);
    // (pi i / (2 sinh(nu pi))) (I_{i nu} - I_{-i nu}) is real
    BigReal pi = big_pi();
    BigReal nuw(nu);
    BigReal v = -pi / (2 * sinh(nuw * pi)) * diff.im;
    return round_to(v, ctx.digits);
}

} // namespace ubim
