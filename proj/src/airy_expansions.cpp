#include "ubim/airy_expansions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "ubim/airy.hpp"
#include "ubim/branch_maps.hpp"
#include "ubim/coeff_engine.hpp"
#include "ubim/turning_tables.hpp"
#include "ubim/zeros.hpp"

namespace ubim {

namespace {

constexpr double kPi = 3.14159265358979323846;

double log_sinh(double y) {
    if (y < 20.0) return std::log(std::sinh(y));
    return y - std::log(2.0) + std::log1p(-std::exp(-2.0 * y));
}

bool is_real_axis(const Cxd& z) { return z.im == 0.0; }

void check_ab_args(double nu, const Cxd& z, int s_max) {
    if (!(nu > 0)) throw std::domain_error("AB_eval: nu must be positive");
    if (z.re == 0.0 && z.im == 0.0) throw std::domain_error("AB_eval: z = 0");
    if (z.re < 0.0) throw std::domain_error("AB_eval: right half-plane only");
    if (s_max < 0 || s_max > turning_tables().ab_smax)
        throw std::domain_error("AB_eval: s_max beyond generated coefficients");
}

ABBranch pick_branch(const Cxd& z) {
    double d = std::hypot(z.re - 1.0, z.im);
    if (d < 0.1) return ABBranch::taylor;
    if (is_real_axis(z) && z.re <= 0.9) return ABBranch::tau_form;
    return ABBranch::direct;
}

ABPair ab_taylor(double nu, const Cxd& z, int s_max) {
    const TurningPointTables& tt = turning_tables();
    Cxd w = z - Cxd(1.0);
    ABPair r;
    r.branch_used = ABBranch::taylor;
    double nu2 = nu * nu;
    Cxd A(1.0);
    double scale = 1.0;
    for (int s = 1; s <= s_max; ++s) {
        scale /= nu2;
        Cxd acc(0.0);
        const auto& c = tt.A_d[static_cast<std::size_t>(s)];
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * w + Cxd(c[i]);
        A = A + acc * scale;
    }
    Cxd B(0.0);
    scale = std::pow(nu, -4.0 / 3.0);
    for (int s = 0; s <= s_max; ++s) {
        Cxd acc(0.0);
        const auto& c = tt.B_d[static_cast<std::size_t>(s)];
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * w + Cxd(c[i]);
        B = B + acc * scale;
        scale /= nu2;
    }
    r.A = A;
    r.B = B;
    return r;
}

// real-arithmetic route on (0, 0.9]: with beta = -i/u and xi = -iR the
// script-E values are i^s times real numbers, so the d recursion stays real
ABPair ab_tau(double nu, double x, int s_max) {
    PrecisionScope scope(40);
    const CoefficientTable& tab = default_table();
    BigReal xb(x);
    BigReal u = sqrt((1 - xb) * (1 + xb));
    BigReal R = log((1 + u) / xb) - u;
    BigReal negzeta = exp(BigReal(2) / 3 * log(BigReal(3) / 2 * R));
    BigReal beta_hat = 1 / u;

    int top = 2 * s_max + 1;
    std::vector<BigReal> scr(static_cast<std::size_t>(top) + 1, BigReal(0));
    std::vector<BigReal> scr_t = scr;
    BigReal Rs(1);
    for (int s = 1; s <= top; ++s) {
        Rs *= R;
        // ehat is normalized for beta = +i/u; here beta = -i/u, which shifts
        // the stripped power of i by (-1)^{floor(s/2)}
        BigReal E = ehat_eval(tab, s, beta_hat);
        if ((s / 2) % 2 != 0) E = -E;
        BigReal corr = RationalPoly::convert<BigReal>(tab.a_s(s, false)) / (s * Rs);
        BigReal corr_t = RationalPoly::convert<BigReal>(tab.a_s(s, true)) / (s * Rs);
        scr[static_cast<std::size_t>(s)] =
            (s % 2 == 0) ? BigReal(E + corr) : BigReal(E - corr);
        scr_t[static_cast<std::size_t>(s)] =
            (s % 2 == 0) ? BigReal(E + corr_t) : BigReal(E - corr_t);
    }
    std::vector<BigReal> d = d_recursion(scr);
    std::vector<BigReal> dt = d_recursion(scr_t);

    BigReal nu2 = BigReal(nu) * BigReal(nu);
    BigReal A(1), scale(1);
    for (int s = 1; s <= s_max; ++s) {
        scale /= nu2;
        BigReal As = dt[static_cast<std::size_t>(2 * s)];
        if (s % 2 != 0) As = -As;
        A += As * scale;
    }
    BigReal B(0);
    scale = exp(BigReal(-4) / 3 * log(BigReal(nu)));
    BigReal sqnz = sqrt(negzeta);
    for (int s = 0; s <= s_max; ++s) {
        BigReal Bs = d[static_cast<std::size_t>(2 * s + 1)] / sqnz;
        if (s % 2 != 0) Bs = -Bs;
        B += Bs * scale;
        scale /= nu2;
    }
    ABPair r;
    r.branch_used = ABBranch::tau_form;
    r.A = Cxd(static_cast<double>(A));
    r.B = Cxd(static_cast<double>(B));
    return r;
}

ABPair ab_direct_branch(double nu, const Cxd& z, int s_max) {
    PrecisionScope scope(40);
    using BC = Cx<BigReal>;
    Frame<BigReal> f = map_point(BC(BigReal(z.re), BigReal(z.im)));
    BC zeta_m12 = BC(BigReal(2)) * f.zeta / (BC(BigReal(3)) * f.xi);
    std::vector<BC> A, B;
    ab_direct(default_table(), s_max, f.beta, f.xi, zeta_m12, A, B);

    BigReal nu2 = BigReal(nu) * BigReal(nu);
    BC As(BigReal(1)), scale(BigReal(1));
    for (int s = 1; s <= s_max; ++s) {
        scale = scale / BC(nu2);
        As = As + A[static_cast<std::size_t>(s)] * scale;
    }
    BC Bs;
    scale = BC(exp(BigReal(-4) / 3 * log(BigReal(nu))));
    for (int s = 0; s <= s_max; ++s) {
        Bs = Bs + B[static_cast<std::size_t>(s)] * scale;
        scale = scale / BC(nu2);
    }
    ABPair r;
    r.branch_used = ABBranch::direct;
    r.A = Cxd(static_cast<double>(As.re), static_cast<double>(As.im));
    r.B = Cxd(static_cast<double>(Bs.re), static_cast<double>(Bs.im));
    return r;
}

ScaledValue sv_from_bigreal(const BigReal& v) {
    if (v == 0) return ScaledValue{Cxd(0.0), 0.0};
    double lg = static_cast<double>(log(abs(v)));
    return ScaledValue{Cxd(v > 0 ? 1.0 : -1.0), lg};
}

ScaledValue sv_from_bigcx(const BigCx& v) {
    BigReal a = abs(v);
    if (a == 0) return ScaledValue{Cxd(0.0), 0.0};
    double lg = static_cast<double>(log(a));
    BigCx m = v / a;
    return ScaledValue{Cxd(static_cast<double>(m.re), static_cast<double>(m.im)), lg};
}

ScaledValue sv(const Cxd& v) { return ScaledValue::from(v); }

Cxd frame_zeta(const Cxd& z) {
    PrecisionScope scope(40);
    using BC = Cx<BigReal>;
    Frame<BigReal> f = map_point(BC(BigReal(z.re), BigReal(z.im)));
    return Cxd(static_cast<double>(f.zeta.re), static_cast<double>(f.zeta.im));
}

Cxd frame_sigma(const Cxd& z) {
    PrecisionScope scope(40);
    using BC = Cx<BigReal>;
    Frame<BigReal> f = map_point(BC(BigReal(z.re), BigReal(z.im)));
    return Cxd(static_cast<double>(f.sigma.re), static_cast<double>(f.sigma.im));
}

} // namespace

ABPair AB_eval(double nu, const Cxd& z, int s_max) {
    check_ab_args(nu, z, s_max);
    return AB_eval(nu, z, s_max, pick_branch(z));
}

ABPair AB_eval(double nu, const Cxd& z, int s_max, ABBranch force) {
    check_ab_args(nu, z, s_max);
    switch (force) {
    case ABBranch::taylor: return ab_taylor(nu, z, s_max);
    case ABBranch::tau_form:
        if (!is_real_axis(z) || !(z.re < 1.0))
            throw std::domain_error("AB_eval: tau branch needs real z in (0,1)");
        return ab_tau(nu, z.re, s_max);
    case ABBranch::direct: return ab_direct_branch(nu, z, s_max);
    }
    throw std::logic_error("AB_eval: unreachable");
}

ABPair AB_exact(double nu, const Cxd& z, const PrecisionContext& ctx) {
    if (!(nu > 0)) throw std::domain_error("AB_exact: nu must be positive");
    if (!is_real_axis(z) || !(z.re > 0))
        throw std::domain_error("AB_exact: positive real z required");
    double x = z.re;

    Cxd zeta = frame_zeta(z);
    Cxd sigma = frame_sigma(z);
    Cxd t = zeta * std::pow(nu, 2.0 / 3.0);
    ScaledValue C{Cxd(std::sqrt(2.0) * std::pow(nu, 1.0 / 3.0)) / sqrt(sigma),
                  -nu * kPi / 2.0};
    C.normalize();

    PrecisionScope scope(static_cast<unsigned>(ctx.digits) + 10);
    BigReal arg = BigReal(nu) * BigReal(x);
    ScaledValue Ip = sv_from_bigcx(i_iv(nu, BigCx(arg, BigReal(0)), 1, ctx));

    ABPair r;
    r.branch_used = ABBranch::direct;
    if (x < 1.0) {
        ScaledValue Im = sv_from_bigcx(i_iv(nu, BigCx(arg, BigReal(0)), -1, ctx));
        Cxd em = polar(1.0, -kPi / 3.0), ep = polar(1.0, kPi / 3.0);
        ScaledValue braceA = sv(em) * Ip * airy_rotated_prime(-1, t) +
                             sv(ep) * Im * airy_rotated_prime(1, t);
        ScaledValue braceB =
            sv(em) * Ip * airy_rotated(-1, t) + sv(ep) * Im * airy_rotated(1, t);
        r.A = (sv(Cxd(-kPi)) * C * braceA).value();
        r.B = (sv(Cxd(kPi)) * C * braceB).value();
    } else {
        ScaledValue K = sv_from_bigreal(k_iv(nu, arg, ctx));
        ScaledValue sinhK = ScaledValue{Cxd(1.0), log_sinh(nu * kPi)} * K;
        ScaledValue two_e = sv(polar(2.0, -kPi / 6.0));
        ScaledValue braceA =
            two_e * sinhK * airy_rotated_prime(1, t) - sv(Cxd(kPi)) * Ip * airy_rotated_prime(0, t);
        ScaledValue braceB =
            sv(Cxd(kPi)) * Ip * airy_rotated(0, t) - two_e * sinhK * airy_rotated(1, t);
        r.A = (C * braceA).value();
        r.B = (C * braceB).value();
    }
    return r;
}

ScaledValue bessel_airy(BesselKind which, double nu, const Cxd& z, ABMode mode,
                        int s_max, const PrecisionContext& ctx) {
    check_ab_args(nu, z, s_max);
    ABPair ab = (mode == ABMode::series_AB) ? AB_eval(nu, z, s_max)
                                            : AB_exact(nu, z, ctx);
    Cxd zeta = frame_zeta(z);
    Cxd sigma = frame_sigma(z);
    Cxd t = zeta * std::pow(nu, 2.0 / 3.0);

    ScaledValue ai, aip;
    switch (which) {
    case BesselKind::I_plus:
        ai = airy_rotated(1, t);
        aip = airy_rotated_prime(1, t);
        break;
    case BesselKind::I_minus:
        ai = airy_rotated(-1, t);
        aip = airy_rotated_prime(-1, t);
        break;
    case BesselKind::K:
        ai = airy_rotated(0, t);
        aip = airy_rotated_prime(0, t);
        break;
    case BesselKind::L: {
        AiryScaled av = airy_eval_scaled(t);
        ai = av.bi;
        aip = av.bi_prime;
        break;
    }
    }
    ScaledValue w = ai * sv(ab.A) + aip * sv(ab.B);

    ScaledValue pref;
    double n13 = std::pow(nu, 1.0 / 3.0);
    Cxd sq = sqrt(sigma);
    switch (which) {
    case BesselKind::I_plus:
        pref = ScaledValue{Cxd(std::sqrt(2.0) / n13) * polar(1.0, -kPi / 6.0) * sq,
                           nu * kPi / 2.0};
        break;
    case BesselKind::I_minus:
        pref = ScaledValue{Cxd(std::sqrt(2.0) / n13) * polar(1.0, kPi / 6.0) * sq,
                           nu * kPi / 2.0};
        break;
    case BesselKind::K:
    case BesselKind::L:
        pref = ScaledValue{Cxd(kPi / (std::sqrt(2.0) * n13)) * sq,
                           nu * kPi / 2.0 - log_sinh(nu * kPi)};
        break;
    }
    pref.normalize();
    return pref * w;
}

double l_boundary(double nu) {
    static std::mutex cache_mutex;
    static std::map<double, double> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(nu);
        if (it != cache.end()) return it->second;
    }
    KZeroQuery q{nu, 1, ZeroFamily::L, 2, nullptr};
    double x0 = k_zero(q).x;
    auto sign_at = [&](double x) {
        ScaledValue v = bessel_airy(BesselKind::L, nu, Cxd(x), ABMode::series_AB, 3);
        return v.mantissa.re >= 0.0 ? 1 : -1;
    };
    double w = std::max(1e-8 * x0, x0 * 1e-10);
    double lo = x0 - w, hi = x0 + w;
    for (int tries = 0; tries < 40 && sign_at(lo) == sign_at(hi); ++tries) {
        w *= 4.0;
        lo = std::max(x0 / 2, x0 - w);
        hi = x0 + w;
    }
    if (sign_at(lo) == sign_at(hi))
        throw std::runtime_error("l_boundary: bisection bracket not found");
    int slo = sign_at(lo);
    while (hi - lo > 1e-13 * x0) {
        double mid = 0.5 * (lo + hi);
        if (sign_at(mid) == slo) lo = mid; else hi = mid;
    }
    double r = 0.5 * (lo + hi);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[nu] = r;
    return r;
}

double envelope_N(double nu, double x, const PrecisionContext& ctx) {
    if (!(nu > 0) || !(x > 0)) throw std::domain_error("envelope_N: positive nu, x");
    PrecisionScope scope(static_cast<unsigned>(ctx.digits) + 10);
    BigReal arg = BigReal(nu) * BigReal(x);
    double K = static_cast<double>(k_iv(nu, arg, ctx));
    if (x > l_boundary(nu)) return K;
    double L = static_cast<double>(l_iv(nu, arg, ctx));
    return std::hypot(K, L);
}

double chi_diagnostic(double nu, double x, int s_max, const PrecisionContext& ctx) {
    if (!(nu > 0) || !(x > 0)) throw std::domain_error("chi: positive nu, x");
    PrecisionScope scope(static_cast<unsigned>(ctx.digits) + 10);
    BigReal arg = BigReal(nu) * BigReal(x);
    BigReal K = k_iv(nu, arg, ctx);
    ScaledValue S = bessel_airy(BesselKind::K, nu, Cxd(x), ABMode::series_AB, s_max, ctx);
    ScaledValue diff = sv_from_bigreal(K) - S;

    double n_log;
    double k_log = static_cast<double>(log(abs(K)));
    if (x <= l_boundary(nu)) {
        double l_log = static_cast<double>(log(abs(l_iv(nu, arg, ctx))));
        double m = std::max(k_log, l_log);
        n_log = m + 0.5 * std::log(std::exp(2.0 * (k_log - m)) +
                                   std::exp(2.0 * (l_log - m)));
    } else {
        n_log = k_log;
    }
    return std::exp(diff.abs_log() - n_log);
}

double omega3(double nu, double x, int s_max, const PrecisionContext& ctx) {
    return std::log10(chi_diagnostic(nu, x, s_max, ctx));
}

} // namespace ubim
