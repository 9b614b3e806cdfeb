#include "ubim/turning_tables.hpp"

#include <stdexcept>

#include "ubim/pseries.hpp"

namespace ubim {

namespace {

constexpr int kTCap = 96;       // highest t-exponent carried
constexpr int kEngineDigits = 120;

struct FrameSeries {
    PSeries xi, zeta, beta, sigma, zeta_m12, z;
};

FrameSeries build_frame_series() {
    FrameSeries f;
    // z = 1 + t^2
    PSeries z(0, kTCap);
    z.c[0] = 1;
    z.c[2] = 1;
    f.z = z;

    PSeries two_pw(0, kTCap);
    two_pw.c[0] = 2;
    two_pw.c[2] = 1;
    PSeries g1 = pow_rational(two_pw, 1, 2); // (2+w)^{1/2}

    PSeries t = PSeries::monomial(BigReal(1), 1, kTCap);
    // xi' w.r.t. z equals (z^2-1)^{1/2}/z = t*g1/(1+w)
    PSeries integrand = t * g1 * inverse(z);
    f.xi = integrate_w(integrand);
    f.zeta = pow_rational(f.xi * (BigReal(3) / BigReal(2)), 2, 3);
    f.beta = inverse(t * g1);
    PSeries zeta_half = pow_rational(f.zeta, 1, 2);
    f.sigma = zeta_half * f.beta;
    f.zeta_m12 = inverse(zeta_half);
    return f;
}

PSeries poly_on_series(const RationalPoly& p, const PSeries& x) {
    PSeries acc = PSeries::constant(BigReal(0), x.cap);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x;
        if (c[i] != 0) acc = acc + PSeries::constant(to_bigreal(c[i]), x.cap);
    }
    return acc;
}

PSeries script_E_series(const CoefficientTable& tab, int s, const FrameSeries& f, bool tilde) {
    PSeries E = poly_on_series(tab.E_s(s), f.beta);
    PSeries xi_inv_s = PSeries::constant(BigReal(1), kTCap);
    PSeries xi_inv = inverse(f.xi);
    for (int i = 0; i < s; ++i) xi_inv_s = xi_inv_s * xi_inv;
    PSeries corr = xi_inv_s * (to_bigreal(tab.a_s(s, tilde)) / BigReal(s));
    return (s % 2 == 0) ? E + corr : E - corr;
}

std::vector<PSeries> gen_d_series(const CoefficientTable& tab, int max_s, const FrameSeries& f,
                                  bool tilde) {
    std::vector<PSeries> scr(static_cast<std::size_t>(max_s) + 1), d(scr.size());
    for (int s = 1; s <= max_s; ++s) scr[s] = script_E_series(tab, s, f, tilde);
    for (int s = 1; s <= max_s; ++s) {
        PSeries acc = scr[s];
        for (int j = 1; j <= s - 1; ++j)
            acc = acc + scr[j] * d[s - j] * (BigReal(j) / BigReal(s));
        d[s] = acc;
    }
    return d;
}

// Collapses a series that is analytic in w: asserts that negative and odd
// t-exponent coefficients are numerically zero, returns the w-coefficients.
std::vector<BigReal> to_wseries(const PSeries& s, const char* what) {
    BigReal scale(0);
    for (const auto& x : s.c) {
        BigReal a = abs(x);
        if (a > scale) scale = a;
    }
    if (scale == 0) return {BigReal(0)};
    BigReal tol = scale * pow(BigReal(10), -(kEngineDigits - 25));
    // trailing t-coefficients are contaminated by truncation of the deep
    // Laurent leads; drop a safety band before testing/collecting
    int usable_cap = s.cap - (s.lead < 0 ? -s.lead : 0) - 2;
    std::vector<BigReal> w;
    for (int e = s.lead; e <= usable_cap; ++e) {
        BigReal c = s.coeff(e);
        if (e < 0 || e % 2 != 0) {
            if (abs(c) > tol)
                throw std::logic_error(std::string("turning series not analytic: ") + what);
            continue;
        }
        int k = e / 2;
        if (static_cast<int>(w.size()) <= k) w.resize(static_cast<std::size_t>(k) + 1, BigReal(0));
        w[static_cast<std::size_t>(k)] = c;
    }
    return w;
}

std::vector<double> mirror(const std::vector<BigReal>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<double>(v[i]);
    return r;
}

std::vector<BigReal> kappa_series_impl(const KappaTable& table, int s, const FrameSeries& f) {
    auto it = table.entries.find(s);
    if (it == table.entries.end())
        throw std::out_of_range("kappa_series: order beyond loaded table");
    PSeries zeta_inv = inverse(f.zeta);
    PSeries acc = PSeries::constant(BigReal(0), kTCap);
    for (const KappaTerm& t : it->second) {
        PSeries term = PSeries::constant(to_bigreal(t.coef), kTCap);
        for (int i = 0; i < t.pz; ++i) term = term * f.z;
        for (int i = 0; i < t.psigma; ++i) term = term * f.sigma;
        for (int i = 0; i < t.pzetainv; ++i) term = term * zeta_inv;
        acc = acc + term;
    }
    return to_wseries(acc, "kappa_hat");
}

TurningPointTables build_tables() {
    PrecisionScope scope(kEngineDigits);
    const CoefficientTable& tab = default_table();
    FrameSeries f = build_frame_series();

    TurningPointTables t;
    t.zeta = to_wseries(f.zeta, "zeta");
    t.sigma = to_wseries(f.sigma, "sigma");

    std::vector<PSeries> dt = gen_d_series(tab, 2 * t.ab_smax, f, true);
    std::vector<PSeries> d = gen_d_series(tab, 2 * t.ab_smax + 1, f, false);
    t.A.resize(static_cast<std::size_t>(t.ab_smax) + 1);
    t.B.resize(static_cast<std::size_t>(t.ab_smax) + 1);
    for (int s = 1; s <= t.ab_smax; ++s)
        t.A[static_cast<std::size_t>(s)] = to_wseries(dt[2 * s], "A_s");
    for (int s = 0; s <= t.ab_smax; ++s)
        t.B[static_cast<std::size_t>(s)] = to_wseries(f.zeta_m12 * d[2 * s + 1], "B_s");

    // Upsilon_1 = (10 sigma^3 + 6 sigma zeta - 5) / (48 zeta^2)
    PSeries num = f.sigma * f.sigma * f.sigma * BigReal(10) + f.sigma * f.zeta * BigReal(6) -
                  PSeries::constant(BigReal(5), kTCap);
    PSeries ups1 = num * inverse(f.zeta * f.zeta) * (BigReal(1) / BigReal(48));
    t.upsilon1 = to_wseries(ups1, "Upsilon_1");

    for (int s = 0; s <= 2; ++s) t.kappa[s] = kappa_series_impl(builtin_kappa_table(), s, f);

    t.zeta_d = mirror(t.zeta);
    t.sigma_d = mirror(t.sigma);
    t.upsilon1_d = mirror(t.upsilon1);
    t.A_d.resize(t.A.size());
    t.B_d.resize(t.B.size());
    for (std::size_t i = 0; i < t.A.size(); ++i) t.A_d[i] = mirror(t.A[i]);
    for (std::size_t i = 0; i < t.B.size(); ++i) t.B_d[i] = mirror(t.B[i]);
    for (const auto& [s, v] : t.kappa) t.kappa_d[s] = mirror(v);
    return t;
}

} // namespace

const TurningPointTables& turning_tables() {
    static const TurningPointTables t = build_tables();
    return t;
}

std::vector<BigReal> kappa_series_for(const KappaTable& table, int s) {
    PrecisionScope scope(kEngineDigits);
    FrameSeries f = build_frame_series();
    return kappa_series_impl(table, s, f);
}

} // namespace ubim
