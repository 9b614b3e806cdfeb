#include "ubim/kappa_derive.hpp"

#include <stdexcept>
#include <vector>

#include "ubim/coeff_engine.hpp"
#include "ubim/complex.hpp"
#include "ubim/jet.hpp"

namespace ubim {

namespace {

constexpr std::size_t kJetLen = 5; // value + four derivatives
using JR = Jet<BigReal, kJetLen>;
using BigCxT = Cx<BigReal>;
using JC = Jet<BigCxT, kJetLen>;

JC complexify(const JR& a) {
    JC r;
    for (std::size_t k = 0; k < kJetLen; ++k) r.c[k] = BigCxT(a.c[k]);
    return r;
}

// Ai^{(k)}(v) = p_k(v) Ai(v) + q_k(v) Ai'(v), reduced through the Airy ODE
struct AiryReduction {
    std::vector<std::vector<Rational>> p, q; // coefficient lists in v
};

std::vector<Rational> poly_derivative(const std::vector<Rational>& a) {
    if (a.size() <= 1) return {};
    std::vector<Rational> r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(i);
    return r;
}

std::vector<Rational> poly_shift_add(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    // a + v*b
    std::vector<Rational> r(std::max(a.size(), b.size() + 1));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    return r;
}

std::vector<Rational> poly_add(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
    std::vector<Rational> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

AiryReduction airy_reduction(int k_max) {
    AiryReduction red;
    red.p.resize(static_cast<std::size_t>(k_max) + 1);
    red.q.resize(static_cast<std::size_t>(k_max) + 1);
    red.p[0] = {Rational(1)};
    red.q[0] = {};
    for (int k = 0; k < k_max; ++k) {
        red.p[k + 1] = poly_shift_add(poly_derivative(red.p[k]), red.q[k]);
        red.q[k + 1] = poly_add(poly_derivative(red.q[k]), red.p[k]);
    }
    return red;
}

LSeries<JC> poly_in_v(const std::vector<Rational>& a, const JC& zeta, int cap_hi) {
    // a(v) with v = zeta / lambda: coefficient of lambda^{-i} is a_i zeta^i
    int deg = static_cast<int>(a.size()) - 1;
    if (deg < 0) deg = 0;
    LSeries<JC> r(-deg, std::min(0, cap_hi));
    JC zp(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == 0)) r.at(-static_cast<int>(i)) += zp * JC::from_bigreal(to_bigreal(a[i]));
        zp = zp * zeta;
    }
    return r;
}

} // namespace

KappaDerived derive_kappa(const BigReal& z0_in, int s_max, int digits) {
    if (s_max < 1 || s_max > 4) throw std::domain_error("derive_kappa: s_max in 1..4");
    PrecisionScope scope(static_cast<unsigned>(digits) + 10);
    BigReal z0(z0_in);
    z0.precision(digits + 10);
    if (!(z0 > 0) || !(z0 < 1))
        throw std::domain_error("derive_kappa: z0 in (0,1) required");

    // frame values on (0,1): zeta < 0 with (2/3)(-zeta)^{3/2} the phase integral
    BigReal u = sqrt((1 - z0) * (1 + z0));
    BigReal R = log((1 + u) / z0) - u;
    BigReal negzeta = exp(BigReal(2) / 3 * log(BigReal(3) / 2 * R));
    BigReal zeta0 = -negzeta;
    BigReal sigma0 = sqrt(negzeta) / u;

    // lift zeta' = 1/(z sigma), sigma' = (1 - 2 z^2 sigma^3)/(2 z zeta)
    JR z = JR::variable(z0);
    JR zeta(zeta0), sigma(sigma0);
    for (std::size_t k = 0; k + 1 < kJetLen; ++k) {
        JR zp = JR(1) / (z * sigma);
        JR sp = (JR(1) - JR(2) * z * z * sigma * sigma * sigma) / (JR(2) * z * zeta);
        zeta.c[k + 1] = zp.c[k] / BigReal(static_cast<int>(k) + 1);
        sigma.c[k + 1] = sp.c[k] / BigReal(static_cast<int>(k) + 1);
    }

    // complex frame: zeta^{1/2} on the upper branch, beta = sigma/zeta^{1/2}
    JC zetaC = complexify(zeta);
    JC sigmaC = complexify(sigma);
    JC zeta_half = JC::sqrt_with(zetaC, BigCxT(BigReal(0), sqrt(negzeta)));
    JC beta = sigmaC / zeta_half;
    JC xi = JC::from_bigreal(BigReal(2) / 3) * zetaC * zeta_half;
    JC zeta_m12 = JC(1) / zeta_half;

    const int ab_smax = 4;
    std::vector<JC> A, B;
    ab_direct(default_table(), ab_smax, beta, xi, zeta_m12, A, B);

    // Laurent series in lambda = nu^{-2/3}
    const int HI = 3 * s_max - 1;
    LSeries<JC> A_L(0, HI);
    A_L.at(0) = JC(1);
    for (int s = 1; s <= ab_smax && 3 * s <= HI; ++s) A_L.at(3 * s) = A[s];
    LSeries<JC> B_L(2, std::max(2, HI));
    for (int s = 0; s <= ab_smax && 2 + 3 * s <= HI; ++s) B_L.at(2 + 3 * s) = B[s];

    const int k_max = 16;
    AiryReduction red = airy_reduction(k_max);

    // the v = zeta/lambda powers in p_k, q_k pull h^k coefficients down by up
    // to deg_k, so the k cutoff and the h^k window both carry that slack
    auto deg_of = [](const std::vector<Rational>& a) {
        return a.empty() ? 0 : static_cast<int>(a.size()) - 1;
    };
    int k_need = 0, deg_max = 0;
    for (int k = 0; k <= k_max; ++k) {
        int deg = std::max(deg_of(red.p[static_cast<std::size_t>(k)]),
                           deg_of(red.q[static_cast<std::size_t>(k)]));
        if (2 * k - deg <= HI) {
            k_need = k;
            deg_max = std::max(deg_max, deg);
        }
    }
    if (k_need == k_max)
        throw std::runtime_error("derive_kappa: Airy shift order exhausted");
    const int HI2 = HI + deg_max;

    std::vector<JC> ups(static_cast<std::size_t>(s_max) + 1, JC(0));

    // residual of Q(v,h) A - P(v,h) B with h = sum ups[s] lambda^{3s-1}
    auto residual = [&]() -> LSeries<JC> {
        LSeries<JC> h(2, HI2);
        for (int s = 1; s <= s_max; ++s) h.at(3 * s - 1) = ups[static_cast<std::size_t>(s)];
        LSeries<JC> P(0, HI), Q(0, HI);
        LSeries<JC> hk(0, HI2);
        hk.at(0) = JC(1);
        BigReal fact(1);
        for (int k = 0; k <= k_need; ++k) {
            if (k > 0) {
                fact *= k;
                hk = hk.mul(h, HI2);
            }
            JC inv_fact = JC::from_bigreal(BigReal(1) / fact);
            if (!red.p[static_cast<std::size_t>(k)].empty())
                P = P + poly_in_v(red.p[static_cast<std::size_t>(k)], zetaC, HI)
                            .mul(hk, HI)
                            .scale(inv_fact);
            if (!red.q[static_cast<std::size_t>(k)].empty())
                Q = Q + poly_in_v(red.q[static_cast<std::size_t>(k)], zetaC, HI)
                            .mul(hk, HI)
                            .scale(inv_fact);
        }
        return Q.mul(A_L, HI) - P.mul(B_L, HI);
    };

    // the lambda^{3s-1} coefficient is linear in ups[s]
    for (int s = 1; s <= s_max; ++s) {
        ups[static_cast<std::size_t>(s)] = JC(0);
        JC F0 = residual().coeff(3 * s - 1);
        ups[static_cast<std::size_t>(s)] = JC(1);
        JC F1 = residual().coeff(3 * s - 1);
        JC slope = F1 - F0;
        ups[static_cast<std::size_t>(s)] = -F0 / slope;
    }

    // imaginary residue is pure rounding; require it to be negligible
    for (int s = 1; s <= s_max; ++s) {
        const JC& U = ups[static_cast<std::size_t>(s)];
        BigReal scale = abs(U.c[0]);
        for (std::size_t k = 0; k < kJetLen; ++k)
            if (abs(U.c[k].im) > pow(BigReal(10), -digits / 2) * (1 + scale + abs(U.c[k].re)))
                throw std::runtime_error("derive_kappa: lost reality of Upsilon");
    }

    // re-expand zeta(z0 + D) + sum mu^s Upsilon_s(z0 + D) = zeta(z0) with
    // D = sum c_s mu^s, mu = nu^{-2}; each order is linear in the new c_s
    std::vector<BigReal> c(static_cast<std::size_t>(s_max) + 1, BigReal(0));
    auto g_residual = [&]() -> std::vector<BigReal> {
        std::size_t n = static_cast<std::size_t>(s_max) + 1;
        std::vector<BigReal> D(n, BigReal(0));
        for (int s = 1; s <= s_max; ++s) D[static_cast<std::size_t>(s)] = c[static_cast<std::size_t>(s)];
        auto mul_mu = [&](const std::vector<BigReal>& a, const std::vector<BigReal>& b) {
            std::vector<BigReal> r(n, BigReal(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
            return r;
        };
        std::vector<BigReal> g(n, BigReal(0));
        std::vector<BigReal> Dp(n, BigReal(0));
        Dp[0] = 1;
        for (std::size_t j = 0; j < kJetLen; ++j) {
            if (j > 0) Dp = mul_mu(Dp, D);
            for (std::size_t i = 0; i < n; ++i) {
                g[i] += zeta.c[j] * Dp[i];
                for (int s = 1; s <= s_max; ++s)
                    if (i + static_cast<std::size_t>(s) < n)
                        g[i + static_cast<std::size_t>(s)] +=
                            ups[static_cast<std::size_t>(s)].c[j].re * Dp[i];
            }
        }
        g[0] -= zeta.c[0];
        return g;
    };
    for (int s = 1; s <= s_max; ++s) {
        c[static_cast<std::size_t>(s)] = 0;
        BigReal b = g_residual()[static_cast<std::size_t>(s)];
        c[static_cast<std::size_t>(s)] = 1;
        BigReal a = g_residual()[static_cast<std::size_t>(s)] - b;
        c[static_cast<std::size_t>(s)] = -b / a;
    }

    KappaDerived out;
    out.kappa.assign(static_cast<std::size_t>(s_max) + 1, BigReal(0));
    out.upsilon.assign(static_cast<std::size_t>(s_max) + 1, BigReal(0));
    out.kappa[0] = z0;
    for (int s = 1; s <= s_max; ++s) {
        out.kappa[static_cast<std::size_t>(s)] = c[static_cast<std::size_t>(s)];
        out.upsilon[static_cast<std::size_t>(s)] = ups[static_cast<std::size_t>(s)].c[0].re;
    }
    return out;
}

} // namespace ubim
