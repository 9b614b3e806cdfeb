#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "ubim/branch_maps.hpp"
#include "ubim/coeff_engine.hpp"
#include "ubim/turning_tables.hpp"

using namespace ubim;

namespace {

// Gauss-Legendre nodes/weights on [-1,1] at extended precision; the
// E-recursion integrand is polynomial, so modest n integrates it exactly.
void gauss_legendre(int n, std::vector<BigReal>& x, std::vector<BigReal>& w) {
    const BigReal pi = 4 * atan(BigReal(1));
    x.assign(n, BigReal(0));
    w.assign(n, BigReal(0));
    for (int i = 0; i < n; ++i) {
        BigReal xi = cos(pi * BigReal(4 * i + 3) / BigReal(4 * n + 2));
        for (int it = 0; it < 200; ++it) {
            BigReal p0(1), p1(0);
            for (int k = 0; k < n; ++k) {
                BigReal p2 = p1;
                p1 = p0;
                p0 = ((2 * k + 1) * xi * p1 - k * p2) / (k + 1);
            }
            BigReal dp = n * (xi * p0 - p1) / (xi * xi - 1);
            BigReal step = p0 / dp;
            xi -= step;
            if (abs(step) < pow(BigReal(10), -45)) break;
        }
        BigReal p0(1), p1(0);
        for (int k = 0; k < n; ++k) {
            BigReal p2 = p1;
            p1 = p0;
            p0 = ((2 * k + 1) * xi * p1 - k * p2) / (k + 1);
        }
        BigReal dp = n * (xi * p0 - p1) / (xi * xi - 1);
        x[i] = xi;
        w[i] = 2 / ((1 - xi * xi) * dp * dp);
    }
}

BigReal integrate_0_to(const BigReal& b, const std::function<BigReal(const BigReal&)>& f) {
    std::vector<BigReal> x, w;
    gauss_legendre(16, x, w);
    BigReal acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        BigReal p = b / 2 * (x[i] + 1);
        acc += w[i] * f(p);
    }
    return acc * b / 2;
}

} // namespace

TEST_CASE("E_1 and E_2 match the printed closed forms") {
    const auto& tab = default_table();
    CHECK(tab.E_s(1).eval<Rational>(Rational(1)) == Rational(1, 3));
    CHECK(tab.E_s(2).eval<Rational>(Rational(1)) == Rational(3, 4));
    // E_2 = beta^2 (5 beta^2+1)(beta^2+1)/16 at beta = 1/2, exactly
    Rational b(1, 2), b2 = b * b;
    CHECK(tab.E_s(2).eval<Rational>(b) == b2 * (5 * b2 + 1) * (b2 + 1) / 16);
}

TEST_CASE("E_s parity and beta^s divisibility hold exactly") {
    const auto& tab = default_table();
    for (int s = 1; s <= tab.max_order; ++s) {
        const RationalPoly& E = tab.E_s(s);
        if (s % 2 == 0)
            CHECK(E.even());
        else
            CHECK(E.odd());
        CHECK(E.divisible_by_power(static_cast<std::size_t>(s)));
    }
}

TEST_CASE("E_3 recursion output matches quadrature of the defining integral") {
    PrecisionScope scope(50);
    const auto& tab = default_table();
    // printed-form derivatives, written independently of RationalPoly::derivative
    auto E1p = [](const BigReal& p) -> BigReal { return (15 * p * p + 3) / 24; };
    auto E2p = [](const BigReal& p) -> BigReal {
        BigReal p2 = p * p;
        return (30 * p2 * p2 * p + 24 * p2 * p + 2 * p) / 16;
    };
    for (double bd : {0.3, 1.0, 2.0}) {
        BigReal b(bd);
        BigReal lead = b * b * (b * b + 1) / 2 * E2p(b);
        BigReal integral = integrate_0_to(b, [&](const BigReal& p) -> BigReal {
            BigReal e = E1p(p);
            return p * p * (p * p + 1) * e * e;
        });
        BigReal expected = lead + integral / 2;
        BigReal got = tab.E_s(3).eval<BigReal>(b);
        CHECK(static_cast<double>(abs(got - expected)) < 1e-20 * std::max(1.0, std::abs(static_cast<double>(expected))));
    }
}

TEST_CASE("Airy exponent coefficients: seeds and one recursion step") {
    const auto& tab = default_table();
    CHECK(tab.a_s(1, false) == Rational(5, 72));
    CHECK(tab.a_s(2, false) == Rational(5, 72));
    CHECK(tab.a_s(1, true) == Rational(-7, 72));
    CHECK(tab.a_s(2, true) == Rational(-7, 72));
    CHECK(tab.a_s(3, false) == Rational(1105, 10368));
    CHECK(tab.a_s(3, true) == Rational(-1463, 10368));
}

TEST_CASE("ehat polynomials are real with the printed closed forms") {
    const auto& tab = default_table();
    RationalPoly eh1 = ehat_poly(tab.E_s(1), 1);
    CHECK(eh1.eval<Rational>(Rational(1)) == Rational(1, 12));
    // Ehat_2 = (1/16) bh^2 (5 bh^2 - 1)(1 - bh^2) at bh = 1/2
    RationalPoly eh2 = ehat_poly(tab.E_s(2), 2);
    Rational bh(1, 2), b2 = bh * bh;
    CHECK(eh2.eval<Rational>(bh) == b2 * (5 * b2 - 1) * (1 - b2) / 16);
    // Ehat_3 from the generated E_3: odd, evaluates to a real double
    RationalPoly eh3 = ehat_poly(tab.E_s(3), 3);
    CHECK(eh3.odd());
    CHECK(std::isfinite(eh3.eval<double>(0.7)));
}

TEST_CASE("q polynomials: printed substitution values") {
    CHECK(q_poly<Rational>(1, Rational(1)) == Rational(1, 96));
    CHECK(q_poly<Rational>(2, Rational(1)) == Rational(923, 92160));
    CHECK(q_poly<Rational>(0, Rational(7, 3)) == Rational(7, 3));
    // degree count: q_1(x)/x -> 0 as x -> infinity
    CHECK(std::abs(q_poly<double>(1, 1e8) / 1e8) < 1e-15);
}

TEST_CASE("script_E and the d recursion against printed low-order forms") {
    const auto& tab = default_table();
    Frame<double> f = map_point(Cxd(2.0, 0.0));
    Cxd beta = f.beta, xi = f.xi;

    Cxd s1 = script_E(tab, 1, beta, xi, false);
    Cxd e1 = tab.E_s(1).eval<Cxd>(beta) - Cxd(5.0 / 72.0) / xi;
    CHECK(abs(s1 - e1) < 1e-15);

    auto d = gen_d(tab, 3, beta, xi, false);
    Cxd s2 = script_E(tab, 2, beta, xi, false);
    Cxd s3 = script_E(tab, 3, beta, xi, false);
    CHECK(abs(d[1] - s1) == 0.0);
    // d_2 = E_2 + E_1^2/2 ; d_3 = {E_1^3 + 6 E_1 E_2 + 6 E_3}/6 (printed B_1 numerator)
    CHECK(abs(d[2] - (s2 + s1 * s1 * 0.5)) < 1e-15);
    Cxd d3_closed = (s1 * s1 * s1 + 6 * (s1 * s2) + 6 * s3) / 6;
    CHECK(abs(d[3] - d3_closed) < 1e-15);
}

TEST_CASE("d recursion reproduces exp-composition coefficients exactly") {
    // with formal inputs x_j, d_s must equal the coefficient composition of
    // exp(sum x_j y^j); check s=4..7 including the 1/24, 1/120, 1/720, 1/5040 terms
    std::vector<Rational> scr = {0, Rational(3, 7), Rational(-2, 5), Rational(11, 13),
                                 Rational(1, 2),  Rational(-5, 3), Rational(7, 11),
                                 Rational(17, 19)};
    auto d = d_recursion(scr);
    auto& x = scr;
    Rational d4 = x[4] + x[1] * x[3] + x[2] * x[2] / 2 + x[1] * x[1] * x[2] / 2 +
                  x[1] * x[1] * x[1] * x[1] / 24;
    Rational d5 = x[5] + x[1] * x[4] + x[2] * x[3] + x[1] * x[1] * x[3] / 2 +
                  x[1] * x[2] * x[2] / 2 + x[1] * x[1] * x[1] * x[2] / 6 +
                  x[1] * x[1] * x[1] * x[1] * x[1] / 120;
    Rational p1 = x[1];
    Rational d6 = x[6] + x[1] * x[5] + x[2] * x[4] + x[3] * x[3] / 2 +
                  x[1] * x[1] * x[4] / 2 + x[1] * x[2] * x[3] + x[2] * x[2] * x[2] / 6 +
                  p1 * p1 * p1 * x[3] / 6 + p1 * p1 * x[2] * x[2] / 4 +
                  p1 * p1 * p1 * p1 * x[2] / 24 + p1 * p1 * p1 * p1 * p1 * p1 / 720;
    Rational d7 = x[7] + x[1] * x[6] + x[2] * x[5] + x[3] * x[4] +
                  p1 * p1 * x[5] / 2 + p1 * x[2] * x[4] + p1 * x[3] * x[3] / 2 +
                  x[2] * x[2] * x[3] / 2 + p1 * p1 * p1 * x[4] / 6 +
                  p1 * p1 * x[2] * x[3] / 2 + p1 * x[2] * x[2] * x[2] / 6 +
                  p1 * p1 * p1 * p1 * x[3] / 24 + p1 * p1 * p1 * x[2] * x[2] / 12 +
                  p1 * p1 * p1 * p1 * p1 * x[2] / 120 +
                  p1 * p1 * p1 * p1 * p1 * p1 * p1 / 5040;
    CHECK(d[4] == d4);
    CHECK(d[5] == d5);
    CHECK(d[6] == d6);
    CHECK(d[7] == d7);
}

TEST_CASE("kappa-hat built-in table: closed form, limits, turning point") {
    const KappaTable& kt = builtin_kappa_table();
    // closed form comparison at x = 0.5 using the real negative-zeta frame
    Frame<double> f = map_point(Cxd(0.5, 0.0));
    double sg = f.sigma.re, zt = f.zeta.re, z = 0.5;
    CHECK(std::abs(f.sigma.im) < 1e-15);
    CHECK(std::abs(f.zeta.im) < 1e-15);
    double k1 = kappa_hat_terms(kt, 1, z, sg, zt);
    double closed = z * sg * (5 - 10 * sg * sg * sg - 6 * sg * zt) / (48 * zt * zt);
    CHECK(std::abs(k1 - closed) < 1e-14 * std::abs(closed));

    // z -> 0 limits
    Frame<double> fs = map_point(Cxd(1e-4, 0.0));
    double k1s = kappa_hat_terms(kt, 1, 1e-4, fs.sigma.re, fs.zeta.re);
    double k2s = kappa_hat_terms(kt, 2, 1e-4, fs.sigma.re, fs.zeta.re);
    CHECK(std::abs(k1s - (-1e-4 / 12)) < 1e-4 / std::abs(std::log(1e-4)));
    CHECK(std::abs(k2s - (1e-4 / 1440)) < 1e-4 / std::abs(std::log(1e-4)));

    // turning-point constants via the Taylor branch
    const auto& tt = turning_tables();
    CHECK(std::abs(tt.kappa_d.at(1)[0] - (-1.0 / 70.0)) < 1e-12);
    CHECK(std::abs(tt.kappa_d.at(2)[0] - (-3781.0 / 3185000.0)) < 1e-12);
    CHECK(tt.kappa_d.at(0)[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("kappa-hat seam: Taylor vs direct branch at |z-1| = 0.1") {
    const KappaTable& kt = builtin_kappa_table();
    const auto& tt = turning_tables();
    PrecisionScope scope(60);
    for (double z : {0.9, 1.0 - 1e-9}) {
        for (int s = 1; s <= 2; ++s) {
            // closed form at extended precision (the library's direct branch)
            Frame<BigReal> f = map_point(Cx<BigReal>(BigReal(z), BigReal(0)),
                                         BigReal(1) / 100);
            double direct =
                static_cast<double>(kappa_hat_terms(kt, s, BigReal(z), f.sigma.re, f.zeta.re));
            double taylor = eval_wseries(tt.kappa_d.at(s), z - 1.0);
            CHECK(std::abs(direct - taylor) < 1e-11);
            // and the branch-selecting operation agrees with both
            CHECK(std::abs(kappa_hat(s, z, kt) - taylor) < 1e-11);
        }
    }
}

TEST_CASE("kappa table file parsing") {
    // round-trip a valid imported block
    std::istringstream good(
        "# comment line\n"
        "kappa s=3\n"
        "term 1/2 z^1 sigma^2 zetainv^0\n"
        "term -3/4 z^0 sigma^1 zetainv^0 # trailing comment\n");
    KappaTable t = parse_kappa_table(good);
    CHECK(t.source == KappaTable::Source::imported);
    CHECK(t.has(3));
    CHECK(t.max_order() == 3);
    CHECK(t.entries.at(3).size() == 2);
    CHECK(t.entries.at(3)[0].coef == Rational(1, 2));
    // built-in s<=2 preserved
    CHECK(t.has(1));
    double v = kappa_hat_terms(t, 3, 2.0, 3.0, 5.0);
    CHECK(v == doctest::Approx(0.5 * 2 * 9 - 0.75 * 3));

    std::istringstream bad1("kappa s=3\nterm 1/x z^1 sigma^0 zetainv^0\n");
    CHECK_THROWS_AS(parse_kappa_table(bad1), kappa_parse_error);
    std::istringstream bad2("term 1/2 z^1 sigma^0 zetainv^0\n");
    CHECK_THROWS_AS(parse_kappa_table(bad2), kappa_parse_error);
    std::istringstream bad3("kappa s=3\nbogus 1\n");
    CHECK_THROWS_AS(parse_kappa_table(bad3), kappa_parse_error);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_kappa_table(empty), kappa_parse_error);
}
