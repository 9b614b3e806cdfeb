#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ubim/branch_maps.hpp"
#include "ubim/coeff_engine.hpp"
#include "ubim/oscillatory_j.hpp"

using namespace ubim;

namespace {
const double kPi = 3.14159265358979323846;
const PrecisionContext ctx40{};
} // namespace

TEST_CASE("modulus expansion against the oracle") {
    CHECK(omega1(10.0, 1.0, 4, ctx40) <= -10.0);
    for (double x : {0.1, 0.5, 2.0, 4.0, 6.0})
        CHECK(omega1(10.0, x, 4, ctx40) <= -10.0);
}

TEST_CASE("modulus large-x reduction") {
    double nu = 10.0, x = 1e8;
    ScaledValue R = j_modulus(nu, x, 4);
    double expect = std::sqrt(1.0 / (2.0 * kPi * nu)) / std::sqrt(x);
    CHECK(R.mantissa.re == doctest::Approx(expect).epsilon(1e-12));
    CHECK(R.log_scale == doctest::Approx(nu * kPi / 2.0));
}

TEST_CASE("phase expansion against the oracle") {
    for (double x : {0.3, 0.6627434193, 1.0, 2.5, 5.0})
        CHECK(omega2(10.0, x, 4, ctx40) <= -10.0);
}

TEST_CASE("phase structure") {
    // at the rho = 0 point the nu rho term drops out
    double xs = 0.6627434193;
    CHECK(std::abs(rho(xs)) < 1e-9);
    double nu = 10.0;
    double bh = 1.0 / std::sqrt(xs * xs + 1.0);
    double odd = 0.0;
    for (int s = 0; s <= 4; ++s)
        odd += ehat_eval<double>(default_table(), 2 * s + 1, bh) / std::pow(nu, 2.0 * s + 1);
    CHECK(j_phase(nu, xs, 4) ==
          doctest::Approx(nu * rho(xs) - kPi / 4.0 + odd).epsilon(1e-14));

    // continuous and strictly increasing
    double prev = j_phase(nu, 0.01, 4);
    for (double x = 0.02; x < 6.0; x += 0.07) {
        double cur = j_phase(nu, x, 4);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("zero approximants reproduce the reference digits") {
    ZeroResult lo = j_zero(ZeroQuery{10.0, -20, 0.0, 4});
    CHECK(std::abs(lo.x - 0.0012691448) < 1e-10);
    CHECK(lo.t == doctest::Approx(10.0 * lo.x).epsilon(1e-14));
    CHECK(lo.terms_used == 5);
    CHECK(lo.estimated_relative_error == -1.0);

    ZeroResult hi = j_zero(ZeroQuery{10.0, 20, 0.0, 4});
    CHECK(std::abs(hi.x - 6.2842314194) < 5e-10);
}

TEST_CASE("zero monotonicity and extreme-index log form") {
    double prev = -1.0;
    for (long long m = -30; m <= 30; ++m) {
        ZeroResult z = j_zero(ZeroQuery{10.0, m, 0.0, 4});
        CHECK(z.t > prev);
        prev = z.t;
    }
    // far below the phase origin the location only survives in log space
    ZeroResult deep = j_zero(ZeroQuery{10.0, -30000, 0.0, 4});
    CHECK(deep.t == 0.0);
    CHECK(deep.log_t < -9000.0);
    double M = -30000.25 * kPi / 10.0;
    CHECK(std::abs(deep.log_t - (std::log(10.0) + M - 1.0 + std::log(2.0))) < 0.01);
}

TEST_CASE("delta0 reproduces the reference error estimates") {
    BigReal tlo = j_zero_hp(ZeroQuery{10.0, -20, 0.0, 4});
    double dlo = static_cast<double>(delta0_hp(10.0, tlo, ctx40));
    CHECK(std::abs(dlo / 8.120851953268e-14 - 1.0) < 1e-12);

    BigReal thi = j_zero_hp(ZeroQuery{10.0, 20, 0.0, 4});
    double dhi = static_cast<double>(delta0_hp(10.0, thi, ctx40));
    CHECK(std::abs(dhi / 1.33246199579953564e-17 - 1.0) < 1e-10);
    // 18-digit check needs the mantissa beyond double; compare in BigReal
    PrecisionScope scope(60);
    BigReal d = delta0_hp(10.0, thi, ctx40);
    BigReal ref = BigReal("1.33246199579953564e-17");
    CHECK(static_cast<double>(abs(d / ref - 1)) < 5e-18);
}

TEST_CASE("derivative relation behind the estimator") {
    PrecisionScope scope(60);
    PrecisionContext hctx;
    hctx.digits = 50;
    double nu = 5.0;
    BigReal t(3), h = pow(BigReal(10), -20);
    BigCx num = (j_iv(nu, BigReal(t + h), hctx) - j_iv(nu, BigReal(t - h), hctx)) /
                BigReal(2 * h);
    BigCx J = j_iv(nu, t, hctx);
    BigCx J1 = j_1piv(nu, t, hctx);
    BigReal rejp = -J1.re - BigReal(nu) / t * J.im;
    CHECK(static_cast<double>(abs(num.re - rejp)) < 1e-28);
}

TEST_CASE("oracle bracketing of the zeros") {
    for (long long m : {-20LL, -5LL, 1LL, 20LL}) {
        ZeroResult z = j_zero(ZeroQuery{10.0, m, 0.0, 4}, ctx40);
        double d = z.estimated_relative_error;
        CHECK(d >= 0.0);
        BigReal t = j_zero_hp(ZeroQuery{10.0, m, 0.0, 4});
        BigReal lo = t * (1 - 10 * BigReal(d)), hi = t * (1 + 10 * BigReal(d));
        BigReal a = j_iv(10.0, lo, ctx40).re;
        BigReal b = j_iv(10.0, hi, ctx40).re;
        CHECK(a * b < 0);
    }
}

TEST_CASE("y-zero families map onto J-zero parameters") {
    CHECK(y_zero_map(YZeroKind::ReY) == 0.5);
    CHECK(y_zero_map(YZeroKind::ImY) == 0.0);
}

TEST_CASE("first zero-shift coefficient recovered by re-expansion") {
    // solve nu rho(x) + Ehat_1(bh(x))/nu = nu rho(p*) and Richardson-fit
    // nu^2 (x - p*); the limit is q_1(p*)
    double pstar = 1.0;
    auto shift = [&](double nu) {
        double target = nu * rho(pstar);
        double x = pstar;
        for (int it = 0; it < 60; ++it) {
            double bh = 1.0 / std::sqrt(x * x + 1.0);
            double f = nu * rho(x) + ehat_eval<double>(default_table(), 1, bh) / nu - target;
            x -= f / (nu * rho_prime(x));
            if (std::abs(f) < 1e-15 * nu) break;
        }
        return nu * nu * (x - pstar);
    };
    double d20 = shift(20.0), d40 = shift(40.0);
    double fit = (4.0 * d40 - d20) / 3.0;
    CHECK(std::abs(fit - q_poly<double>(1, pstar)) < 1e-6);
    CHECK(q_poly<double>(1, 1.0) == doctest::Approx(1.0 / 96.0).epsilon(1e-15));
}

TEST_CASE("query validation") {
    CHECK_THROWS_AS(j_zero(ZeroQuery{-1.0, 1, 0.0, 4}), std::domain_error);
    CHECK_THROWS_AS(j_zero(ZeroQuery{10.0, 1, 0.7, 4}), std::domain_error);
    CHECK_THROWS_AS(j_zero(ZeroQuery{10.0, 1, 0.0, 5}), std::domain_error);
    CHECK_THROWS_AS(j_modulus(10.0, -1.0, 4), std::domain_error);
    CHECK_THROWS_AS(j_phase(10.0, 1.0, 9), std::domain_error);
}
