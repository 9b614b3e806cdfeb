#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ubim/branch_maps.hpp"

using namespace ubim;

namespace {
const double kPi = 3.14159265358979323846;

Cxd zeta_pow32(const Cxd& zeta) { return pow(zeta, 1.5); }
} // namespace

TEST_CASE("map_point at and near the turning point") {
    Frame<double> f = map_point(Cxd(1.0, 0.0));
    CHECK(f.near_turning);
    CHECK(abs(f.xi) < 1e-15);
    CHECK(abs(f.zeta) < 1e-15);
    CHECK(f.sigma.re == doctest::Approx(std::pow(2.0, -1.0 / 3.0)).epsilon(1e-13));
    CHECK(std::abs(f.sigma.im) < 1e-15);
}

TEST_CASE("large real z: xi approaches z - pi/2") {
    // next correction is exactly 1/(2z)
    Frame<double> f = map_point(Cxd(10.0, 0.0));
    CHECK(std::abs(f.xi.re - (10.0 - kPi / 2) - 1.0 / 20.0) < 1e-4);
    CHECK(std::abs(f.xi.im) < 1e-14);
    Frame<double> g = map_point(Cxd(30.0, 0.0));
    CHECK(std::abs(g.xi.re - (30.0 - kPi / 2)) < 0.02);
}

TEST_CASE("imaginary axis: xi = -pi/2 + i rho(x)") {
    for (double x : {0.4, 1.0, 2.5}) {
        Frame<double> f = map_point(Cxd(0.0, x));
        CHECK(std::abs(f.xi.re - (-kPi / 2)) < 1e-13);
        CHECK(std::abs(f.xi.im - rho(x)) < 1e-13 * std::max(1.0, std::abs(rho(x))));
    }
}

TEST_CASE("frame algebraic invariants across the half-plane") {
    const Cxd pts[] = {{2.0, 0.0}, {0.5, 0.8}, {1.2, 0.3},  {0.3, 0.0},
                       {0.0, 1.7}, {4.0, 2.0}, {1.05, 0.0}, {0.92, 0.01},
                       {0.6, -0.9}, {2.0, -1.0}};
    for (const Cxd& z : pts) {
        Frame<double> f = map_point(z);
        Cxd z2m1 = z * z - 1.0;
        if (abs(f.zeta) > 1e-4) {
            Cxd lhs = f.xi;
            Cxd rhs = zeta_pow32(f.zeta) * (2.0 / 3.0);
            CHECK(abs(lhs - rhs) < 1e-13 * abs(lhs));
        }
        if (!f.near_turning) {
            CHECK(abs(f.beta * f.beta * z2m1 - Cxd(1.0)) < 1e-13);
        }
        CHECK(abs(f.sigma * f.sigma * z2m1 - f.zeta) < 1e-13 * std::max(1.0, abs(f.zeta)));
    }
}

TEST_CASE("real-axis sign conventions") {
    Frame<double> a = map_point(Cxd(3.0, 0.0));
    CHECK(a.xi.re > 0);
    CHECK(a.zeta.re > 0);
    CHECK(std::abs(a.xi.im) < 1e-14);
    CHECK(std::abs(a.zeta.im) < 1e-14);
    CHECK(a.beta.re > 0);
    CHECK(a.sigma.re > 0);

    Frame<double> b = map_point(Cxd(0.4, 0.0));
    CHECK(b.zeta.re < 0);
    CHECK(std::abs(b.zeta.im) < 1e-14);
    CHECK(b.sigma.re > 0);
    CHECK(std::abs(b.sigma.im) < 1e-14);
    // upper-branch xi on the cut is -i * positive
    CHECK(b.xi.im < 0);
    CHECK(std::abs(b.xi.re) < 1e-14);
}

TEST_CASE("branch continuity across the cut: conjugate symmetry") {
    for (double x : {0.3, 0.5, 0.9}) {
        Frame<double> up = map_point(Cxd(x, 1e-8));
        Frame<double> dn = map_point(Cxd(x, -1e-8));
        CHECK(abs(up.xi - conj(dn.xi)) < 1e-7 * std::max(1.0, abs(up.xi)));
        CHECK(abs(up.zeta - conj(dn.zeta)) < 1e-7);
        CHECK(abs(up.beta - conj(dn.beta)) < 1e-7 * abs(up.beta));
    }
}

TEST_CASE("xi = 1/beta - arccot(beta) for real z > 1") {
    for (double z : {1.5, 2.0, 5.0, 20.0}) {
        Frame<double> f = map_point(Cxd(z, 0.0));
        double beta = f.beta.re;
        double rhs = 1.0 / beta - std::atan(1.0 / beta);
        CHECK(std::abs(f.xi.re - rhs) < 1e-13 * std::max(1.0, rhs));
    }
}

TEST_CASE("Taylor/closed-form seam on the circle |z-1| = 0.1") {
    for (int k = 0; k < 12; ++k) {
        double th = 2 * kPi * (k + 0.5) / 12;
        Cxd z = Cxd(1.0 + 0.1 * std::cos(th), 0.1 * std::sin(th));
        Frame<double> taylor = map_point(z, 0.100001);
        Frame<double> closed = map_point(z, 0.0999);
        CHECK(taylor.near_turning);
        CHECK(!closed.near_turning);
        CHECK(abs(taylor.zeta - closed.zeta) < 1e-12);
        CHECK(abs(taylor.sigma - closed.sigma) < 1e-12);
        CHECK(abs(taylor.xi - closed.xi) < 1e-12);
    }
}

TEST_CASE("map_point domain errors") {
    CHECK_THROWS_AS(map_point(Cxd(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(map_point(Cxd(-2.0, 0.0)), std::domain_error);
}

TEST_CASE("rho: printed values and asymptotes") {
    CHECK(std::abs(rho(0.6627434193)) < 1e-9);
    double x = 1e-6;
    CHECK(std::abs(rho(x) - (std::log(x / 2) + 1)) < 1e-11);
    CHECK(std::abs(rho(100.0) - (100.0 - 1.0 / 200.0)) < 1e-5);
    CHECK_THROWS_AS(rho(0.0), std::domain_error);
    CHECK_THROWS_AS(rho(-1.0), std::domain_error);
}

TEST_CASE("rho_inverse: seeds, roundtrip, extreme arguments") {
    CHECK(rho_inverse(0.0) == doctest::Approx(0.6627434193).epsilon(1e-9));
    double seed50 = 50 + 1.0 / 100 - 7.0 / (24 * 50.0 * 50 * 50);
    CHECK(std::abs(rho_inverse(50.0) - seed50) < 1e-6);
    for (double M : {-30.0, -1.0, 0.0, 1.0, 30.0}) {
        double x = rho_inverse(M);
        CHECK(std::abs(rho(x) - M) < 1e-13 * std::max(1.0, std::abs(M)));
    }
    // dense roundtrip across the whole range
    for (double M = -50.0; M <= 50.0; M += 2.5) {
        double x = rho_inverse(M);
        CHECK(std::abs(rho(x) - M) < 1e-13 * std::max(1.0, std::abs(M)));
    }
    // log-space branch at extended precision survives M far below double range
    PrecisionScope scope(40);
    BigReal M(-800);
    BigReal x = rho_inverse(M);
    CHECK(x > 0);
    CHECK(static_cast<double>(abs(rho(x) - M)) < 1e-30 * 800);
}

TEST_CASE("tau: limits and the xi = (1-tau)/beta identity") {
    CHECK(tau(1.0 - 1e-12) == doctest::Approx(1.0).epsilon(1e-10));
    double x = 0.5;
    double u = std::sqrt(1 - x * x);
    CHECK(tau(x) == doctest::Approx((std::log(u + 1) - std::log(x)) / u).epsilon(1e-13));
    for (double xv : {0.2, 0.5, 0.9, 0.9995}) {
        Frame<double> f = map_point(Cxd(xv, 0.0), 1e-9); // closed form everywhere
        Cxd xi_from_tau = (1.0 - tau(xv)) / f.beta;
        CHECK(abs(xi_from_tau - f.xi) < 1e-13 * std::max(1.0, abs(f.xi)));
    }
    // zeta^{-1/2} = -2 beta zeta / (3 (tau - 1)) at x = 0.9
    Frame<double> f = map_point(Cxd(0.9, 0.0), 1e-9);
    Cxd lhs = Cxd(1.0) / sqrt(f.zeta);
    Cxd rhs = Cxd(-2.0 / 3.0) * f.beta * f.zeta / Cxd(tau(0.9) - 1.0);
    CHECK(abs(lhs - rhs) < 1e-12 * abs(lhs));
    CHECK_THROWS_AS(tau(0.0), std::domain_error);
    CHECK_THROWS_AS(tau(1.0), std::domain_error);
}

TEST_CASE("frame derivatives: turning-point value and finite differences") {
    Frame<double> f1 = map_point(Cxd(1.0, 0.0));
    FrameDerivatives<double> d1 = frame_derivatives(f1);
    CHECK(d1.zeta_prime.re == doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-12));

    for (double z : {2.0, 0.5}) {
        Frame<double> f = map_point(Cxd(z, 0.0));
        FrameDerivatives<double> d = frame_derivatives(f);
        double h = 1e-6;
        Frame<double> fp = map_point(Cxd(z + h, 0.0));
        Frame<double> fm = map_point(Cxd(z - h, 0.0));
        Cxd zp_fd = (fp.zeta - fm.zeta) / (2 * h);
        Cxd sp_fd = (fp.sigma - fm.sigma) / (2 * h);
        CHECK(abs(d.zeta_prime - zp_fd) < 1e-8 * std::max(1.0, abs(zp_fd)));
        CHECK(abs(d.sigma_prime - sp_fd) < 1e-8 * std::max(1.0, abs(sp_fd)));
    }
    // near-turning derivative branch agrees with finite differences too
    Frame<double> f = map_point(Cxd(1.03, 0.0));
    CHECK(f.near_turning);
    FrameDerivatives<double> d = frame_derivatives(f);
    double h = 1e-6;
    Cxd sp_fd = (map_point(Cxd(1.03 + h, 0.0)).sigma - map_point(Cxd(1.03 - h, 0.0)).sigma) / (2 * h);
    CHECK(abs(d.sigma_prime - sp_fd) < 1e-8);
}
