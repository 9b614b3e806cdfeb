#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ubim/airy.hpp"
#include "ubim/branch_maps.hpp"
#include "ubim/kappa_derive.hpp"
#include "ubim/zeros.hpp"

using namespace ubim;

namespace {
const PrecisionContext ctx40{};

BigReal phase_residual(double nu, int m, ZeroFamily fam, int digits) {
    PrecisionScope scope(static_cast<unsigned>(digits) + 10);
    BigReal kappa = kappa0_hp(nu, m, fam, digits);
    BigReal alpha =
        airy_neg_zero_hp(fam == ZeroFamily::K ? AiryKind::Ai : AiryKind::Bi, m);
    BigReal rhs = BigReal(2) / (3 * BigReal(nu)) * pow(abs(alpha), BigReal(3) / 2);
    BigReal u = sqrt((1 - kappa) * (1 + kappa));
    return abs(log((1 + u) / kappa) - u - rhs);
}
} // namespace

TEST_CASE("leading coefficient solves the phase equation") {
    for (double nu : {5.0, 10.0, 100.0})
        for (int m : {1, 7, 40, 100}) {
            BigReal res = phase_residual(nu, m, ZeroFamily::K, 50);
            CHECK(static_cast<double>(res) < 1e-40);
        }
    CHECK(static_cast<double>(phase_residual(10.0, 3, ZeroFamily::L, 50)) < 1e-40);
    // the double interface stays inside the documented budget
    double k = kappa0(10.0, 20, ZeroFamily::K);
    CHECK(k == doctest::Approx(1.486085697253845e-03).epsilon(1e-13));
}

TEST_CASE("coefficient limits at the turning point") {
    CHECK(std::abs(kappa_hat(1, 1.0) + 1.0 / 70.0) < 1e-12);
    CHECK(std::abs(kappa_hat(2, 1.0) + 3781.0 / 3185000.0) < 1e-12);
    // small-z slopes
    CHECK(kappa_hat(1, 1e-4) / 1e-4 == doctest::Approx(-1.0 / 12.0).epsilon(2e-2));
    CHECK(kappa_hat(2, 1e-4) / 1e-4 == doctest::Approx(-1.0 / 1440.0).epsilon(0.3));
}

TEST_CASE("closed-form branch is continuous across the Taylor seam") {
    for (int s : {1, 2})
        CHECK(std::abs(kappa_hat(s, 0.9 - 1e-9) - kappa_hat(s, 0.9 + 1e-9)) < 1e-10);
}

TEST_CASE("derived coefficients reproduce the closed forms") {
    PrecisionScope scope(70);
    for (double z0 : {0.05, 0.4, 0.85}) {
        BigReal z(z0);
        KappaDerived kd = derive_kappa(z, 4, 60);
        const KappaTable& tab = builtin_kappa_table();
        for (int s : {1, 2}) {
            BigReal ref = kappa_hat_hp(s, z, tab);
            CHECK(static_cast<double>(abs(kd.kappa[static_cast<std::size_t>(s)] - ref)) <
                  1e-40 * static_cast<double>(abs(ref)));
        }
        // first correction of the Airy argument, closed form
        Frame<BigReal> f = map_point(Cx<BigReal>(z, BigReal(0)));
        BigReal sg = f.sigma.re, zt = f.zeta.re;
        BigReal ref1 = (10 * sg * sg * sg + 6 * sg * zt - 5) / (48 * zt * zt);
        CHECK(static_cast<double>(abs(kd.upsilon[1] - ref1)) <
              1e-40 * static_cast<double>(abs(ref1)));
    }
}

TEST_CASE("derived orders do not depend on the requested depth") {
    PrecisionScope scope(60);
    BigReal z(BigReal(3) / 10);
    KappaDerived lo = derive_kappa(z, 2, 50);
    KappaDerived hi = derive_kappa(z, 4, 50);
    for (int s : {1, 2})
        CHECK(static_cast<double>(abs(lo.kappa[static_cast<std::size_t>(s)] -
                                      hi.kappa[static_cast<std::size_t>(s)])) < 1e-45);
}

TEST_CASE("printed fourth-order zero and its measured accuracy") {
    KZeroQuery q{10.0, 20, ZeroFamily::K, 4, nullptr};
    ZeroResult r = k_zero(q);
    // the reference digits are truncated, not rounded
    CHECK(r.x - 0.0014850135 >= 0);
    CHECK(r.x - 0.0014850135 < 1e-10);
    CHECK(r.t == doctest::Approx(10.0 * r.x));
    CHECK(r.terms_used == 5);

    PrecisionScope scope(60);
    BigReal t = k_zero_hp(q, 50);
    BigReal d = delta_K_hp(10.0, t, ctx40);
    BigReal printed("8.18131294761e-14");
    CHECK(static_cast<double>(abs(d - printed) / printed) < 5e-12);
}

TEST_CASE("truncation order improves the zero estimates") {
    for (int m : {1, 5, 20}) {
        double prev = 0.0;
        for (int s = 0; s <= 2; ++s) {
            KZeroQuery q{10.0, m, ZeroFamily::K, s, nullptr};
            ZeroResult r = k_zero(q, ctx40);
            if (s > 0) CHECK(r.estimated_relative_error * 3.0 < prev);
            prev = r.estimated_relative_error;
        }
    }
    // the derived orders continue the decline
    double d3 = k_zero(KZeroQuery{10.0, 20, ZeroFamily::K, 3, nullptr}, ctx40)
                    .estimated_relative_error;
    double d4 = k_zero(KZeroQuery{10.0, 20, ZeroFamily::K, 4, nullptr}, ctx40)
                    .estimated_relative_error;
    CHECK(d3 < 1e-11);
    CHECK(d4 < 1e-13);
    CHECK(d4 * 3.0 < d3);
}

TEST_CASE("estimator half-width brackets the true zero") {
    for (int m : {1, 20}) {
        KZeroQuery q{10.0, m, ZeroFamily::K, 2, nullptr};
        ZeroResult r = k_zero(q, ctx40);
        PrecisionScope scope(60);
        BigReal t = k_zero_hp(q, 50);
        BigReal w = BigReal(10.0 * r.estimated_relative_error);
        BigReal klo = k_iv(10.0, t * (1 - w), ctx40);
        BigReal khi = k_iv(10.0, t * (1 + w), ctx40);
        CHECK(klo * khi < 0);
    }
}

TEST_CASE("the two zero families interlace") {
    std::vector<double> kx, lx;
    for (int m = 1; m <= 3; ++m) {
        kx.push_back(k_zero(KZeroQuery{10.0, m, ZeroFamily::K, 2, nullptr}).x);
        lx.push_back(k_zero(KZeroQuery{10.0, m, ZeroFamily::L, 2, nullptr}).x);
    }
    CHECK(lx[0] > kx[0]);
    CHECK(kx[0] > lx[1]);
    CHECK(lx[1] > kx[1]);
    CHECK(kx[1] > lx[2]);
    CHECK(lx[2] > kx[2]);
}

TEST_CASE("companion-family estimator") {
    ZeroResult r = k_zero(KZeroQuery{10.0, 3, ZeroFamily::L, 2, nullptr}, ctx40);
    CHECK(r.estimated_relative_error < 1e-7);
    CHECK(r.estimated_relative_error > 0);
}

TEST_CASE("zeros decrease with the index") {
    double prev = 1e300;
    for (int m = 1; m <= 12; ++m) {
        double x = k_zero(KZeroQuery{10.0, m, ZeroFamily::K, 2, nullptr}).x;
        CHECK(x > 0);
        CHECK(x < prev);
        prev = x;
    }
}

TEST_CASE("figure rows carry the measured accuracy") {
    auto rows = figure_data(10.0, 1, 5, ZeroFamily::K, 2, ctx40);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].m == static_cast<int>(i) + 1);
        CHECK(rows[i].log10_delta <= -8.0);
        if (i > 0) CHECK(rows[i].zero_x < rows[i - 1].zero_x);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(k_zero(KZeroQuery{-1.0, 1, ZeroFamily::K, 2, nullptr}),
                    std::domain_error);
    CHECK_THROWS_AS(k_zero(KZeroQuery{10.0, 0, ZeroFamily::K, 2, nullptr}),
                    std::domain_error);
    CHECK_THROWS_AS(k_zero(KZeroQuery{10.0, 1, ZeroFamily::K, 5, nullptr}),
                    std::domain_error);
    CHECK_THROWS_AS(kappa0(10.0, 0, ZeroFamily::K), std::domain_error);
    CHECK_THROWS_AS(derive_kappa(BigReal(2), 4, 50), std::domain_error);
    CHECK_THROWS_AS(derive_kappa(BigReal(1) / 2, 5, 50), std::domain_error);
}
