#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "ubim/oracle.hpp"

using namespace ubim;

namespace {
const PrecisionContext ctx40{};

double dabs(const BigReal& v) { return std::abs(static_cast<double>(v)); }
double dabs(const BigCx& v) { return static_cast<double>(abs(v)); }

BigReal bpi() { return boost::math::constants::pi<BigReal>(); }
} // namespace

TEST_CASE("gamma: exact and identity checks") {
    PrecisionScope scope(50);
    BigCx one = gamma_complex(BigCx(BigReal(1), BigReal(0)), ctx40);
    CHECK(dabs(one - BigCx(BigReal(1), BigReal(0))) < 1e-37);

    BigCx half = gamma_complex(BigCx(BigReal(1) / 2, BigReal(0)), ctx40);
    CHECK(dabs(half.re - sqrt(bpi())) < 1e-36);
    CHECK(dabs(half.im) < 1e-37);

    // |Gamma(1+10i)|^2 = 10 pi / sinh(10 pi)
    BigCx g = gamma_complex(BigCx(BigReal(1), BigReal(10)), ctx40);
    BigReal lhs = norm(g);
    BigReal rhs = 10 * bpi() / sinh(10 * bpi());
    CHECK(dabs(lhs - rhs) < 1e-35 * static_cast<double>(rhs));

    BigCx w(BigReal(3), BigReal(7));
    BigCx r = gamma_complex(w + BigCx(BigReal(1), BigReal(0)), ctx40) -
              w * gamma_complex(w, ctx40);
    CHECK(dabs(r) < 1e-35 * dabs(gamma_complex(w, ctx40)));

    // reflection branch
    BigCx neg = gamma_complex(BigCx(BigReal(-3) / 2, BigReal(0)), ctx40);
    BigReal exact = 4 * sqrt(bpi()) / 3; // Gamma(-3/2)
    CHECK(dabs(neg.re - exact) < 1e-36);

    CHECK_THROWS_AS(gamma_complex(BigCx(BigReal(-2), BigReal(0)), ctx40), oracle_error);
}

TEST_CASE("j_iv: bridge to I and small-argument phase") {
    PrecisionScope scope(50);
    // J_{i nu}(nu x) = e^{nu pi/2} I_{i nu}(i nu x) at nu=10, x=1
    BigCx j = j_iv(10.0, BigReal(10), ctx40);
    BigCx i = i_iv(10.0, BigCx(BigReal(0), BigReal(10)), 1, ctx40);
    BigCx rhs = i * BigCx(exp(5 * bpi()), BigReal(0));
    CHECK(dabs(j - rhs) < 1e-34 * dabs(j));

    // arg J = nu ln(x/2) + nu - pi/4 + O(nu x^2) + O(1/nu)
    double nu = 10.0;
    BigReal t(BigReal(1) / 1000); // nu x = 1e-3
    BigCx jv = j_iv(nu, t, ctx40);
    double ph = std::atan2(static_cast<double>(jv.im), static_cast<double>(jv.re));
    double pred = nu * std::log(1e-4 / 2.0) + nu - 3.14159265358979323846 / 4.0;
    double diff = std::remainder(ph - pred, 2 * 3.14159265358979323846);
    CHECK(std::abs(diff) < 0.15);

    CHECK_THROWS_AS(j_iv(10.0, BigReal(-1), ctx40), oracle_error);
    CHECK_THROWS_AS(j_iv(10.0, BigReal(1000), ctx40), oracle_error);
    PrecisionContext bad;
    bad.digits = 20;
    CHECK_THROWS_AS(j_iv(10.0, BigReal(1), bad), oracle_error);
}

TEST_CASE("i_iv: small-argument limit and Wronskian") {
    PrecisionScope scope(50);
    double nu = 3.0;
    BigReal z = BigReal(1) / 100000;
    BigCx ip = i_iv(nu, BigCx(z, BigReal(0)), 1, ctx40);
    BigReal lg = nu * log(z / 2);
    BigCx lim = BigCx(cos(lg), sin(lg)) /
                gamma_complex(BigCx(BigReal(1), BigReal(nu)), ctx40);
    CHECK(dabs(ip - lim) < 1e-9 * dabs(ip)); // next term is (z/2)^2/(1+i nu)

    // z W{I_{i nu}, I_{-i nu}} = -2i sinh(nu pi)/pi, via a tiny-step derivative
    PrecisionScope scope2(60);
    double nuw = 5.0;
    BigReal h = pow(BigReal(10), -20);
    PrecisionContext hctx;
    hctx.digits = 60;
    auto W = [&](const BigReal& zz) -> BigCx {
        BigCx a = i_iv(nuw, BigCx(zz, BigReal(0)), 1, hctx);
        BigCx b = i_iv(nuw, BigCx(zz, BigReal(0)), -1, hctx);
        BigCx ap = (i_iv(nuw, BigCx(BigReal(zz + h), BigReal(0)), 1, hctx) -
                    i_iv(nuw, BigCx(BigReal(zz - h), BigReal(0)), 1, hctx)) /
                   BigReal(2 * h);
        BigCx bp = (i_iv(nuw, BigCx(BigReal(zz + h), BigReal(0)), -1, hctx) -
                    i_iv(nuw, BigCx(BigReal(zz - h), BigReal(0)), -1, hctx)) /
                   BigReal(2 * h);
        return a * bp - ap * b;
    };
    BigCx w2 = W(BigReal(2));
    BigCx expect = BigCx(BigReal(0), BigReal(-2 * sinh(5 * bpi()) / bpi())) / BigReal(2);
    CHECK(dabs(w2 - expect) < 1e-33 * dabs(expect));
    // z-independence of z*W
    BigCx w3 = W(BigReal(3));
    CHECK(dabs(w3 * BigReal(3) - w2 * BigReal(2)) < 1e-33 * dabs(w2 * BigReal(2)));
}

TEST_CASE("k_iv: cross-representation, realness, decay") {
    BigReal kq = k_iv(10.0, BigReal(5), ctx40);
    BigReal ks = k_iv_series(10.0, BigReal(5), ctx40);
    CHECK(dabs(kq - ks) < 1e-30 * dabs(kq));

    // grid cross-check
    for (double nu : {2.0, 7.0}) {
        for (double t : {1.0, 12.0}) {
            BigReal a = k_iv(nu, BigReal(t), ctx40);
            BigReal b = k_iv_series(nu, BigReal(t), ctx40);
            CHECK(dabs(a - b) < 1e-30 * dabs(a));
        }
    }

    // L built from I_{+-i nu} is real: imaginary residue of the sum
    {
        PrecisionScope scope(50);
        PrecisionContext hctx;
        hctx.digits = 50;
        BigCx s = i_iv(10.0, BigCx(BigReal(3), BigReal(0)), 1, hctx) +
                  i_iv(10.0, BigCx(BigReal(3), BigReal(0)), -1, hctx);
        CHECK(dabs(s.im) < 1e-32 * dabs(s.re));
        BigReal l = l_iv(10.0, BigReal(3), ctx40);
        BigReal expect = bpi() / (2 * sinh(10 * bpi())) * s.re;
        CHECK(dabs(l - expect) < 1e-30 * dabs(l));
    }

    // fixed-order large-t decay: K ~ sqrt(pi/2t) e^{-t}
    {
        PrecisionScope scope(50);
        BigReal k100 = k_iv(1.0, BigReal(100), ctx40);
        BigReal scaled = k100 * sqrt(2 * BigReal(100) / bpi()) * exp(BigReal(100));
        CHECK(std::abs(static_cast<double>(scaled) - 1.0) < 1e-2);
    }

    CHECK_THROWS_AS(k_iv(10.0, BigReal(0), ctx40), oracle_error);
}

TEST_CASE("precision monotonicity") {
    PrecisionContext c30;
    c30.digits = 30;
    PrecisionScope scope(50);
    BigReal a = k_iv(6.0, BigReal(4), c30);
    BigReal b = k_iv(6.0, BigReal(4), ctx40);
    CHECK(dabs(a - b) < 1e-25 * dabs(b));
    BigCx ja = j_iv(6.0, BigReal(4), c30);
    BigCx jb = j_iv(6.0, BigReal(4), ctx40);
    CHECK(dabs(ja - jb) < 1e-25 * dabs(jb));
}
