#include "ubim/oscillatory_j.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "ubim/branch_maps.hpp"
#include "ubim/coeff_engine.hpp"

namespace ubim {

namespace {

const double kPi = 3.14159265358979323846;

void check_modulus_args(double nu, double x, int n_terms, int parity_cap) {
    if (!(nu > 0.0)) throw std::domain_error("oscillatory_j: nu > 0 required");
    if (!(x > 0.0)) throw std::domain_error("oscillatory_j: x > 0 required");
    if (n_terms < 0 || n_terms > parity_cap)
        throw std::domain_error("oscillatory_j: n_terms outside coefficient table");
}

void check_query(const ZeroQuery& q) {
    if (!(q.nu > 0.0)) throw std::domain_error("j_zero: nu > 0 required");
    if (!(q.r >= 0.0 && q.r <= 0.5)) throw std::domain_error("j_zero: r in [0, 1/2]");
    if (q.truncation < 0 || q.truncation > 4)
        throw std::domain_error("j_zero: truncation in 0..4");
}

} // namespace

ScaledValue j_modulus(double nu, double x, int n_terms) {
    check_modulus_args(nu, x, n_terms, default_table().max_order / 2);
    double bh = 1.0 / std::sqrt(x * x + 1.0);
    double sum = 0.0;
    double p = 1.0 / (nu * nu);
    for (int s = 1; s <= n_terms; ++s) {
        sum += ehat_eval<double>(default_table(), 2 * s, bh) * p;
        p /= nu * nu;
    }
    ScaledValue r;
    r.mantissa = Cxd(std::exp(sum) * std::sqrt(bh / (2.0 * kPi * nu)));
    r.log_scale = nu * kPi / 2.0;
    return r;
}

double j_phase(double nu, double x, int n_terms) {
    check_modulus_args(nu, x, n_terms, (default_table().max_order - 1) / 2);
    double bh = 1.0 / std::sqrt(x * x + 1.0);
    double sum = 0.0;
    double p = 1.0 / nu;
    for (int s = 0; s <= n_terms; ++s) {
        sum += ehat_eval<double>(default_table(), 2 * s + 1, bh) * p;
        p /= nu * nu;
    }
    return nu * rho(x) - kPi / 4.0 + sum;
}

BigReal j_zero_hp(const ZeroQuery& q, int digits) {
    check_query(q);
    PrecisionScope scope(static_cast<unsigned>(digits) + 10);
    BigReal pi = boost::math::constants::pi<BigReal>();
    BigReal nu(q.nu);
    BigReal M = (BigReal(q.m) + BigReal(q.r) - BigReal(1) / 4) * pi / nu;
    BigReal p0 = rho_inverse<BigReal>(M);
    BigReal acc = p0;
    BigReal pw(1);
    for (int s = 1; s <= q.truncation; ++s) {
        pw *= nu * nu;
        acc += q_poly<BigReal>(s, p0) / pw;
    }
    return BigReal(nu * acc);
}

namespace {
ZeroResult fill_result(const ZeroQuery& q, const BigReal& t) {
    ZeroResult r;
    r.t = static_cast<double>(t);
    r.x = static_cast<double>(BigReal(t / q.nu));
    r.log_t = static_cast<double>(log(t));
    r.terms_used = q.truncation + 1;
    return r;
}
} // namespace

ZeroResult j_zero(const ZeroQuery& q) {
    return fill_result(q, j_zero_hp(q));
}

ZeroResult j_zero(const ZeroQuery& q, const PrecisionContext& ctx) {
    BigReal t = j_zero_hp(q, ctx.digits + 10);
    ZeroResult r = fill_result(q, t);
    r.estimated_relative_error = std::abs(static_cast<double>(delta0_hp(q.nu, t, ctx)));
    return r;
}

BigReal delta0_hp(double nu, const BigReal& t, const PrecisionContext& ctx) {
    if (!(t > 0)) throw std::domain_error("delta0: t > 0 required");
    PrecisionScope scope(static_cast<unsigned>(ctx.digits) + 10);
    BigCx J = j_iv(nu, t, ctx);
    BigCx J1 = j_1piv(nu, t, ctx);
    // Re J' = -Re J_{1+i nu} - (nu/t) Im J_{i nu}
    BigReal rejp = -J1.re - BigReal(nu) / t * J.im;
    BigReal denom = t * rejp;
    if (abs(denom) < pow(BigReal(10), -280) * (BigReal(1) + abs(J)))
        throw std::domain_error("delta0: derivative scale degenerate");
    return BigReal(J.re / denom);
}

double delta0(double nu, double t, const PrecisionContext& ctx) {
    return static_cast<double>(delta0_hp(nu, BigReal(t), ctx));
}

double y_zero_map(YZeroKind kind) {
    // zeros of Re Y_{i nu} fall on the Im J family and vice versa
    return kind == YZeroKind::ReY ? 0.5 : 0.0;
}

double omega1(double nu, double x, int n_terms, const PrecisionContext& ctx) {
    ScaledValue R = j_modulus(nu, x, n_terms);
    PrecisionScope scope(static_cast<unsigned>(ctx.digits) + 10);
    BigReal t = BigReal(nu) * BigReal(x);
    BigReal logJ = log(abs(j_iv(nu, t, ctx)));
    BigReal rel = abs(exp(BigReal(R.abs_log()) - logJ) - 1);
    return static_cast<double>(log10(rel));
}

double omega2(double nu, double x, int n_terms, const PrecisionContext& ctx) {
    double theta = j_phase(nu, x, n_terms);
    PrecisionScope scope(static_cast<unsigned>(ctx.digits) + 10);
    BigReal t = BigReal(nu) * BigReal(x);
    BigCx J = j_iv(nu, t, ctx);
    double ref = std::atan2(static_cast<double>(J.im), static_cast<double>(J.re));
    double diff = std::remainder(theta - ref, 2.0 * kPi);
    return std::log10(std::abs(diff));
}

} // namespace ubim
