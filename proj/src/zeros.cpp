#include "ubim/zeros.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "ubim/airy.hpp"
#include "ubim/branch_maps.hpp"
#include "ubim/kappa_derive.hpp"

namespace ubim {

namespace {

// phase integral R(kappa) = ln((1+u)/kappa) - u, u = sqrt(1-kappa^2);
// strictly decreasing from +inf (kappa -> 0) to 0 (kappa -> 1)
BigReal phase_R(const BigReal& kappa) {
    BigReal u = sqrt((1 - kappa) * (1 + kappa));
    return log((1 + u) / kappa) - u;
}

void check_zero_query(const KZeroQuery& q) {
    if (!(q.nu > 0)) throw std::domain_error("k_zero: nu must be positive");
    if (q.m < 1) throw std::domain_error("k_zero: m must be >= 1");
    if (q.s_max < 0 || q.s_max > 4)
        throw std::domain_error("k_zero: s_max must lie in 0..4");
}

BigReal zero_x_scale(const KZeroQuery& q, int digits) {
    check_zero_query(q);
    PrecisionScope scope(static_cast<unsigned>(digits) + 10);
    BigReal kappa = kappa0_hp(q.nu, q.m, q.family, digits + 10);
    BigReal nuw(q.nu);
    BigReal nu2 = nuw * nuw;
    const KappaTable& table = q.table ? *q.table : builtin_kappa_table();

    // orders missing from the table come from the on-the-fly derivation
    KappaDerived derived;
    bool have_derived = false;
    for (int s = 1; s <= q.s_max; ++s)
        if (!table.has(s)) {
            // the closed-form frame loses digits near the turning point, so
            // pad the derivation budget by the zeta cancellation there
            int extra = 0;
            BigReal gap = 1 - kappa;
            if (gap < BigReal(1) / 4)
                extra = static_cast<int>(-4 * static_cast<double>(log10(gap))) + 10;
            derived = derive_kappa(kappa, q.s_max, digits + 10 + extra);
            have_derived = true;
            break;
        }

    BigReal acc = kappa;
    BigReal scale(1);
    for (int s = 1; s <= q.s_max; ++s) {
        scale /= nu2;
        BigReal coef = table.has(s) ? kappa_hat_hp(s, kappa, table)
                                    : derived.kappa[static_cast<std::size_t>(s)];
        acc += coef * scale;
    }
    (void)have_derived;
    return acc;
}

// Delta for the companion function, via L' = c (Re I_{-1+i nu} + Re I_{1+i nu})
BigReal delta_L_hp(double nu, const BigReal& t, const PrecisionContext& ctx) {
    PrecisionContext inner = ctx;
    inner.digits = ctx.digits + static_cast<int>(0.683 * nu) + 10;
    PrecisionScope scope(static_cast<unsigned>(inner.digits) + 10);
    BigReal pi = boost::math::constants::pi<BigReal>();
    BigReal c = pi / (2 * sinh(BigReal(nu) * pi));
    BigReal L = 2 * c * i_shift_iv(nu, t, 0, inner).re;
    BigReal Lp = c * (i_shift_iv(nu, t, -1, inner).re + i_shift_iv(nu, t, 1, inner).re);
    BigReal denom = t * Lp;
    if (abs(denom) < BigReal(1e-280) * (1 + abs(L)))
        throw std::domain_error("delta_L: derivative scale degenerate");
    return L / denom;
}

} // namespace

BigReal kappa0_hp(double nu, int m, ZeroFamily family, int digits) {
    if (!(nu > 0)) throw std::domain_error("kappa0: nu must be positive");
    if (m < 1) throw std::domain_error("kappa0: m must be >= 1");
    PrecisionScope scope(static_cast<unsigned>(digits) + 10);
    BigReal alpha =
        airy_neg_zero_hp(family == ZeroFamily::K ? AiryKind::Ai : AiryKind::Bi, m);
    BigReal rhs = BigReal(2) / (3 * BigReal(nu)) * pow(abs(alpha), BigReal(3) / 2);

    // seed from the two ends of the monotone profile
    BigReal kappa;
    if (rhs >= 2) {
        kappa = 2 * exp(-1 - rhs);
    } else {
        BigReal u = pow(3 * rhs, BigReal(1) / 3);
        kappa = (u < BigReal(99) / 100) ? BigReal(sqrt((1 - u) * (1 + u)))
                                        : BigReal(1) / 10;
    }

    // bracket, then safeguarded Newton with R'(kappa) = -u/kappa
    BigReal lo = kappa, hi = kappa;
    while (!(phase_R(lo) > rhs)) lo /= 2;
    while (!(phase_R(hi) < rhs)) hi = (1 + hi) / 2;
    BigReal tol = pow(BigReal(10), -(digits + 2));
    for (int it = 0; it < 40 * (digits / 10 + 2); ++it) {
        BigReal u = sqrt((1 - kappa) * (1 + kappa));
        BigReal f = phase_R(kappa) - rhs;
        if (f > 0) lo = kappa; else hi = kappa;
        BigReal step = f * kappa / u;
        BigReal next = kappa + step;
        if (!(next > lo) || !(next < hi)) next = (lo + hi) / 2;
        if (abs(next - kappa) <= tol * kappa) return next;
        kappa = next;
    }
    throw std::runtime_error("kappa0: Newton iteration failed to settle");
}

double kappa0(double nu, int m, ZeroFamily family) {
    return static_cast<double>(kappa0_hp(nu, m, family, 30));
}

BigReal k_zero_hp(const KZeroQuery& q, int digits) {
    PrecisionScope scope(static_cast<unsigned>(digits) + 10);
    return BigReal(q.nu) * zero_x_scale(q, digits);
}

ZeroResult k_zero(const KZeroQuery& q) {
    const int digits = 50;
    PrecisionScope scope(digits + 10);
    BigReal x = zero_x_scale(q, digits);
    BigReal t = BigReal(q.nu) * x;
    ZeroResult r;
    r.t = static_cast<double>(t);
    r.x = static_cast<double>(x);
    r.log_t = static_cast<double>(log(t));
    r.terms_used = q.s_max + 1;
    return r;
}

ZeroResult k_zero(const KZeroQuery& q, const PrecisionContext& ctx) {
    ZeroResult r = k_zero(q);
    const int digits = 50;
    PrecisionScope scope(digits + 10);
    BigReal t = BigReal(q.nu) * zero_x_scale(q, digits);
    BigReal d = (q.family == ZeroFamily::K) ? delta_K_hp(q.nu, t, ctx)
                                            : delta_L_hp(q.nu, t, ctx);
    r.estimated_relative_error = std::abs(static_cast<double>(d));
    return r;
}

BigReal delta_K_hp(double nu, const BigReal& t, const PrecisionContext& ctx) {
    // the quadrature integrand spreads over [0, ln(2/t)], which stops being
    // affordable for the very small zeros; the ratio is then taken through the
    // ascending series, where the -pi/sinh(nu pi) prefactor of K cancels
    if (t < BigReal(1) / 100000000) {
        PrecisionContext inner = ctx;
        inner.digits = ctx.digits + static_cast<int>(0.683 * nu) + 10;
        PrecisionScope scope(static_cast<unsigned>(inner.digits) + 10);
        BigReal K = i_shift_iv(nu, t, 0, inner).im;
        BigReal Kp =
            (i_shift_iv(nu, t, -1, inner).im + i_shift_iv(nu, t, 1, inner).im) / 2;
        BigReal denom = t * Kp;
        if (abs(denom) < BigReal(1e-280) * (1 + abs(K)))
            throw std::domain_error("delta_K: derivative scale degenerate");
        return BigReal(K / denom);
    }
    BigReal K = k_iv(nu, t, ctx);
    BigReal Kp = k_1piv_re(nu, t, ctx);
    BigReal denom = t * Kp;
    if (abs(denom) < BigReal(1e-280) * (1 + abs(K)))
        throw std::domain_error("delta_K: derivative scale degenerate");
    return -K / denom;
}

double delta_K(double nu, double t, const PrecisionContext& ctx) {
    PrecisionScope scope(static_cast<unsigned>(ctx.digits) + 10);
    return static_cast<double>(delta_K_hp(nu, BigReal(t), ctx));
}

std::vector<FigureRow> figure_data(double nu, int m_lo, int m_hi, ZeroFamily family,
                                   int s_max, const PrecisionContext& ctx,
                                   const KappaTable* table) {
    if (m_lo < 1 || m_hi < m_lo) throw std::domain_error("figure_data: bad m range");
    std::vector<FigureRow> rows;
    rows.reserve(static_cast<std::size_t>(m_hi - m_lo + 1));
    for (int m = m_lo; m <= m_hi; ++m) {
        KZeroQuery q{nu, m, family, s_max, table};
        const int digits = 50;
        PrecisionScope scope(digits + 10);
        BigReal x = zero_x_scale(q, digits);
        BigReal t = BigReal(nu) * x;
        BigReal d = (family == ZeroFamily::K) ? delta_K_hp(nu, t, ctx)
                                              : delta_L_hp(nu, t, ctx);
        FigureRow row;
        row.m = m;
        row.zero_x = static_cast<double>(x);
        row.log10_delta = static_cast<double>(log10(abs(d)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace ubim
