#ifndef UBIM_LG_EXPANSIONS_HPP
#define UBIM_LG_EXPANSIONS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ubim/branch_maps.hpp"
#include "ubim/coeff_engine.hpp"
#include "ubim/scaled.hpp"

namespace ubim {

enum class OrderSign { plus, minus };

namespace detail {

inline const double kLgPi = 3.14159265358979323846;

struct LgParts {
    Cxd beta_half; // (z^2-1)^{-1/4}
    Cxd exponent;  // oscillatory part of +-nu xi, scale split off by the caller
    Cxd series;    // exp(sum E_s) re-expanded and truncated at nu^{-(n-1)}
    double scale;  // real part of +-nu xi
};

inline LgParts lg_parts(double nu, const Cxd& z, int n, double sign,
                        double exclusion) {
    if (nu <= 0.0) throw std::domain_error("lg: nu > 0 required");
    if (n < 2 || n > default_table().max_order + 1)
        throw std::domain_error("lg: n outside coefficient table order");
    if (abs(z - Cxd(1.0)) < exclusion)
        throw std::domain_error("lg: z too close to the turning point");
    Frame<double> f = map_point(z, 1e-12); // closed-form branch everywhere

    // coefficients of the exponentiated correction series, truncated at the
    // same order as the exponent it came from
    std::vector<Cxd> e(static_cast<std::size_t>(n), Cxd(0.0));
    for (int s = 1; s <= n - 1; ++s) {
        double sg = (sign < 0 && s % 2 != 0) ? -1.0 : 1.0;
        e[static_cast<std::size_t>(s)] = default_table().E_s(s).eval(f.beta) * sg;
    }
    std::vector<Cxd> c(static_cast<std::size_t>(n), Cxd(0.0));
    c[0] = Cxd(1.0);
    for (int k = 1; k <= n - 1; ++k) {
        Cxd acc(0.0);
        for (int j = 1; j <= k; ++j)
            acc = acc + Cxd(static_cast<double>(j)) * e[static_cast<std::size_t>(j)] *
                            c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = acc / Cxd(static_cast<double>(k));
    }
    Cxd sum(0.0);
    double p = 1.0;
    for (int k = 0; k <= n - 1; ++k) {
        sum += c[static_cast<std::size_t>(k)] * p;
        p /= nu;
    }

    LgParts out;
    out.beta_half = sqrt(f.beta);
    out.series = sum;
    out.scale = sign * nu * f.xi.re;
    out.exponent = Cxd(0.0, sign * nu * f.xi.im);
    return out;
}

} // namespace detail

// K_{i nu}(nu z), error factor omitted.  On the oscillatory cut (0,1) the
// function is the sum of the wave and its conjugate, so twice the real part.
inline ScaledValue lg_K(double nu, const Cxd& z, int n, double exclusion = 0.25) {
    detail::LgParts p = detail::lg_parts(nu, z, n, -1.0, exclusion);
    ScaledValue r;
    r.mantissa = std::sqrt(detail::kLgPi / (2.0 * nu)) * p.beta_half * exp(p.exponent) * p.series;
    if (z.im == 0.0 && z.re < 1.0) r.mantissa = Cxd(2.0 * r.mantissa.re);
    r.log_scale = p.scale - detail::kLgPi * nu / 2.0;
    r.normalize();
    return r;
}

// I_{+-i nu}(nu z), error factors omitted
inline ScaledValue lg_I(double nu, const Cxd& z, int n, OrderSign order,
                        double exclusion = 0.25) {
    double sign = order == OrderSign::plus ? 1.0 : -1.0;
    detail::LgParts p = detail::lg_parts(nu, z, n, sign, exclusion);
    ScaledValue r;
    Cxd pre = Cxd(1.0 / std::sqrt(2.0 * detail::kLgPi * nu));
    if (order == OrderSign::minus) pre = pre * Cxd(0.0, 1.0);
    r.mantissa = pre * p.beta_half * exp(p.exponent) * p.series;
    r.log_scale = p.scale + detail::kLgPi * nu / 2.0;
    r.normalize();
    return r;
}

} // namespace ubim

#endif
