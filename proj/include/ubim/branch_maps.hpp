#ifndef UBIM_BRANCH_MAPS_HPP
#define UBIM_BRANCH_MAPS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ubim/complex.hpp"
#include "ubim/turning_tables.hpp"

namespace ubim {

template <class Real>
struct Frame {
    Cx<Real> z, xi, zeta, beta, sigma;
    bool near_turning = false;
};

using TurningPointFrame = Frame<double>;

namespace detail {

template <class Real>
const std::vector<Real>& ttab_zeta();
template <class Real>
const std::vector<Real>& ttab_sigma();

template <>
inline const std::vector<double>& ttab_zeta<double>() { return turning_tables().zeta_d; }
template <>
inline const std::vector<double>& ttab_sigma<double>() { return turning_tables().sigma_d; }
template <>
inline const std::vector<BigReal>& ttab_zeta<BigReal>() { return turning_tables().zeta; }
template <>
inline const std::vector<BigReal>& ttab_sigma<BigReal>() { return turning_tables().sigma; }

template <class Real>
Real real_eps() {
    return std::numeric_limits<Real>::epsilon();
}

} // namespace detail

// zeta from xi on the closed upper half region: arg zeta = (2/3)*theta with
// theta = Arg xi lifted to [0, 3*pi/2) so that the cut (0,1) maps to
// negative real zeta.
template <class Real>
Cx<Real> zeta_from_xi_upper(const Cx<Real>& xi) {
    using std::atan2; using std::pow;
    Real theta = arg(xi);
    const Real pi = Real(4) * Real(atan2(Real(1), Real(1)));
    // For Im z >= 0, (3/2) arg zeta lies in [0, 3pi/2]; principal Arg xi wraps
    // the (pi, 3pi/2] part into (-pi, -pi/2].  Values in (-pi/2, 0) are only
    // rounding dust from real xi > 0 and must not be lifted.
    if (theta < -pi / Real(2) + Real(1) / Real(1000000000)) theta += Real(2) * pi;
    Real mod = Real(pow(Real(3) / Real(2) * abs(xi), Real(2) / Real(3)));
    return polar(mod, Real(2) / Real(3) * theta);
}

template <class Real>
Frame<Real> map_point(const Cx<Real>& z, const Real& taylor_radius = Real(1) / Real(10)) {
    using std::sqrt;
    if (z.re == Real(0) && z.im == Real(0))
        throw std::domain_error("map_point: z = 0");
    if (z.im == Real(0) && z.re < Real(0))
        throw std::domain_error("map_point: negative real z unsupported");

    if (z.im < Real(0)) { // Schwarz reflection: all maps are real on the reals
        Frame<Real> f = map_point(conj(z), taylor_radius);
        return Frame<Real>{z, conj(f.xi), conj(f.zeta), conj(f.beta), conj(f.sigma),
                           f.near_turning};
    }

    Frame<Real> f;
    f.z = z;
    Cx<Real> w = z - Real(1);

    if (abs(w) < taylor_radius) {
        f.near_turning = true;
        const auto& zc = detail::ttab_zeta<Real>();
        const auto& sc = detail::ttab_sigma<Real>();
        Cx<Real> zeta(Real(0)), sigma(Real(0));
        for (std::size_t i = zc.size(); i-- > 0;) zeta = zeta * w + Cx<Real>(zc[i]);
        for (std::size_t i = sc.size(); i-- > 0;) sigma = sigma * w + Cx<Real>(sc[i]);
        f.zeta = zeta;
        f.sigma = sigma;
        Cx<Real> zeta_half = sqrt(zeta); // arg zeta in [0, pi]: principal root continuous
        f.xi = Real(2) / Real(3) * zeta * zeta_half;
        if (abs(zeta_half) == Real(0))
            f.beta = Cx<Real>(Real(1)) / (sqrt(w) * sqrt(z + Real(1)));
        else
            f.beta = sigma / zeta_half;
        return f;
    }

    Cx<Real> s = sqrt(w) * sqrt(z + Real(1)); // (z^2-1)^{1/2}, upper branch on the cut
    f.beta = Cx<Real>(Real(1)) / s;
    Cx<Real> i1(Real(0), Real(1));
    f.xi = s + i1 * log((Cx<Real>(Real(1)) + i1 * s) / z);
    f.zeta = zeta_from_xi_upper(f.xi);
    // zeta^{1/2} from the same lifted angle: on the cut the rounding dust in
    // Im zeta would push a principal sqrt onto the lower branch
    using std::atan2; using std::pow;
    Real theta = arg(f.xi);
    const Real pi = Real(4) * Real(atan2(Real(1), Real(1)));
    if (theta < -pi / Real(2) + Real(1) / Real(1000000000)) theta += Real(2) * pi;
    Real mod = Real(pow(Real(3) / Real(2) * abs(f.xi), Real(2) / Real(3)));
    Cx<Real> zeta_half = polar(Real(sqrt(mod)), theta / Real(3));
    f.sigma = zeta_half * f.beta;
    return f;
}

template <class Real>
Real rho(const Real& x) {
    using std::sqrt; using std::log;
    if (!(x > Real(0))) throw std::domain_error("rho: requires x > 0");
    Real r = Real(sqrt(x * x + Real(1)));
    return r - Real(log((Real(1) + r) / x));
}

// rho'(x) = sqrt(x^2+1)/x
template <class Real>
Real rho_prime(const Real& x) {
    using std::sqrt;
    return Real(sqrt(x * x + Real(1))) / x;
}

// Inverse of rho on (0, infinity).  Works in u = ln x below M = -30 so that
// extreme negative phases stay representable.
template <class Real>
Real rho_inverse(const Real& M) {
    using std::exp; using std::log; using std::sqrt; using std::abs;
    const Real eps = detail::real_eps<Real>();

    if (M < Real(-30)) {
        // rho(e^u) = sqrt(e^{2u}+1) - log(1+sqrt(e^{2u}+1)) + u; Newton in u
        Real u = M - Real(1) + Real(log(Real(2)));
        for (int it = 0; it < 200; ++it) {
            Real x2 = Real(exp(Real(2) * u));
            Real r = Real(sqrt(x2 + Real(1)));
            Real fu = r - Real(log(Real(1) + r)) + u - M;
            Real du = fu / r; // d rho / du = sqrt(x^2+1)
            u -= du;
            if (abs(du) < Real(64) * eps * (Real(1) + abs(u))) break;
        }
        return Real(exp(u));
    }

    Real x;
    if (M > Real(3)) {
        x = M + Real(1) / (Real(2) * M) - Real(7) / (Real(24) * M * M * M);
    } else {
        x = Real(2) * Real(exp(M - Real(1)));
        if (x > Real(1) / Real(2)) x = Real(2) / Real(3); // near the rho = 0 point
    }
    // bracket then Newton with bisection fallback
    Real lo = x, hi = x;
    for (int it = 0; it < 400 && rho(lo) > M; ++it) lo /= Real(2);
    for (int it = 0; it < 400 && rho(hi) < M; ++it) hi *= Real(2);
    for (int it = 0; it < 500; ++it) {
        Real fx = rho(x) - M;
        if (fx > Real(0)) hi = x; else lo = x;
        Real step = fx / rho_prime(x);
        Real next = x - step;
        if (!(next > lo && next < hi)) next = (lo + hi) / Real(2);
        Real move = abs(next - x);
        x = next;
        if (move < Real(8) * eps * abs(x)) break;
    }
    return x;
}

// tau = artanh(u)/u with u = sqrt(1-x^2)
template <class Real>
Real tau(const Real& x) {
    using std::sqrt; using std::log;
    if (!(x > Real(0)) || !(x < Real(1))) throw std::domain_error("tau: requires 0 < x < 1");
    Real u = Real(sqrt((Real(1) - x) * (Real(1) + x)));
    if (u < Real(1) / Real(1000)) {
        Real u2 = u * u, acc = Real(0);
        for (int k = 7; k >= 1; --k) acc = acc * u2 + Real(1) / Real(2 * k + 1);
        return Real(1) + u2 * acc;
    }
    return Real(log((Real(1) + u) / x)) / u;
}

template <class Real>
struct FrameDerivatives {
    Cx<Real> zeta_prime, sigma_prime;
};

template <class Real>
FrameDerivatives<Real> frame_derivatives(const Frame<Real>& f) {
    if (abs(f.sigma) == Real(0))
        throw std::domain_error("frame_derivatives: sigma = 0");
    FrameDerivatives<Real> d;
    d.zeta_prime = Cx<Real>(Real(1)) / (f.z * f.sigma);
    if (f.near_turning) {
        const auto& sc = detail::ttab_sigma<Real>();
        Cx<Real> w = f.z - Real(1);
        Cx<Real> sp(Real(0));
        for (std::size_t k = sc.size(); k-- > 1;)
            sp = sp * w + Cx<Real>(sc[k]) * static_cast<int>(k);
        d.sigma_prime = sp;
    } else {
        Cx<Real> z2 = f.z * f.z;
        d.sigma_prime = (Cx<Real>(Real(1)) - Real(2) * z2 * f.sigma * f.sigma * f.sigma) /
                        (Real(2) * f.z * f.zeta);
    }
    return d;
}

} // namespace ubim

#endif
