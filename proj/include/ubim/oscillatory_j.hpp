#ifndef UBIM_OSCILLATORY_J_HPP
#define UBIM_OSCILLATORY_J_HPP

#include "ubim/oracle.hpp"
#include "ubim/scaled.hpp"

namespace ubim {

// J_{i nu}(nu x) on the positive real axis: modulus/phase form and the
// uniform zero expansions with their first-order relative-error estimator.

struct ZeroQuery {
    double nu = 0.0;
    long long m = 0;       // zero index, any sign
    double r = 0.0;        // rotation parameter in [0, 1/2]
    int truncation = 4;    // highest 1/nu^{2s} term, s_max <= 4
};

struct ZeroResult {
    double t = 0.0;        // zero location in the argument of J (= nu x)
    double x = 0.0;        // same zero on the x scale (= t / nu)
    double log_t = 0.0;    // natural log of t; survives underflow of t itself
    double estimated_relative_error = -1.0; // -1 when no oracle was consulted
    int terms_used = 0;
};

enum class YZeroKind { ReY, ImY };

// modulus R(nu, x): mantissa carries everything except the e^{nu pi/2} scale
ScaledValue j_modulus(double nu, double x, int n_terms);

// continuous-branch phase Theta(nu, x), not reduced mod 2 pi
double j_phase(double nu, double x, int n_terms);

// zero approximant t = nu * sum q_s(p0)/nu^{2s}, evaluated internally in
// extended precision (digits controls the working precision of the sum)
BigReal j_zero_hp(const ZeroQuery& q, int digits = 50);
ZeroResult j_zero(const ZeroQuery& q);                              // no oracle
ZeroResult j_zero(const ZeroQuery& q, const PrecisionContext& ctx); // with estimator

// Delta^(0) = Re J_{i nu}(t) / (t Re J'_{i nu}(t))
BigReal delta0_hp(double nu, const BigReal& t, const PrecisionContext& ctx);
double delta0(double nu, double t, const PrecisionContext& ctx = PrecisionContext{});

// r-value whose J-zero family coincides with the requested Y-zero family
double y_zero_map(YZeroKind kind);

// log10 relative error of the modulus / phase expansions against the oracle
double omega1(double nu, double x, int n_terms, const PrecisionContext& ctx);
double omega2(double nu, double x, int n_terms, const PrecisionContext& ctx);

} // namespace ubim

#endif
