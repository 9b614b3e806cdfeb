#ifndef UBIM_AIRY_HPP
#define UBIM_AIRY_HPP

#include "ubim/branch_maps.hpp"
#include "ubim/precision.hpp"
#include "ubim/scaled.hpp"

namespace ubim {

struct AiryValue {
    Cxd argument;
    Cxd ai, ai_prime, bi, bi_prime;
};

// Scaled variant: each component = mantissa * e^{log_scale}, immune to the
// e^{±(2/3)|t|^{3/2}} overflow beyond |t| ~ 700^{2/3}.
struct AiryScaled {
    Cxd argument;
    ScaledValue ai, ai_prime, bi, bi_prime;
};

enum class AiryKind { Ai, Bi };

AiryScaled airy_eval_scaled(const Cxd& t);
AiryValue airy_eval(const Cxd& t);

// Ai_l(t) = Ai(t e^{-2 pi i l/3}); the prime variant is d/dt of Ai_l, i.e.
// the chain-rule rotation factor is included.
ScaledValue airy_rotated(int l, const Cxd& t);
ScaledValue airy_rotated_prime(int l, const Cxd& t);

// m-th negative real zero a_m of Ai (or b_m of Bi), m >= 1.
double airy_neg_zero(AiryKind kind, int m);

// Same zero at the current default mpfr precision.
BigReal airy_neg_zero_hp(AiryKind kind, int m);

// Maclaurin evaluation on the real axis at the current default precision;
// internally raises the working precision to absorb the oscillatory-series
// cancellation for t < 0.
void airy_series_hp(const BigReal& t, BigReal& ai, BigReal& ai_prime);
void airy_series_hp_bi(const BigReal& t, BigReal& bi, BigReal& bi_prime);

enum class AiryExpWhich { Ai0, Ai0p, Ai1, Ai1p, Aim1, Aim1p };

// Truncated exponential-form expansion of Ai_l(nu^{2/3} zeta) or its
// derivative, n terms, without the error factor.
ScaledValue ai_expform(int n, double nu, const TurningPointFrame& frame,
                       AiryExpWhich which);

} // namespace ubim

#endif
