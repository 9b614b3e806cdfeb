#ifndef UBIM_ORACLE_HPP
#define UBIM_ORACLE_HPP

#include <stdexcept>

#include "ubim/complex.hpp"
#include "ubim/precision.hpp"

namespace ubim {

using BigCx = Cx<BigReal>;

// Reference-value layer: ascending series and non-oscillating integral
// representations only, never the asymptotic modules it validates.

struct oracle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest |argument| the series oracles accept before the partial-sum growth
// would eat the precision budget.
double oracle_t_max(const PrecisionContext& ctx);

BigCx gamma_complex(const BigCx& w, const PrecisionContext& ctx);

// J_{i nu}(t), ascending series
BigCx j_iv(double nu, const BigReal& t, const PrecisionContext& ctx);

// J_{1 + i nu}(t), for the derivative relation behind the zero estimators
BigCx j_1piv(double nu, const BigReal& t, const PrecisionContext& ctx);

// I_{sign * i nu}(z), ascending series, sign in {+1, -1}
BigCx i_iv(double nu, const BigCx& z, int sign, const PrecisionContext& ctx);

// I_{offset + i nu}(t), offset in {-1, 0, +1}, for derivative relations
BigCx i_shift_iv(double nu, const BigReal& t, int offset, const PrecisionContext& ctx);

// K_{i nu}(t) = int_0^inf e^{-t cosh s} cos(nu s) ds
BigReal k_iv(double nu, const BigReal& t, const PrecisionContext& ctx);

// Re K_{1+i nu}(t) = Re int_0^inf e^{-t cosh s} cosh((1+i nu)s) ds
BigReal k_1piv_re(double nu, const BigReal& t, const PrecisionContext& ctx);

// L_{i nu}(t) = (pi/(2 sinh(nu pi))) (I_{i nu}(t) + I_{-i nu}(t))
BigReal l_iv(double nu, const BigReal& t, const PrecisionContext& ctx);

// K via the series route (connection formula), for cross-validation against
// the quadrature representation.
BigReal k_iv_series(double nu, const BigReal& t, const PrecisionContext& ctx);

} // namespace ubim

#endif
