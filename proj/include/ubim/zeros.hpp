#ifndef UBIM_ZEROS_HPP
#define UBIM_ZEROS_HPP

#include <vector>

#include "ubim/coeff_engine.hpp"
#include "ubim/oracle.hpp"
#include "ubim/oscillatory_j.hpp"

namespace ubim {

// Positive zeros of K_{i nu}(t) and of its companion L_{i nu}(t), by the
// uniform expansion t = nu * sum kappa^_s(kappa_0)/nu^{2s}.

enum class ZeroFamily { K, L };

struct KZeroQuery {
    double nu = 0.0;
    int m = 0;                        // zero index, 1-based; zeros decrease in m
    ZeroFamily family = ZeroFamily::K;
    int s_max = 2;                    // 0..2 closed forms; 3..4 via table or derivation
    const KappaTable* table = nullptr; // optional imported higher orders
};

// leading coefficient: the root in (0,1) of the phase-integral equation
BigReal kappa0_hp(double nu, int m, ZeroFamily family, int digits = 50);
double kappa0(double nu, int m, ZeroFamily family);

BigReal k_zero_hp(const KZeroQuery& q, int digits = 50);
ZeroResult k_zero(const KZeroQuery& q);                              // no oracle
ZeroResult k_zero(const KZeroQuery& q, const PrecisionContext& ctx); // with estimator

// Delta_nu(t) = K_{i nu}(t)/(t K'_{i nu}(t)) = -K_{i nu}(t)/(t Re K_{1+i nu}(t))
BigReal delta_K_hp(double nu, const BigReal& t, const PrecisionContext& ctx);
double delta_K(double nu, double t, const PrecisionContext& ctx = PrecisionContext{});

struct FigureRow {
    int m = 0;
    double zero_x = 0.0;    // x-scale zero location
    double log10_delta = 0.0;
};

std::vector<FigureRow> figure_data(double nu, int m_lo, int m_hi, ZeroFamily family,
                                   int s_max, const PrecisionContext& ctx,
                                   const KappaTable* table = nullptr);

} // namespace ubim

#endif
