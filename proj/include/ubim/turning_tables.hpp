#ifndef UBIM_TURNING_TABLES_HPP
#define UBIM_TURNING_TABLES_HPP

#include <map>
#include <vector>

#include "ubim/coeff_engine.hpp"
#include "ubim/precision.hpp"

namespace ubim {

// Power series in w = z-1 (real coefficients, computed once at extended
// precision from the t = (z-1)^{1/2} expansions of the turning-point frame).
// Everything here is analytic at z=1 even though the building blocks are not.
struct TurningPointTables {
    int ab_smax = 3;

    std::vector<BigReal> zeta;      // zeta(1+w), coefficient of w^k
    std::vector<BigReal> sigma;     // sigma(1+w)
    std::vector<std::vector<BigReal>> A; // A[s] for s=1..ab_smax (A[0] empty)
    std::vector<std::vector<BigReal>> B; // B[s] for s=0..ab_smax
    std::vector<BigReal> upsilon1;
    std::map<int, std::vector<BigReal>> kappa; // built-in s=0..2

    // double mirrors for the production evaluation paths
    std::vector<double> zeta_d, sigma_d, upsilon1_d;
    std::vector<std::vector<double>> A_d, B_d;
    std::map<int, std::vector<double>> kappa_d;
};

const TurningPointTables& turning_tables();

// Taylor series about z=1 of an arbitrary kappa-hat table entry (used for
// imported orders s=3,4 whose closed forms are singular at the turning point).
std::vector<BigReal> kappa_series_for(const KappaTable& table, int s);

template <class T>
T eval_wseries(const std::vector<T>& c, const T& w, std::size_t nterms = 0) {
    std::size_t n = (nterms == 0 || nterms > c.size()) ? c.size() : nterms;
    T acc = T(0);
    for (std::size_t i = n; i-- > 0;) acc = acc * w + c[i];
    return acc;
}

// derivative series d/dz of a w-series
template <class T>
std::vector<T> wseries_derivative(const std::vector<T>& c) {
    if (c.size() <= 1) return {};
    std::vector<T> r(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) r[k - 1] = c[k] * T(static_cast<int>(k));
    return r;
}

} // namespace ubim

#endif
