#ifndef UBIM_PRECISION_HPP
#define UBIM_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>

namespace ubim {

using BigReal = boost::multiprecision::mpfr_float;

// RAII guard for the process-wide default precision (decimal digits).
// BigReal objects keep the precision they were constructed with, so values
// created inside a scope survive it unchanged.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10)
        : saved_(BigReal::default_precision()) {
        BigReal::default_precision(digits10);
    }
    ~PrecisionScope() { BigReal::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct PrecisionContext {
    int digits = 40;
    double series_tail_tol = 1e-45;
    double quadrature_tol = 1e-45;
};

} // namespace ubim

#endif
