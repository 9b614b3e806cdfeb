#ifndef UBIM_SCALED_HPP
#define UBIM_SCALED_HPP

#include <cmath>
#include <limits>

#include "ubim/complex.hpp"

namespace ubim {

// value = mantissa * e^{log_scale}; keeps e^{±νξ±νπ/2} magnitudes finite.
struct ScaledValue {
    Cxd mantissa{0.0, 0.0};
    double log_scale = 0.0;

    static ScaledValue from(const Cxd& v) {
        ScaledValue s{v, 0.0};
        s.normalize();
        return s;
    }

    void normalize() {
        double m = ubim::abs(mantissa);
        if (m == 0.0 || !std::isfinite(m)) return;
        double shift = std::log(m);
        mantissa = mantissa / std::exp(shift);
        log_scale += shift;
    }

    // Collapses to a plain double-range value; may over/underflow.
    Cxd value() const { return mantissa * std::exp(log_scale); }

    double abs_log() const {
        double m = ubim::abs(mantissa);
        return m == 0.0 ? -std::numeric_limits<double>::infinity()
                        : std::log(m) + log_scale;
    }

    ScaledValue operator*(const ScaledValue& o) const {
        ScaledValue r{mantissa * o.mantissa, log_scale + o.log_scale};
        r.normalize();
        return r;
    }

    ScaledValue operator/(const ScaledValue& o) const {
        ScaledValue r{mantissa / o.mantissa, log_scale - o.log_scale};
        r.normalize();
        return r;
    }

    ScaledValue operator+(const ScaledValue& o) const {
        const ScaledValue* big = this;
        const ScaledValue* small = &o;
        if (o.log_scale > log_scale) { big = &o; small = this; }
        double d = small->log_scale - big->log_scale;
        ScaledValue r{big->mantissa + small->mantissa * std::exp(d), big->log_scale};
        r.normalize();
        return r;
    }

    ScaledValue operator-(const ScaledValue& o) const {
        ScaledValue n{-o.mantissa, o.log_scale};
        return *this + n;
    }
};

} // namespace ubim

#endif
