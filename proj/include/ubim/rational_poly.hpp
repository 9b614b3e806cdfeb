#ifndef UBIM_RATIONAL_POLY_HPP
#define UBIM_RATIONAL_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ubim/complex.hpp"
#include "ubim/precision.hpp"

namespace ubim {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigReal to_bigreal(const Rational& r) {
    return BigReal(numerator(r)) / BigReal(denominator(r));
}

inline double to_double(const Rational& r) {
    return static_cast<double>(to_bigreal(r));
}

// Dense univariate polynomial over the rationals; all arithmetic exact.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly monomial(const Rational& a, std::size_t power) {
        std::vector<Rational> c(power + 1);
        c[power] = a;
        return RationalPoly(std::move(c));
    }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }

    RationalPoly operator+(const RationalPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return RationalPoly(std::move(r));
    }

    RationalPoly operator-(const RationalPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return RationalPoly(std::move(r));
    }

    RationalPoly operator*(const RationalPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Rational> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return RationalPoly(std::move(r));
    }

    RationalPoly operator*(const Rational& s) const {
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= s;
        return RationalPoly(std::move(r));
    }

    RationalPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(i);
        return RationalPoly(std::move(r));
    }

    // Antiderivative with zero constant term.
    RationalPoly integrate() const {
        if (is_zero()) return {};
        std::vector<Rational> r(c_.size() + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / Rational(i + 1);
        return RationalPoly(std::move(r));
    }

    bool even() const {
        for (std::size_t i = 1; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return true;
    }

    bool odd() const {
        for (std::size_t i = 0; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return true;
    }

    // True when x^k divides the polynomial.
    bool divisible_by_power(std::size_t k) const {
        if (is_zero()) return true;
        if (c_.size() < k) return false;
        for (std::size_t i = 0; i < k; ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    template <class T>
    T eval(const T& x) const {
        T acc = T(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + convert<T>(c_[i]);
        }
        return acc;
    }

    template <class T>
    static T convert(const Rational& r) {
        if constexpr (std::is_same_v<T, double>) {
            return to_double(r);
        } else if constexpr (std::is_same_v<T, Cx<double>>) {
            return T(to_double(r));
        } else if constexpr (std::is_same_v<T, BigReal>) {
            return to_bigreal(r);
        } else if constexpr (std::is_same_v<T, Cx<BigReal>>) {
            return T(to_bigreal(r));
        } else if constexpr (std::is_same_v<T, Rational>) {
            return r;
        } else if constexpr (requires { T::from_bigreal(to_bigreal(r)); }) {
            return T::from_bigreal(to_bigreal(r));
        } else {
            static_assert(sizeof(T) == 0, "unsupported evaluation type");
        }
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace ubim

#endif
