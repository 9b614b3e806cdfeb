#ifndef UBIM_COMPLEX_HPP
#define UBIM_COMPLEX_HPP

#include <cmath>
#include <complex>

namespace ubim {

// Minimal complex type usable with both double and variable-precision reals.
// std::complex is specified for the builtin floating types only, so the
// extended-precision code paths need their own; keeping a single template
// lets every formula be written once.
template <class Real>
struct Cx {
    Real re{};
    Real im{};

    Cx() = default;
    Cx(const Real& r) : re(r) {}
    Cx(const Real& r, const Real& i) : re(r), im(i) {}
    template <class T>
    explicit Cx(const Cx<T>& o) : re(static_cast<Real>(o.re)), im(static_cast<Real>(o.im)) {}

    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o) {
        Real r = re * o.re - im * o.im;
        Real i = re * o.im + im * o.re;
        re = r; im = i;
        return *this;
    }
    Cx& operator/=(const Cx& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        Real i = (im * o.re - re * o.im) / d;
        re = r; im = i;
        return *this;
    }
};

template <class R> Cx<R> operator+(Cx<R> a, const Cx<R>& b) { return a += b; }
template <class R> Cx<R> operator-(Cx<R> a, const Cx<R>& b) { return a -= b; }
template <class R> Cx<R> operator*(Cx<R> a, const Cx<R>& b) { return a *= b; }
template <class R> Cx<R> operator/(Cx<R> a, const Cx<R>& b) { return a /= b; }
template <class R> Cx<R> operator-(const Cx<R>& a) { return Cx<R>(-a.re, -a.im); }

template <class R> Cx<R> operator+(const Cx<R>& a, const R& b) { return Cx<R>(a.re + b, a.im); }
template <class R> Cx<R> operator+(const R& b, const Cx<R>& a) { return a + b; }
template <class R> Cx<R> operator-(const Cx<R>& a, const R& b) { return Cx<R>(a.re - b, a.im); }
template <class R> Cx<R> operator-(const R& b, const Cx<R>& a) { return Cx<R>(b - a.re, -a.im); }
template <class R> Cx<R> operator*(const Cx<R>& a, const R& b) { return Cx<R>(a.re * b, a.im * b); }
template <class R> Cx<R> operator*(const R& b, const Cx<R>& a) { return a * b; }
template <class R> Cx<R> operator/(const Cx<R>& a, const R& b) { return Cx<R>(a.re / b, a.im / b); }
template <class R> Cx<R> operator/(const R& b, const Cx<R>& a) { return Cx<R>(b) / a; }

template <class R> Cx<R> operator*(const Cx<R>& a, int b) { return a * R(b); }
template <class R> Cx<R> operator*(int b, const Cx<R>& a) { return a * R(b); }
template <class R> Cx<R> operator/(const Cx<R>& a, int b) { return a / R(b); }

template <class R> Cx<R> conj(const Cx<R>& a) { return Cx<R>(a.re, -a.im); }
template <class R> R norm(const Cx<R>& a) { return a.re * a.re + a.im * a.im; }

template <class R> R abs(const Cx<R>& a) {
    using std::sqrt;
    return R(sqrt(norm(a)));
}

template <class R> R arg(const Cx<R>& a) {
    using std::atan2;
    return R(atan2(a.im, a.re));
}

template <class R> Cx<R> exp(const Cx<R>& a) {
    using std::exp; using std::sin; using std::cos;
    R m = R(exp(a.re));
    return Cx<R>(m * R(cos(a.im)), m * R(sin(a.im)));
}

template <class R> Cx<R> log(const Cx<R>& a) {
    using std::log;
    return Cx<R>(R(log(abs(a))), arg(a));
}

// Principal square root.
template <class R> Cx<R> sqrt(const Cx<R>& a) {
    using std::sqrt;
    R m = abs(a);
    if (m == R(0)) return Cx<R>(R(0), R(0));
    if (a.re >= R(0)) {
        R u = R(sqrt((m + a.re) / R(2)));
        return Cx<R>(u, a.im / (R(2) * u));
    }
    R w = R(sqrt((m - a.re) / R(2)));
    if (a.im >= R(0)) return Cx<R>(a.im / (R(2) * w), w);
    return Cx<R>(-a.im / (R(2) * w), -w);
}

// Principal power with real exponent.
template <class R> Cx<R> pow(const Cx<R>& a, const R& p) {
    return exp(log(a) * p);
}

template <class R> Cx<R> polar(const R& m, const R& th) {
    using std::sin; using std::cos;
    return Cx<R>(m * R(cos(th)), m * R(sin(th)));
}

using Cxd = Cx<double>;

template <class R>
std::complex<double> to_std(const Cx<R>& a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

} // namespace ubim

#endif
