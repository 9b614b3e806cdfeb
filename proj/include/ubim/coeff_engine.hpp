#ifndef UBIM_COEFF_ENGINE_HPP
#define UBIM_COEFF_ENGINE_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ubim/rational_poly.hpp"

namespace ubim {

// Exact coefficient families: E_s(beta) polynomials, the Airy exponential
// coefficients a_s / a~_s, and their derived evaluations.
struct CoefficientTable {
    std::vector<RationalPoly> E;   // E[s-1] is E_s, s = 1..max_order
    std::vector<Rational> a;       // a[s-1] is a_s
    std::vector<Rational> a_tilde; // same indexing
    int max_order = 0;

    const RationalPoly& E_s(int s) const {
        if (s < 1 || s > static_cast<int>(E.size()))
            throw std::out_of_range("E_s: order outside generated table");
        return E[static_cast<std::size_t>(s - 1)];
    }
    const Rational& a_s(int s, bool tilde) const {
        const auto& v = tilde ? a_tilde : a;
        if (s < 1 || s > static_cast<int>(v.size()))
            throw std::out_of_range("a_s: order outside generated table");
        return v[static_cast<std::size_t>(s - 1)];
    }
};

std::vector<RationalPoly> gen_E(int max_s);
void gen_airy_coeffs(int max_s, std::vector<Rational>& a, std::vector<Rational>& a_tilde);
CoefficientTable make_coefficient_table(int max_s);
const CoefficientTable& default_table(); // S = 12, built once

// E_s(-i*bh) is i^s times a real polynomial in bh; this returns that real
// polynomial, so E^_{2s}(bh) and E^_{2s+1}(bh) evaluate in real arithmetic.
RationalPoly ehat_poly(const RationalPoly& Es, int s);

template <class T>
T ehat_eval(const CoefficientTable& tab, int s, const T& beta_hat) {
    return ehat_poly(tab.E_s(s), s).eval(beta_hat);
}

// q_0..q_4: zero-expansion coefficient functions, q_s(x) = const * x * P_s(x^2) / (x^2+1)^{e_s}.
struct QPolyData {
    Rational prefactor;
    std::vector<Rational> num; // coefficients of P_s in ascending powers of x^2
    int denom_power;
};
const QPolyData& q_poly_data(int s); // s = 1..4

template <class T>
T q_poly(int s, const T& x) {
    if (s == 0) return x;
    const QPolyData& q = q_poly_data(s);
    T u = x * x;
    T p = T(0);
    for (std::size_t i = q.num.size(); i-- > 0;)
        p = p * u + RationalPoly::convert<T>(q.num[i]);
    T den = T(1);
    T up1 = u + T(1);
    for (int i = 0; i < q.denom_power; ++i) den = den * up1;
    return RationalPoly::convert<T>(q.prefactor) * x * p / den;
}

// script-E and the d recursion; CT is a complex (or real) scalar type.
template <class CT>
CT script_E(const CoefficientTable& tab, int s, const CT& beta, const CT& xi, bool tilde) {
    CT E = tab.E_s(s).eval(beta);
    CT xis = CT(1);
    for (int i = 0; i < s; ++i) xis = xis * xi;
    CT corr = RationalPoly::convert<CT>(tab.a_s(s, tilde)) / (CT(s) * xis);
    return (s % 2 == 0) ? E + corr : E - corr;
}

// d_s = scr_s + (1/s) sum_{j=1}^{s-1} j scr_j d_{s-j}; scr is 1-based (scr[0] ignored).
template <class CT>
std::vector<CT> d_recursion(const std::vector<CT>& scr) {
    std::vector<CT> d(scr.size(), CT(0));
    for (std::size_t s = 1; s < scr.size(); ++s) {
        CT conv = CT(0);
        for (std::size_t j = 1; j <= s - 1; ++j)
            conv += CT(static_cast<int>(j)) * scr[j] * d[s - j];
        d[s] = scr[s] + conv / CT(static_cast<int>(s));
    }
    return d;
}

template <class CT>
std::vector<CT> gen_d(const CoefficientTable& tab, int max_s, const CT& beta, const CT& xi,
                      bool tilde) {
    std::vector<CT> scr(static_cast<std::size_t>(max_s) + 1, CT(0));
    for (int s = 1; s <= max_s; ++s)
        scr[s] = script_E(tab, s, beta, xi, tilde);
    return d_recursion(scr);
}

// Direct-branch A_s, B_s: A_s = d~_{2s}, B_s = zeta^{-1/2} d_{2s+1}.
// zeta_m12 is the branch-correct zeta^{-1/2} supplied by the caller.
template <class CT>
void ab_direct(const CoefficientTable& tab, int s_max, const CT& beta, const CT& xi,
               const CT& zeta_m12, std::vector<CT>& A, std::vector<CT>& B) {
    std::vector<CT> dt = gen_d(tab, 2 * s_max, beta, xi, true);
    std::vector<CT> d = gen_d(tab, 2 * s_max + 1, beta, xi, false);
    A.assign(static_cast<std::size_t>(s_max) + 1, CT(0));
    B.assign(static_cast<std::size_t>(s_max) + 1, CT(0));
    A[0] = CT(1);
    for (int s = 1; s <= s_max; ++s) A[s] = dt[2 * s];
    for (int s = 0; s <= s_max; ++s) B[s] = zeta_m12 * d[2 * s + 1];
}

// kappa-hat coefficient tables for the K/L zero expansions.
struct KappaTerm {
    Rational coef;
    int pz = 0;       // power of z
    int psigma = 0;   // power of sigma
    int pzetainv = 0; // power of 1/zeta
};

struct KappaTable {
    enum class Source { built_in, imported };
    std::map<int, std::vector<KappaTerm>> entries;
    Source source = Source::built_in;
    // Taylor series about z=1 (filled at load time for imported orders; the
    // built-in orders live in turning_tables())
    std::map<int, std::vector<BigReal>> taylor;

    int max_order() const { return entries.empty() ? -1 : entries.rbegin()->first; }
    bool has(int s) const { return entries.count(s) != 0; }
};

class kappa_parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const KappaTable& builtin_kappa_table(); // s = 0, 1, 2
// Parses the external coefficient file and overlays it on the built-in table.
KappaTable load_kappa_table(const std::string& path);
KappaTable parse_kappa_table(std::istream& in);

// Branch-selecting evaluation of kappa^_s on (0,1]: Taylor series inside
// |z-1| < 0.1, closed form (evaluated at extended precision to tame the
// zeta^{-c} cancellation) outside.
BigReal kappa_hat_hp(int s, const BigReal& z, const KappaTable& table);
double kappa_hat(int s, double z, const KappaTable& table = builtin_kappa_table());

template <class T>
T kappa_hat_terms(const KappaTable& tab, int s, const T& z, const T& sigma, const T& zeta) {
    auto it = tab.entries.find(s);
    if (it == tab.entries.end())
        throw std::out_of_range("kappa_hat: order beyond loaded table");
    T zinv = T(1) / zeta;
    T acc = T(0);
    for (const KappaTerm& t : it->second) {
        T term = RationalPoly::convert<T>(t.coef);
        for (int i = 0; i < t.pz; ++i) term = term * z;
        for (int i = 0; i < t.psigma; ++i) term = term * sigma;
        for (int i = 0; i < t.pzetainv; ++i) term = term * zinv;
        acc += term;
    }
    return acc;
}

} // namespace ubim

#endif
