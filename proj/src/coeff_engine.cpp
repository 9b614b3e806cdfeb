#include "ubim/coeff_engine.hpp"

#include <cctype>

#include "ubim/turning_tables.hpp"
#include <fstream>
#include <sstream>

namespace ubim {

namespace {

// integrand polynomial p^2(p^2+1) of the E-recursion
const RationalPoly& weight_poly() {
    static const RationalPoly w(
        std::vector<Rational>{0, 0, 1, 0, 1});
    return w;
}

} // namespace

std::vector<RationalPoly> gen_E(int max_s) {
    std::vector<RationalPoly> E;
    if (max_s < 1) return E;

    // E_1 = beta(5 beta^2 + 3)/24
    E.push_back(RationalPoly(std::vector<Rational>{
        0, Rational(3, 24), 0, Rational(5, 24)}));
    if (max_s == 1) return E;

    // E_2 = beta^2 (5 beta^2 + 1)(beta^2 + 1)/16 = (5 b^6 + 6 b^4 + b^2)/16
    E.push_back(RationalPoly(std::vector<Rational>{
        0, 0, Rational(1, 16), 0, Rational(6, 16), 0, Rational(5, 16)}));

    // E_{s+1} = (1/2) b^2 (b^2+1) E_s' + (1/2) Int_0^b p^2(p^2+1) sum_{j=1}^{s-1} E_j' E_{s-j}' dp
    const RationalPoly lead(std::vector<Rational>{0, 0, Rational(1, 2), 0, Rational(1, 2)});
    for (int s = 2; s < max_s; ++s) {
        RationalPoly conv;
        for (int j = 1; j <= s - 1; ++j)
            conv = conv + E[j - 1].derivative() * E[s - j - 1].derivative();
        RationalPoly integral = (weight_poly() * conv).integrate();
        E.push_back(lead * E[s - 1].derivative() + integral * Rational(1, 2));
    }
    return E;
}

void gen_airy_coeffs(int max_s, std::vector<Rational>& a, std::vector<Rational>& a_tilde) {
    auto run = [max_s](const Rational& seed) {
        std::vector<Rational> b;
        if (max_s >= 1) b.push_back(seed);
        if (max_s >= 2) b.push_back(seed);
        for (int s = 2; s < max_s; ++s) {
            Rational next = Rational(s + 1, 2) * b[s - 1];
            Rational conv = 0;
            for (int j = 1; j <= s - 1; ++j) conv += b[j - 1] * b[s - j - 1];
            b.push_back(next + conv / 2);
        }
        return b;
    };
    a = run(Rational(5, 72));
    a_tilde = run(Rational(-7, 72));
}

CoefficientTable make_coefficient_table(int max_s) {
    CoefficientTable t;
    t.E = gen_E(max_s);
    gen_airy_coeffs(max_s, t.a, t.a_tilde);
    t.max_order = max_s;
    return t;
}

const CoefficientTable& default_table() {
    static const CoefficientTable t = make_coefficient_table(12);
    return t;
}

RationalPoly ehat_poly(const RationalPoly& Es, int s) {
    // substitute beta -> -i*bh and strip the overall power of i; the
    // parity of E_s makes the result purely real
    std::vector<Rational> out(static_cast<std::size_t>(Es.degree() + 1));
    for (std::size_t j = 0; j < out.size(); ++j) {
        Rational c = Es.coeff(j);
        if (c == 0) continue;
        if (s % 2 == 0) {
            if (j % 2 != 0)
                throw std::logic_error("ehat_poly: even E_s has an odd coefficient");
            out[j] = (j / 2 % 2 == 0) ? c : -c;
        } else {
            if (j % 2 != 1)
                throw std::logic_error("ehat_poly: odd E_s has an even coefficient");
            out[j] = ((j + 1) / 2 % 2 == 0) ? c : -c;
        }
    }
    return RationalPoly(std::move(out));
}

const QPolyData& q_poly_data(int s) {
    static const QPolyData q1{Rational(1, 24), {-2, 3}, 2};
    static const QPolyData q2{Rational(-1, 5760), {-4, 1812, -4119, 465}, 5};
    static const QPolyData q3{Rational(1, 2903040),
                              {-1912, 910164, -19043730, 46671831, -19038132, 714231},
                              8};
    static const QPolyData q4{
        Rational(-1, 1393459200),
        {742544, 452367216, -45022408056, Rational("493158930936"),
         Rational("-1239519604671"), Rational("846638961795"),
         Rational("-138922188885"), Rational("2542280985")},
        11};
    switch (s) {
        case 1: return q1;
        case 2: return q2;
        case 3: return q3;
        case 4: return q4;
        default: throw std::out_of_range("q_poly: s must be in 0..4");
    }
}

namespace {

KappaTable make_builtin_kappa() {
    KappaTable t;
    t.source = KappaTable::Source::built_in;
    t.entries[0] = {{Rational(1), 1, 0, 0}};
    // kappa^_1 = z sigma (5 - 10 sigma^3 - 6 sigma zeta) / (48 zeta^2)
    t.entries[1] = {
        {Rational(5, 48), 1, 1, 2},
        {Rational(-5, 24), 1, 4, 2},
        {Rational(-1, 8), 1, 2, 1},
    };
    // kappa^_2 = -(z sigma / 46080 zeta^5) { ... }; brace terms listed as
    // (integer coefficient, z power, sigma power, zeta power)
    struct Brace { long long c; int pz, ps, pzeta; };
    static const Brace brace[] = {
        {7000, 2, 9, 0},  {44200, 0, 9, 0},  {6000, 2, 7, 1},  {78560, 0, 7, 1},
        {-4000, 2, 6, 0}, {1080, 2, 5, 2},   {37032, 0, 5, 2}, {-1200, 2, 4, 1},
        {1000, 0, 4, 1},  {600, 0, 2, 2},    {250, 2, 3, 0},   {2640, 0, 3, 3},
        {-250, 0, 1, 1},  {-5525, 0, 0, 0},
    };
    std::vector<KappaTerm> k2;
    for (const Brace& b : brace)
        k2.push_back({Rational(-b.c, 46080), b.pz + 1, b.ps + 1, 5 - b.pzeta});
    t.entries[2] = std::move(k2);
    return t;
}

Rational parse_rational(const std::string& tok) {
    auto digits_ok = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::size_t slash = tok.find('/');
    if (slash == std::string::npos) {
        if (!digits_ok(tok)) throw kappa_parse_error("malformed rational: " + tok);
        return Rational(BigInt(tok));
    }
    std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || BigInt(den) == 0)
        throw kappa_parse_error("malformed rational: " + tok);
    return Rational(BigInt(num), BigInt(den));
}

int parse_power(const std::string& tok, const char* name) {
    std::string prefix = std::string(name) + "^";
    if (tok.rfind(prefix, 0) != 0)
        throw kappa_parse_error("expected " + prefix + "<int>, got: " + tok);
    std::string p = tok.substr(prefix.size());
    try {
        std::size_t pos = 0;
        int v = std::stoi(p, &pos);
        if (pos != p.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw kappa_parse_error("malformed power in: " + tok);
    }
}

} // namespace

const KappaTable& builtin_kappa_table() {
    static const KappaTable t = make_builtin_kappa();
    return t;
}

KappaTable parse_kappa_table(std::istream& in) {
    KappaTable t = builtin_kappa_table();
    t.source = KappaTable::Source::imported;

    std::string line;
    int current_s = -1;
    bool saw_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "kappa") {
            std::string stok;
            if (!(ls >> stok) || stok.rfind("s=", 0) != 0)
                throw kappa_parse_error("line " + std::to_string(lineno) +
                                        ": expected 'kappa s=<int>'");
            try {
                std::size_t pos = 0;
                current_s = std::stoi(stok.substr(2), &pos);
                if (pos != stok.size() - 2 || current_s < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw kappa_parse_error("line " + std::to_string(lineno) +
                                        ": malformed order in '" + stok + "'");
            }
            t.entries[current_s].clear(); // imported block replaces built-in
            saw_header = true;
        } else if (kw == "term") {
            if (current_s < 0)
                throw kappa_parse_error("line " + std::to_string(lineno) +
                                        ": term before any 'kappa s=' header");
            std::string coef, zt, st, ct, extra;
            if (!(ls >> coef >> zt >> st >> ct))
                throw kappa_parse_error("line " + std::to_string(lineno) +
                                        ": expected 'term <rational> z^a sigma^b zetainv^c'");
            if (ls >> extra)
                throw kappa_parse_error("line " + std::to_string(lineno) +
                                        ": trailing token '" + extra + "'");
            KappaTerm term;
            term.coef = parse_rational(coef);
            term.pz = parse_power(zt, "z");
            term.psigma = parse_power(st, "sigma");
            term.pzetainv = parse_power(ct, "zetainv");
            t.entries[current_s].push_back(term);
        } else {
            throw kappa_parse_error("line " + std::to_string(lineno) +
                                    ": unknown directive '" + kw + "'");
        }
    }
    if (!saw_header)
        throw kappa_parse_error("kappa table contains no 'kappa s=' blocks");
    for (const auto& [s, terms] : t.entries) {
        (void)terms;
        try {
            t.taylor[s] = kappa_series_for(t, s);
        } catch (const std::logic_error&) {
            throw kappa_parse_error("kappa s=" + std::to_string(s) +
                                    ": expression is not analytic at z=1");
        }
    }
    return t;
}

KappaTable load_kappa_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw kappa_parse_error("cannot open kappa table: " + path);
    return parse_kappa_table(in);
}

} // namespace ubim
