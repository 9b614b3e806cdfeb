#include "ubim/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <ostream>

#include "ubim/airy.hpp"
#include "ubim/airy_expansions.hpp"
#include "ubim/branch_maps.hpp"
#include "ubim/lg_expansions.hpp"
#include "ubim/oscillatory_j.hpp"
#include "ubim/turning_tables.hpp"
#include "ubim/zeros.hpp"

namespace ubim {

namespace {

constexpr double kPi = 3.14159265358979323846;
const PrecisionContext ctx40{};

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

CriterionResult timed(const std::string& name,
                      const std::function<void(CriterionResult&)>& body,
                      std::ostream* progress) {
    if (progress) *progress << "running: " << name << std::endl;
    CriterionResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.measured = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    return r;
}

// relative difference of two scaled values, measured on b's scale
double rel_sv(const ScaledValue& a, const ScaledValue& b) {
    ScaledValue d = a - b;
    return std::exp(d.abs_log() - b.abs_log());
}

void printed_zero_error(CriterionResult& r, long long m, const char* printed,
                        double rel_tol, double budget_s) {
    PrecisionScope scope(60);
    BigReal t = j_zero_hp(ZeroQuery{10.0, m, 0.0, 4});
    BigReal d = delta0_hp(10.0, t, ctx40);
    BigReal ref(printed);
    double rel = static_cast<double>(abs(d / ref - 1));
    r.pass = rel < rel_tol;
    r.measured = fmt("delta = %.13e, rel dev %.1e", static_cast<double>(d), rel);
    r.required = fmt("%s to rel %.0e within %.0f s", printed, rel_tol, budget_s);
}

// oracle K sign at relative offsets +-w around t; the series route holds for
// every argument the zero table produces, including the log-scale tail
bool k_sign_change(double nu, const BigReal& t, double w) {
    PrecisionScope scope(60);
    BigReal lo = k_iv_series(nu, BigReal(t * (1 - BigReal(w))), ctx40);
    BigReal hi = k_iv_series(nu, BigReal(t * (1 + BigReal(w))), ctx40);
    return lo * hi < 0;
}

void crit_j_zero_neg20(CriterionResult& r) {
    printed_zero_error(r, -20, "8.120851953268e-14", 1e-12, 60.0);
}

void crit_j_zero_pos20(CriterionResult& r) {
    printed_zero_error(r, 20, "1.33246199579953564e-17", 5e-18, 60.0);
}

void crit_fig5(CriterionResult& r) {
    double worst = -1e300;
    long long worst_m = 0;
    for (long long m = -100; m <= 100; ++m) {
        PrecisionScope scope(60);
        BigReal t = j_zero_hp(ZeroQuery{10.0, m, 0.0, 4});
        double lg = static_cast<double>(log10(abs(delta0_hp(10.0, t, ctx40))));
        if (lg > worst) {
            worst = lg;
            worst_m = m;
        }
    }
    r.pass = worst <= -10.0;
    r.measured = fmt("worst log10|Delta| = %.3f at m = %lld", worst, worst_m);
    r.required = "<= -10 for all m in [-100, 100]";
}

void crit_fig3(CriterionResult& r) {
    double worst = -1e300, worst_x = 0.0;
    for (int i = 1; i <= 120; ++i) {
        double x = 0.05 * i;
        double w = omega1(10.0, x, 4, ctx40);
        if (w > worst) {
            worst = w;
            worst_x = x;
        }
    }
    r.pass = worst <= -10.0;
    r.measured = fmt("worst Omega_1 = %.3f at x = %.2f", worst, worst_x);
    r.required = "<= -10 on x = 0.05 .. 6 step 0.05";
}

void crit_k_zero_printed(CriterionResult& r, const KappaTable* table) {
    KZeroQuery q{10.0, 20, ZeroFamily::K, 4, table};
    ZeroResult z = k_zero(q);
    bool digits_ok = z.x - 0.0014850135 >= 0 && z.x - 0.0014850135 < 1e-10;

    PrecisionScope scope(60);
    BigReal t = k_zero_hp(q, 50);
    BigReal d = delta_K_hp(10.0, t, ctx40);
    BigReal ref("8.18131294761e-14");
    double rel = static_cast<double>(abs(d / ref - 1));
    r.pass = digits_ok && rel < 5e-12;
    r.measured = fmt("zero x = %.12f, delta = %.12e, rel dev %.1e", z.x,
                     static_cast<double>(d), rel);
    r.required = "x = 0.0014850135 to 10 digits; delta = 8.18131294761e-14 to 12";
}

void crit_k_zero_brackets(CriterionResult& r, const KappaTable* table) {
    int checked = 0;
    for (double nu : {5.0, 10.0, 100.0})
        for (int m = 1; m <= 100; ++m) {
            KZeroQuery q{nu, m, ZeroFamily::K, 2, table};
            ZeroResult z = k_zero(q, ctx40);
            PrecisionScope scope(60);
            BigReal t = k_zero_hp(q, 50);
            if (!k_sign_change(nu, t, 10.0 * z.estimated_relative_error)) {
                r.pass = false;
                r.measured = fmt("no sign change at nu = %g, m = %d", nu, m);
                r.required = "bracket half-width 10|Delta| contains the zero";
                return;
            }
            ++checked;
        }

    double worst_ratio = 1e300;
    for (int m : {1, 5, 20, 100}) {
        double prev = 0.0;
        for (int s = 0; s <= 2; ++s) {
            ZeroResult z = k_zero(KZeroQuery{10.0, m, ZeroFamily::K, s, table}, ctx40);
            if (s > 0 && prev / z.estimated_relative_error < worst_ratio)
                worst_ratio = prev / z.estimated_relative_error;
            prev = z.estimated_relative_error;
        }
    }
    r.pass = worst_ratio >= 3.0;
    r.measured = fmt("%d zeros bracketed; worst s-step improvement %.2fx", checked,
                     worst_ratio);
    r.required = "all brackets change sign; each s step improves >= 3x";
}

void crit_turning_constants(CriterionResult& r) {
    const TurningPointTables& tt = turning_tables();
    PrecisionScope scope(40);
    BigReal c13 = exp(log(BigReal(2)) / 3);
    struct Item {
        const char* name;
        BigReal got, want;
    } items[] = {
        {"A_1(1)", tt.A[1][0], BigReal(1) / 225},
        {"A_2(1)", tt.A[2][0], BigReal(151439) / 218295000},
        {"B_0(1)", tt.B[0][0], BigReal(c13 / 70)},
        {"kappa^_1(1)", tt.kappa.at(1)[0], BigReal(-1) / 70},
        {"kappa^_2(1)", tt.kappa.at(2)[0], BigReal(-3781) / 3185000},
        {"Upsilon_1(1)", tt.upsilon1[0], BigReal(c13 / 70)},
    };
    double worst = 0.0;
    const char* worst_name = "";
    for (const Item& it : items) {
        double dev = static_cast<double>(abs(it.got - it.want));
        if (dev > worst) {
            worst = dev;
            worst_name = it.name;
        }
    }
    r.pass = worst < 1e-12;
    r.measured = fmt("worst deviation %.1e at %s", worst, worst_name);
    r.required = "six exact turning-point constants to 1e-12";
}

void crit_properties(CriterionResult& r) {
    const CoefficientTable& tab = default_table();
    std::vector<std::string> fails;

    for (int s = 1; s <= tab.max_order; ++s) {
        const RationalPoly& E = tab.E_s(s);
        bool parity = (s % 2 == 0) ? E.even() : E.odd();
        if (!parity || !E.divisible_by_power(static_cast<std::size_t>(s)))
            fails.push_back(fmt("E_%d structure", s));
    }
    if (tab.a_s(3, false) != Rational(1105, 10368)) fails.push_back("a_3");

    for (double x : {1e-6, 0.01, 0.6627434193, 1.0, 5.0, 50.0})
        if (std::abs(rho_inverse(rho(x)) - x) > 1e-13 * x)
            fails.push_back(fmt("rho roundtrip x=%g", x));

    for (Cxd t : {Cxd(1.2, 0.3), Cxd(-2.0, 0.5), Cxd(0.4, 1.0)}) {
        ScaledValue lhs =
            ScaledValue{Cxd(std::cos(kPi / 6), std::sin(kPi / 6)), 0.0} *
                airy_rotated(-1, t) -
            ScaledValue{Cxd(std::cos(kPi / 6), -std::sin(kPi / 6)), 0.0} *
                airy_rotated(1, t);
        ScaledValue rhs = ScaledValue{Cxd(0.0, 1.0), 0.0} * airy_rotated(0, t);
        if (rel_sv(lhs, rhs) > 1e-13) fails.push_back("airy connection");
    }

    for (double t : {-5.0, 0.0, 2.0}) {
        AiryValue v = airy_eval(Cxd(t));
        Cxd w = v.ai * v.bi_prime - v.ai_prime * v.bi;
        if (abs(w - Cxd(1.0 / kPi)) > 1e-12) fails.push_back(fmt("wronskian t=%g", t));
    }

    for (double th : {0.4, 1.3, 2.4, 2.9}) {
        Cxd z = Cxd(1.0 + 0.1 * std::cos(th), 0.1 * std::sin(th));
        ABPair a = AB_eval(10.0, z, 3, ABBranch::taylor);
        ABPair b = AB_eval(10.0, z, 3, ABBranch::direct);
        if (abs(a.A - b.A) > 1e-10 * abs(a.A) || abs(a.B - b.B) > 1e-10 * abs(a.B))
            fails.push_back(fmt("branch seam th=%g", th));
    }

    {
        Cxd z(1.6, 0.4);
        ABPair up = AB_eval(10.0, z, 3);
        ABPair dn = AB_eval(10.0, conj(z), 3);
        if (abs(dn.A - conj(up.A)) > 1e-13 * abs(up.A) ||
            abs(dn.B - conj(up.B)) > 1e-13 * abs(up.B))
            fails.push_back("conjugate reflection");
    }

    r.pass = fails.empty();
    r.measured = fails.empty() ? "all property families hold"
                               : fmt("%zu failures, first: %s", fails.size(),
                                     fails.front().c_str());
    r.required = "parity/divisibility, a_3, rho roundtrip, connection, "
                 "wronskian, seam, reflection";
}

void crit_lg_airy_overlap(CriterionResult& r) {
    double worst = 0.0, worst_x = 0.0;
    for (double x : {0.3, 0.5, 2.0, 3.0}) {
        ScaledValue l = lg_K(10.0, Cxd(x), 7, 0.15);
        ScaledValue a = bessel_airy(BesselKind::K, 10.0, Cxd(x));
        double rel = rel_sv(l, a);
        if (rel > worst) {
            worst = rel;
            worst_x = x;
        }
    }
    r.pass = worst <= 1e-6;
    r.measured = fmt("worst relative difference %.2e at x = %.1f", worst, worst_x);
    r.required = "<= 1e-6 at nu = 10, x in {0.3, 0.5, 2, 3}";
}

void crit_figure_regressions(CriterionResult& r, const KappaTable* table) {
    // thresholds frozen from the first verified run, with margin
    std::vector<std::string> fails;

    for (double x : {0.05, 0.5, 1.0, 1.5, 2.5, 4.0}) {
        double w = omega3(10.0, x, 3, ctx40);
        if (!std::isfinite(w) || w > -11.0) fails.push_back(fmt("Omega_3 x=%g", x));
    }

    struct Fig {
        double nu;
        double threshold;
    } figs[] = {{5.0, -9.5}, {10.0, -12.5}, {100.0, -22.5}};
    for (const Fig& f : figs)
        for (int m : {1, 10, 50, 100}) {
            auto rows = figure_data(f.nu, m, m, ZeroFamily::K, 4, ctx40, table);
            if (!std::isfinite(rows[0].log10_delta) || rows[0].log10_delta > f.threshold)
                fails.push_back(fmt("nu=%g m=%d: %.3f", f.nu, m, rows[0].log10_delta));
        }

    r.pass = fails.empty();
    r.measured = fails.empty() ? "all sampled figure points inside frozen thresholds"
                               : fmt("%zu breaches, first: %s", fails.size(),
                                     fails.front().c_str());
    r.required = "Omega_3 <= -11; K-zero log10|Delta| <= -9.5/-12.5/-22.5";
}

} // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt,
                                            std::ostream* progress) {
    const KappaTable* table = opt.table;
    std::vector<CriterionResult> out;
    out.push_back(timed("J zero m=-20 printed error",
                        [](CriterionResult& r) { crit_j_zero_neg20(r); }, progress));
    if (out.back().seconds > 60.0) out.back().pass = false;
    out.push_back(timed("J zero m=+20 printed error",
                        [](CriterionResult& r) { crit_j_zero_pos20(r); }, progress));
    if (out.back().seconds > 60.0) out.back().pass = false;
    out.push_back(timed("J zero errors m in [-100,100]",
                        [](CriterionResult& r) { crit_fig5(r); }, progress));
    if (out.back().seconds > 1800.0) out.back().pass = false;
    out.push_back(timed("modulus expansion accuracy on the x grid",
                        [](CriterionResult& r) { crit_fig3(r); }, progress));
    out.push_back(timed("K zero m=20 printed value and error",
                        [table](CriterionResult& r) { crit_k_zero_printed(r, table); },
                        progress));
    out.push_back(timed("K zero bracketing and truncation improvement",
                        [table](CriterionResult& r) { crit_k_zero_brackets(r, table); },
                        progress));
    out.push_back(timed("turning-point constants",
                        [](CriterionResult& r) { crit_turning_constants(r); }, progress));
    out.push_back(timed("structural property suites",
                        [](CriterionResult& r) { crit_properties(r); }, progress));
    out.push_back(timed("LG / Airy overlap",
                        [](CriterionResult& r) { crit_lg_airy_overlap(r); }, progress));
    out.push_back(timed("figure regression thresholds",
                        [table](CriterionResult& r) { crit_figure_regressions(r, table); },
                        progress));
    return out;
}

int print_report(const std::vector<CriterionResult>& results, std::ostream& out) {
    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CriterionResult& r = results[i];
        if (!r.pass) ++failures;
        out << (r.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << "/" << results.size()
            << " " << r.name << ": measured " << r.measured << "; required "
            << r.required << fmt(" (%.1f s)", r.seconds) << "\n";
    }
    return failures;
}

} // namespace ubim
