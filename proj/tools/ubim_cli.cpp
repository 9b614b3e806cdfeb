#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ubim/airy_expansions.hpp"
#include "ubim/grid.hpp"
#include "ubim/oscillatory_j.hpp"
#include "ubim/verify.hpp"
#include "ubim/zeros.hpp"

namespace {

using namespace ubim;

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, v);
    return buf;
}

std::vector<double> parse_grid(const std::string& spec) {
    // a:b:n, n points from a to b inclusive; n = 0 gives the empty grid
    double a = 0.0, b = 0.0;
    long n = -1;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%ld%c", &a, &b, &n, &tail) != 3 || n < 0)
        throw config_error("bad grid spec '" + spec + "', expected a:b:n");
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        xs.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) /
                                          static_cast<double>(n - 1));
    return xs;
}

void parse_range(const std::string& spec, long long& lo, long long& hi) {
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lld:%lld%c", &lo, &hi, &tail) != 2)
        throw config_error("bad range spec '" + spec + "', expected a:b");
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw config_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

const std::map<std::string, GridFunction>& function_names() {
    static const std::map<std::string, GridFunction> m = {
        {"K", GridFunction::K},           {"L", GridFunction::L},
        {"Iplus", GridFunction::I_plus},  {"Iminus", GridFunction::I_minus},
        {"Jmodulus", GridFunction::J_modulus}, {"Jphase", GridFunction::J_phase},
    };
    return m;
}

struct EvalConfig {
    double nu = 0.0;
    std::vector<double> xs;
    std::string grid_spec;
    std::string function = "K";
    std::string method = "airy";
    int order = -1;
    int digits = 17;
    std::string out;
};

int run_eval(const EvalConfig& cfg) {
    GridRequest req;
    req.nu = cfg.nu;
    req.xs = cfg.xs;
    if (!cfg.grid_spec.empty()) {
        auto g = parse_grid(cfg.grid_spec);
        req.xs.insert(req.xs.end(), g.begin(), g.end());
    }
    auto fit = function_names().find(cfg.function);
    if (fit == function_names().end())
        throw config_error("unknown function '" + cfg.function + "'");
    req.function = fit->second;
    if (cfg.method == "lg")
        req.method = GridMethod::lg;
    else if (cfg.method == "airy")
        req.method = GridMethod::airy;
    else if (cfg.method == "oracle")
        req.method = GridMethod::oracle;
    else
        throw config_error("unknown method '" + cfg.method + "'");
    bool is_j = req.function == GridFunction::J_modulus ||
                req.function == GridFunction::J_phase;
    req.order = cfg.order >= 0 ? cfg.order
                               : (req.method == GridMethod::lg ? (is_j ? 4 : 7) : 3);
    req.digits = cfg.digits > 40 ? cfg.digits : 40;

    auto rows = evaluate_grid(req);
    Output out(cfg.out);
    std::ostream& os = out.stream();
    os << "x,function,mantissa_re,mantissa_im,log_scale,method,branch\n";
    for (const GridRow& r : rows)
        os << num(r.x, cfg.digits) << ',' << cfg.function << ','
           << num(r.mantissa.re, cfg.digits) << ',' << num(r.mantissa.im, cfg.digits)
           << ',' << num(r.log_scale, cfg.digits) << ',' << cfg.method << ','
           << r.branch << '\n';
    return 0;
}

struct ZerosConfig {
    double nu = 0.0;
    std::string family = "J";
    std::string m_range;
    double r = 0.0;
    int order = -1;
    int digits = 17;
    std::string kappa_path;
    std::string out;
};

int run_zeros(const ZerosConfig& cfg) {
    long long lo = 1, hi = 0;
    if (!cfg.m_range.empty()) parse_range(cfg.m_range, lo, hi);
    KappaTable imported;
    const KappaTable* table = nullptr;
    if (!cfg.kappa_path.empty()) {
        imported = load_kappa_table(cfg.kappa_path);
        table = &imported;
    }

    Output out(cfg.out);
    std::ostream& os = out.stream();
    os << "family,nu,m,r,zero,est_rel_err,s_max\n";
    PrecisionContext ctx;
    for (long long m = lo; m <= hi; ++m) {
        if (cfg.family == "J") {
            int trunc = cfg.order >= 0 ? cfg.order : 4;
            ZeroResult z = j_zero(ZeroQuery{cfg.nu, m, cfg.r, trunc}, ctx);
            os << "J," << num(cfg.nu, cfg.digits) << ',' << m << ','
               << num(cfg.r, cfg.digits) << ',' << num(z.t, cfg.digits) << ','
               << num(z.estimated_relative_error, cfg.digits) << ',' << trunc << '\n';
        } else if (cfg.family == "K" || cfg.family == "L") {
            if (m < 1 || m > (1LL << 31))
                throw std::domain_error("zeros: K/L index m must be >= 1");
            int s_max = cfg.order >= 0 ? cfg.order : 2;
            ZeroFamily fam = cfg.family == "K" ? ZeroFamily::K : ZeroFamily::L;
            ZeroResult z = k_zero(KZeroQuery{cfg.nu, static_cast<int>(m), fam, s_max,
                                             table},
                                  ctx);
            os << cfg.family << ',' << num(cfg.nu, cfg.digits) << ',' << m << ','
               << num(0.0, cfg.digits) << ',' << num(z.t, cfg.digits) << ','
               << num(z.estimated_relative_error, cfg.digits) << ',' << s_max << '\n';
        } else {
            throw config_error("unknown family '" + cfg.family + "'");
        }
    }
    return 0;
}

struct FiguresConfig {
    int figure = 0;
    std::string kappa_path;
    int digits = 17;
    std::string out;
};

int run_figures(const FiguresConfig& cfg) {
    KappaTable imported;
    const KappaTable* table = nullptr;
    if (!cfg.kappa_path.empty()) {
        imported = load_kappa_table(cfg.kappa_path);
        table = &imported;
    }
    PrecisionContext ctx;
    Output out(cfg.out);
    std::ostream& os = out.stream();
    os << "x_or_m,value\n";

    switch (cfg.figure) {
    case 3:
    case 4:
        for (int i = 1; i <= 120; ++i) {
            double x = 0.05 * i;
            double v = cfg.figure == 3 ? omega1(10.0, x, 4, ctx) : omega2(10.0, x, 4, ctx);
            os << num(x, cfg.digits) << ',' << num(v, cfg.digits) << '\n';
        }
        break;
    case 5:
        for (long long m = -100; m <= 100; ++m) {
            PrecisionScope scope(60);
            BigReal t = j_zero_hp(ZeroQuery{10.0, m, 0.0, 4});
            double v = static_cast<double>(log10(abs(delta0_hp(10.0, t, ctx))));
            os << m << ',' << num(v, cfg.digits) << '\n';
        }
        break;
    case 8:
        for (int i = 1; i <= 80; ++i) {
            double x = 0.05 * i;
            os << num(x, cfg.digits) << ',' << num(omega3(10.0, x, 3, ctx), cfg.digits)
               << '\n';
        }
        break;
    case 9:
    case 10:
    case 11: {
        double nu = cfg.figure == 9 ? 5.0 : cfg.figure == 10 ? 10.0 : 100.0;
        auto rows = figure_data(nu, 1, 100, ZeroFamily::K, 4, ctx, table);
        for (const FigureRow& r : rows)
            os << r.m << ',' << num(r.log10_delta, cfg.digits) << '\n';
        break;
    }
    default:
        throw config_error("no dataset for figure " + std::to_string(cfg.figure));
    }
    return 0;
}

struct VerifyConfig {
    std::string kappa_path;
    std::string out;
};

int run_verify(const VerifyConfig& cfg) {
    KappaTable imported;
    VerifyOptions opt;
    if (!cfg.kappa_path.empty()) {
        imported = load_kappa_table(cfg.kappa_path);
        opt.table = &imported;
    }
    Output out(cfg.out);
    auto results = run_acceptance(opt, &std::cerr);
    int failures = print_report(results, out.stream());
    return failures == 0 ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform asymptotic expansions for Bessel functions of "
                 "imaginary order: evaluation, zeros, figure data, verification"};
    app.require_subcommand(1);

    EvalConfig ec;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a function on a grid");
    eval->add_option("--nu", ec.nu, "order parameter")->required();
    eval->add_option("--x", ec.xs, "evaluation point (repeatable)");
    eval->add_option("--x-grid", ec.grid_spec, "grid a:b:n, n points inclusive");
    eval->add_option("--function", ec.function,
                     "K, L, Iplus, Iminus, Jmodulus, Jphase");
    eval->add_option("--method", ec.method, "lg, airy, oracle");
    eval->add_option("--order", ec.order, "truncation order of the chosen method");
    eval->add_option("--digits", ec.digits, "output precision / oracle digits");
    eval->add_option("--out", ec.out, "output CSV path (default stdout)");

    ZerosConfig zc;
    CLI::App* zeros = app.add_subcommand("zeros", "zero tables");
    zeros->add_option("--nu", zc.nu, "order parameter")->required();
    zeros->add_option("--family", zc.family, "J, K, or L");
    zeros->add_option("--m-range", zc.m_range, "index range a:b")->required();
    zeros->add_option("--r", zc.r, "rotation parameter for the J family");
    zeros->add_option("--order", zc.order, "truncation order");
    zeros->add_option("--digits", zc.digits, "output precision");
    zeros->add_option("--kappa-table", zc.kappa_path, "imported kappa coefficients");
    zeros->add_option("--out", zc.out, "output CSV path (default stdout)");

    FiguresConfig fc;
    CLI::App* figures = app.add_subcommand("figures", "figure datasets");
    figures->add_option("--figure", fc.figure, "3, 4, 5, 8, 9, 10, or 11")->required();
    figures->add_option("--kappa-table", fc.kappa_path, "imported kappa coefficients");
    figures->add_option("--digits", fc.digits, "output precision");
    figures->add_option("--out", fc.out, "output CSV path (default stdout)");

    VerifyConfig vc;
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--kappa-table", vc.kappa_path, "imported kappa coefficients");
    verify->add_option("--out", vc.out, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (eval->parsed()) return run_eval(ec);
        if (zeros->parsed()) return run_zeros(zc);
        if (figures->parsed()) return run_figures(fc);
        return run_verify(vc);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const kappa_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
