#include "ubim/grid.hpp"

#include <cmath>
#include <cstddef>
#include <exception>
#include <stdexcept>

#include "ubim/airy_expansions.hpp"
#include "ubim/lg_expansions.hpp"
#include "ubim/oscillatory_j.hpp"

namespace ubim {

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* branch_name(ABBranch b) {
    switch (b) {
    case ABBranch::direct: return "direct";
    case ABBranch::tau_form: return "tau";
    case ABBranch::taylor: return "taylor";
    }
    return "?";
}

ScaledValue split_bigreal(const BigReal& v) {
    if (v == 0) return ScaledValue{Cxd(0.0), 0.0};
    double lg = static_cast<double>(log(abs(v)));
    return ScaledValue{Cxd(v > 0 ? 1.0 : -1.0), lg};
}

ScaledValue split_bigcx(const BigCx& v) {
    BigReal a = abs(v);
    if (a == 0) return ScaledValue{Cxd(0.0), 0.0};
    double lg = static_cast<double>(log(a));
    BigCx m = v / a;
    return ScaledValue{Cxd(static_cast<double>(m.re), static_cast<double>(m.im)), lg};
}

void check_request(const GridRequest& req) {
    if (!(req.nu > 0)) throw std::domain_error("grid: nu must be positive");
    for (double x : req.xs)
        if (!(x > 0)) throw std::domain_error("grid: grid points must be positive");
    bool is_j = req.function == GridFunction::J_modulus ||
                req.function == GridFunction::J_phase;
    switch (req.method) {
    case GridMethod::airy:
        if (is_j) throw std::domain_error("grid: no Airy assembly for the J forms");
        if (req.order < 0 || req.order > 3)
            throw std::domain_error("grid: airy order outside 0..3");
        break;
    case GridMethod::lg:
        if (req.function == GridFunction::L)
            throw std::domain_error("grid: no LG form for the companion function");
        if (is_j) {
            int cap = req.function == GridFunction::J_modulus ? 6 : 5;
            if (req.order < 0 || req.order > cap)
                throw std::domain_error("grid: J expansion n_terms outside table");
        } else if (req.order < 2 || req.order > 13) {
            throw std::domain_error("grid: lg order outside 2..13");
        }
        break;
    case GridMethod::oracle:
        if (req.digits < 10 || req.digits > 200)
            throw std::domain_error("grid: oracle digits outside 10..200");
        break;
    }
}

GridRow eval_point_impl(const GridRequest& req, double x) {
    GridRow row;
    row.x = x;
    row.branch = "-";
    Cxd z(x);
    ScaledValue v;

    switch (req.method) {
    case GridMethod::airy: {
        BesselKind kind = BesselKind::K;
        if (req.function == GridFunction::L) kind = BesselKind::L;
        if (req.function == GridFunction::I_plus) kind = BesselKind::I_plus;
        if (req.function == GridFunction::I_minus) kind = BesselKind::I_minus;
        v = bessel_airy(kind, req.nu, z, ABMode::series_AB, req.order);
        row.branch = branch_name(AB_eval(req.nu, z, req.order).branch_used);
        break;
    }
    case GridMethod::lg: {
        switch (req.function) {
        case GridFunction::K: v = lg_K(req.nu, z, req.order); break;
        case GridFunction::I_plus: v = lg_I(req.nu, z, req.order, OrderSign::plus); break;
        case GridFunction::I_minus: v = lg_I(req.nu, z, req.order, OrderSign::minus); break;
        case GridFunction::J_modulus: v = j_modulus(req.nu, x, req.order); break;
        case GridFunction::J_phase:
            v = ScaledValue{Cxd(j_phase(req.nu, x, req.order)), 0.0};
            break;
        case GridFunction::L: break; // rejected up front
        }
        break;
    }
    case GridMethod::oracle: {
        PrecisionContext ctx;
        ctx.digits = req.digits;
        PrecisionScope scope(static_cast<unsigned>(req.digits) + 10);
        BigReal t = BigReal(req.nu) * BigReal(x);
        switch (req.function) {
        case GridFunction::K: v = split_bigreal(k_iv(req.nu, t, ctx)); break;
        case GridFunction::L: v = split_bigreal(l_iv(req.nu, t, ctx)); break;
        case GridFunction::I_plus:
            v = split_bigcx(i_iv(req.nu, BigCx(t, BigReal(0)), 1, ctx));
            break;
        case GridFunction::I_minus:
            v = split_bigcx(i_iv(req.nu, BigCx(t, BigReal(0)), -1, ctx));
            break;
        case GridFunction::J_modulus: {
            // scale split matches the expansion route: e^{nu pi/2} carried in
            // log_scale, everything else in the mantissa
            ScaledValue j = split_bigcx(j_iv(req.nu, t, ctx));
            v.mantissa = Cxd(std::exp(j.abs_log() - kPi * req.nu / 2.0));
            v.log_scale = kPi * req.nu / 2.0;
            break;
        }
        case GridFunction::J_phase: {
            BigCx j = j_iv(req.nu, t, ctx);
            double ph = std::atan2(static_cast<double>(j.im), static_cast<double>(j.re));
            v = ScaledValue{Cxd(ph), 0.0};
            break;
        }
        }
        break;
    }
    }
    row.mantissa = v.mantissa;
    row.log_scale = v.log_scale;
    return row;
}

GridRow eval_point(const GridRequest& req, double x) {
    try {
        return eval_point_impl(req, x);
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string(e.what()) + " (at x = " +
                                std::to_string(x) + ")");
    }
}

} // namespace

std::vector<GridRow> evaluate_grid_serial(const GridRequest& req) {
    check_request(req);
    std::vector<GridRow> out(req.xs.size());
    for (std::size_t i = 0; i < req.xs.size(); ++i) out[i] = eval_point(req, req.xs[i]);
    return out;
}

std::vector<GridRow> evaluate_grid(const GridRequest& req) {
    check_request(req);
    std::vector<GridRow> out(req.xs.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(req.xs.size()); ++i) {
        try {
            out[static_cast<std::size_t>(i)] =
                eval_point(req, req.xs[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace ubim
