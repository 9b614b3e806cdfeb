#ifndef UBIM_AIRY_EXPANSIONS_HPP
#define UBIM_AIRY_EXPANSIONS_HPP

#include "ubim/complex.hpp"
#include "ubim/oracle.hpp"
#include "ubim/scaled.hpp"

namespace ubim {

// Slowly varying coefficient functions A(nu,z), B(nu,z) of the Airy-type
// representation, and the assembled Bessel approximants built from them.

enum class ABBranch { direct, tau_form, taylor };

struct ABPair {
    Cxd A{};
    Cxd B{};
    ABBranch branch_used = ABBranch::direct;
};

enum class BesselKind { K, L, I_plus, I_minus };
enum class ABMode { series_AB, exact_AB };

// truncated expansions A = 1 + sum A_s/nu^{2s}, B = nu^{-4/3} sum B_s/nu^{2s};
// branch chosen by |z-1| and by reality of z, or forced by the caller
ABPair AB_eval(double nu, const Cxd& z, int s_max);
ABPair AB_eval(double nu, const Cxd& z, int s_max, ABBranch force);

// A, B recovered exactly from oracle Bessel values and rotated Airy functions;
// positive real z only
ABPair AB_exact(double nu, const Cxd& z, const PrecisionContext& ctx = PrecisionContext{});

// K, L, I_{+-i nu} at argument nu*z via the Airy assembly
ScaledValue bessel_airy(BesselKind which, double nu, const Cxd& z,
                        ABMode mode = ABMode::series_AB, int s_max = 3,
                        const PrecisionContext& ctx = PrecisionContext{});

// largest x-zero of the companion assembly (oracle-free safeguard bisection
// around the zeros-module estimate)
double l_boundary(double nu);

// envelope: (K^2 + L^2)^{1/2} in the oscillatory range, K itself beyond
double envelope_N(double nu, double x, const PrecisionContext& ctx = PrecisionContext{});

// scaled error of the four-term assembly against the oracle, and its log10
double chi_diagnostic(double nu, double x, int s_max,
                      const PrecisionContext& ctx = PrecisionContext{});
double omega3(double nu, double x, int s_max,
              const PrecisionContext& ctx = PrecisionContext{});

} // namespace ubim

#endif
