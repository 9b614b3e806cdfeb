#ifndef UBIM_KAPPA_DERIVE_HPP
#define UBIM_KAPPA_DERIVE_HPP

#include <vector>

#include "ubim/precision.hpp"

namespace ubim {

// On-the-fly derivation of the zero-expansion coefficients kappa^_s(z0) for
// orders beyond the built-in closed forms, by solving the shifted-Airy
// proportionality condition as a formal series and re-expanding the zero
// condition.  Also reports the intermediate Upsilon_s(z0) values.
struct KappaDerived {
    std::vector<BigReal> kappa;   // kappa[s], s = 0..s_max; kappa[0] = z0
    std::vector<BigReal> upsilon; // upsilon[s], s = 1..s_max; upsilon[0] = 0
};

KappaDerived derive_kappa(const BigReal& z0, int s_max, int digits);

} // namespace ubim

#endif
