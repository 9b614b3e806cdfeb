#include <stdexcept>

#include "ubim/branch_maps.hpp"
#include "ubim/coeff_engine.hpp"
#include "ubim/turning_tables.hpp"

namespace ubim {

namespace {

const std::vector<BigReal>& taylor_for(int s, const KappaTable& table) {
    auto it = table.taylor.find(s);
    if (it != table.taylor.end()) return it->second;
    auto jt = turning_tables().kappa.find(s);
    if (jt == turning_tables().kappa.end())
        throw std::out_of_range("kappa_hat: no Taylor series for requested order");
    return jt->second;
}

} // namespace

BigReal kappa_hat_hp(int s, const BigReal& z, const KappaTable& table) {
    if (!(z > 0) || z > 1) throw std::domain_error("kappa_hat: z must be in (0,1]");
    if (!table.has(s)) throw std::out_of_range("kappa_hat: order beyond loaded table");
    BigReal w = z - 1;
    if (abs(w) < BigReal(1) / 10) {
        const auto& c = taylor_for(s, table);
        BigReal acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * w + c[i];
        return acc;
    }
    Frame<BigReal> f = map_point(Cx<BigReal>(z, BigReal(0)));
    return kappa_hat_terms(table, s, z, f.sigma.re, f.zeta.re);
}

double kappa_hat(int s, double z, const KappaTable& table) {
    PrecisionScope scope(60);
    return static_cast<double>(kappa_hat_hp(s, BigReal(z), table));
}

} // namespace ubim
