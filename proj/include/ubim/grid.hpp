#ifndef UBIM_GRID_HPP
#define UBIM_GRID_HPP

#include <string>
#include <vector>

#include "ubim/oracle.hpp"
#include "ubim/scaled.hpp"

namespace ubim {

// Grid evaluation kernels behind the eval command.  The parallel entry point
// and the serial reference produce identical rows; the tests compare them
// bitwise and the benchmark tool times them against each other.

enum class GridFunction { K, L, I_plus, I_minus, J_modulus, J_phase };
enum class GridMethod { lg, airy, oracle };

struct GridRequest {
    double nu = 0.0;
    std::vector<double> xs;
    GridFunction function = GridFunction::K;
    GridMethod method = GridMethod::airy;
    int order = 3;   // lg: n, airy: s_max, J expansions: n_terms
    int digits = 40; // oracle working precision
};

struct GridRow {
    double x = 0.0;
    Cxd mantissa{};
    double log_scale = 0.0;
    std::string branch; // coefficient branch for the airy method, "-" otherwise
};

std::vector<GridRow> evaluate_grid(const GridRequest& req);        // OpenMP
std::vector<GridRow> evaluate_grid_serial(const GridRequest& req); // reference

} // namespace ubim

#endif
