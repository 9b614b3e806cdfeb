#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ubim/grid.hpp"

using namespace ubim;

namespace {

double time_ms(std::vector<GridRow> (*fn)(const GridRequest&), const GridRequest& req,
               int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        auto rows = fn(req);
        auto t1 = std::chrono::steady_clock::now();
        (void)rows;
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

} // namespace

int main() {
    GridRequest req;
    req.nu = 10.0;
    for (int i = 1; i <= 160; ++i) {
        double x = 0.025 * i;
        if (x > 0.7 && x < 1.3) continue; // keep the lg case out of its exclusion disc
        req.xs.push_back(x);
    }
    req.function = GridFunction::K;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("grid: %zu points, nu = %g, threads = %d\n", req.xs.size(), req.nu,
                threads);

    struct Case {
        const char* name;
        GridMethod method;
        int order;
    } cases[] = {
        {"airy s=3", GridMethod::airy, 3},
        {"lg    n=7", GridMethod::lg, 7},
    };
    for (const Case& c : cases) {
        req.method = c.method;
        req.order = c.order;
        double ser = time_ms(evaluate_grid_serial, req, 3);
        double par = time_ms(evaluate_grid, req, 3);
        std::printf("%-10s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                    c.name, ser, par, ser / par);
    }
    return 0;
}
