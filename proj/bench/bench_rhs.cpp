// Serial versus OpenMP right-hand side, and a full run with each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "rheat/catalog.hpp"
#include "rheat/simulator.hpp"

using namespace rheat;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = INFINITY;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    auto P = make_parameters(2.5, 2, -1);
    std::printf("%10s %14s %14s %9s %12s\n", "J", "serial [s]", "parallel [s]", "speedup", "max |diff|");
    for (int J : {1000, 10000, 100000, 1000000}) {
        std::vector<double> u(J + 1), a, b;
        const double dr = 4.5 / J;
        for (int j = 0; j <= J; ++j) u[j] = 1 + 0.5 * std::sin(7.0 * j / J);
        int reps = std::max(3, 2000000 / J);
        double ts = best_of(reps, [&] { rhs_serial(P, 0.5, dr, false, u, a); });
        double tp = best_of(reps, [&] { rhs_parallel(P, 0.5, dr, false, u, b); });
        double diff = 0;
        for (int j = 0; j <= J; ++j) diff = std::max(diff, std::fabs(a[j] - b[j]));
        std::printf("%10d %14.3e %14.3e %9.2f %12.3e\n", J, ts, tp, ts / tp, diff);
    }

    auto e = default_entry(SolutionId::USOL6);
    SimConfig c;
    c.params = e.params;
    c.entry = e;
    c.r_min = 0.5;
    c.r_max = 5;
    c.J = 900;
    c.t_end = 0.05;
    RadialField init = field_from_entry(c, e, 0);
    Trajectory ts_run, tp_run;
    double ts = best_of(1, [&] { ts_run = run(c, init); });
    c.parallel = true;
    double tp = best_of(1, [&] { tp_run = run(c, init); });
    double diff = 0;
    for (int j = 0; j <= c.J; ++j)
        diff = std::max(diff, std::fabs(ts_run.snapshots.back().u[j] - tp_run.snapshots.back().u[j]));
    std::printf("run J=%d, %ld steps: serial %.3f s, parallel %.3f s, max |diff| %.3e\n", c.J, ts_run.steps, ts, tp,
                diff);
    return 0;
}
