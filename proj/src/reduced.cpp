#include "rheat/reduced.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/tools/roots.hpp>

namespace rheat {

double sys1_invariant(const Parameters& P, double x, double h2, double h2_p) {
    return 4 * x * x * h2_p - 2 * x * h2 * h2 - (1 + 2 * (P.n - 2) * x) * h2;
}

ReducedSystemResidual sys1_residual(const Parameters& P, double x, double h2, double h2_p, double c_int) {
    const double q = P.q;
    ReducedSystemResidual r;
    r.c_int = c_int;
    r.first = sys1_invariant(P, x, h2, h2_p) - c_int;
    r.second = 4 * x * h2_p - q * (2 + q) / 4 * h2 * h2 + 2 * h2 + P.n - 1;
    return r;
}

ReducedSystemResidual sys2_residual(const Parameters& P, double x, double h, double h1, double h2, double h3) {
    const double n = P.n;
    ReducedSystemResidual r;
    r.first = 4 * x * x * h2 - (12 * x * h + 2 * (n - 6) * x + 1) * h1 + 4 * h * h * h - 6 * h * h +
              2 * (3 - 2 * n) * h;
    r.second = 4 * x * x * x * h3 - x * (4 * x * h + 2 * (n - 13) * x + 1) * h2 +
               (6 * x * h * h + (2 * (n - 12) * x + 1) * h + 9 * (4 - n) * x - 1.5) * h1 - 12 * x * x * h1 * h1 -
               0.5 * (2 * h * h - 2 * h + 1 - n) * (h * h - 2 * h + 5 - 2 * n);
    return r;
}

std::vector<double> sys2_constant_solutions(const Parameters& P, double lo, double hi, double tol) {
    // For constant h3 the system does not depend on x.
    auto f1 = [&](double h) { return sys2_residual(P, 0, h, 0, 0, 0).first; };
    auto f2 = [&](double h) { return sys2_residual(P, 0, h, 0, 0, 0).second; };

    std::vector<double> roots;
    auto add = [&](double h) {
        if (std::fabs(f2(h)) > tol) return;
        for (double r : roots)
            if (std::fabs(r - h) <= 10 * tol) return;
        roots.push_back(h);
    };

    const int samples = 4000;
    double a = lo, fa = f1(a);
    for (int i = 1; i <= samples; ++i) {
        double b = lo + (hi - lo) * i / samples, fb = f1(b);
        if (fa == 0) add(a);
        if (fa * fb < 0) {
            boost::uintmax_t iters = 200;
            auto brk = boost::math::tools::toms748_solve(
                f1, a, b, fa, fb, [](double u, double v) { return std::fabs(u - v) <= 1e-15 * (1 + std::fabs(u)); },
                iters);
            add(0.5 * (brk.first + brk.second));
        }
        a = b;
        fa = fb;
    }
    if (fa == 0) add(a);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace rheat
