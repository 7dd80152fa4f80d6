#pragma once

#include <vector>

#include "rheat/params.hpp"

namespace rheat {

struct ReducedSystemResidual {
    double first = 0, second = 0;
    double c_int = 0;  // integration constant used by the first sys1 equation
};

// Two-term reduced system for h2(x):
//   4x^2 h2' - 2x h2^2 - (1 + 2(n-2)x) h2 = c_int
//   4x h2' - q(2+q)/4 h2^2 + 2 h2 + n - 1 = 0
ReducedSystemResidual sys1_residual(const Parameters& P, double x, double h2, double h2_p, double c_int);

// Left-hand side of the first sys1 equation, i.e. the value c_int must take.
double sys1_invariant(const Parameters& P, double x, double h2, double h2_p);

// Three-term reduced pair for h3(x) (second- and third-order equations).
ReducedSystemResidual sys2_residual(const Parameters& P, double x, double h3, double h3_p, double h3_pp,
                                    double h3_ppp);

// Constants h3 solving both sys2 equations, found by bracketing and refining
// roots of the first equation on [lo, hi] and keeping those that satisfy the second.
std::vector<double> sys2_constant_solutions(const Parameters& P, double lo = -5, double hi = 5,
                                            double tol = 1e-10);

}  // namespace rheat
