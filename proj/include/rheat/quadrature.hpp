#pragma once

#include <functional>

namespace rheat {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-12;
    int max_intervals = 2000;
    double divergence_cap = 1e8;  // partial integrals beyond this count as divergent
};

struct QuadResult {
    double value = 0;
    double error = 0;
    bool converged = false;
    bool divergent = false;
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7-15: the interval with the largest error estimate is bisected.
QuadResult integrate_gk(const Integrand& f, double a, double b, const QuadOptions& opt = {});

// How an endpoint is treated. SQRT maps r = a + s^2 (or b - s^2), which removes
// integrable r^{-1/2} singularities and square-root cusps.
enum class EndpointKind { REGULAR, SQRT };

QuadResult integrate(const Integrand& f, double a, double b, EndpointKind left, EndpointKind right,
                     const QuadOptions& opt = {});

// Integral over [a, inf). The tail beyond r_cut is mapped to (0, 1] by r = r_cut / s;
// if that fails, r_cut is doubled until the increments vanish or the partial
// integral exceeds the divergence cap.
QuadResult integrate_to_infinity(const Integrand& f, double a, EndpointKind left, double r_cut,
                                 const QuadOptions& opt = {});

}  // namespace rheat
