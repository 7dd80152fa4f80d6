#include "rheat/residuals.hpp"

#include <cmath>

#include "rheat/errors.hpp"

namespace rheat {

namespace {
void check_finite(double a, double b, double c, double d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw NumericError("non-finite jet component");
}
}  // namespace

double pde_residual(const Parameters& P, const Jet2& j, double r) {
    check_finite(j.u, j.u_t, j.u_r, j.u_rr);
    if (!(r > 0)) throw DomainError("pde_residual: requires r > 0");
    return j.u_t - j.u_rr - (P.n - 1) * j.u_r / r - P.k * signed_pow(j.u, P.q + 1);
}

double pde_residual_scale(const Parameters& P, const Jet2& j) {
    return 1 + std::fabs(j.u_t) + std::fabs(j.u_rr) + std::fabs(P.k) * std::pow(std::fabs(j.u), P.q + 1);
}

double similarity_ode_residual(const Parameters& P, SimilarityForm form, double point,
                               const SimilarityProfileJet& f) {
    check_finite(point, f.value, f.d1, f.d2);
    if (form == SimilarityForm::XI_FORM) {
        if (point == 0) throw DomainError("similarity_ode_residual: xi must be nonzero");
        double xi = point, U = f.value;
        return f.d2 + ((P.n - 1) / xi - 0.5 * P.k * xi) * f.d1 - 0.5 * P.q * P.k * U +
               P.k * U * std::pow(std::fabs(U), P.q);
    }
    double x = point, V = f.value, p = P.p;
    return 4 * x * x * f.d2 - (1 + (2 * p + P.n - 4) * 2 * x) * f.d1 + p * (p + P.n - 2) * V +
           P.k * signed_pow(V, P.q + 1);
}

}  // namespace rheat
