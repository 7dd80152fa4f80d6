#pragma once

#include "rheat/jet.hpp"
#include "rheat/params.hpp"

namespace rheat {

// u_t - u_rr - (n-1) u_r / r - k u|u|^q.
double pde_residual(const Parameters& P, const Jet2& jet, double r);

// Scale used to judge a residual: 1 + |u_t| + |u_rr| + |k| |u|^{q+1}.
double pde_residual_scale(const Parameters& P, const Jet2& jet);

struct SimilarityProfileJet {
    double value = 0, d1 = 0, d2 = 0;
};

enum class SimilarityForm {
    XI_FORM,  // profile U(xi), xi = r / sqrt(t) or r / sqrt(T - t)
    X_FORM,   // profile V(x), x = t / r^2, u = r^p V
};

double similarity_ode_residual(const Parameters& P, SimilarityForm form, double point,
                               const SimilarityProfileJet& prof);

}  // namespace rheat
