#include "rheat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rheat/errors.hpp"
#include "rheat/residuals.hpp"

namespace rheat {

SampleBox sample_box(const ExactSolutionEntry& e) {
    switch (e.id) {
        case SolutionId::USOL1: {
            // Stay on the side of t = -c where the base is positive.
            double c = e.constant("c");
            double sign = -e.params.k * e.params.q;
            if (sign > 0) return {-c + 0.1, -c + 2.1, 0.5, 2};
            return {-c - 2.1, -c - 0.1, 0.5, 2};
        }
        case SolutionId::USOL2: return {0, 1, 0.5, 3};
        case SolutionId::USOL3:
        case SolutionId::USOL4: return {0, 1, 0.5, 2};
        case SolutionId::USOL5:
        case SolutionId::USOL6: return {0.1, 1, 0.5, 2};
        case SolutionId::USOL2_CUTOFF: return {0.5, 1.5, 0.05, 1.4};
        case SolutionId::TWODIM_USOL2: return {0.5, 2, 0.5, 3};
        case SolutionId::TWODIM_USOL2_CUTOFF: return {0.5, 2, 0.05, 0.95};
        case SolutionId::NONSIM1_CUTOFF: {
            double al = e.constant("alpha"), be = e.constant("beta");
            double t_lo = be + 0.05 * (al - be), t_hi = al - 0.25 * (al - be);
            return {t_lo, t_hi, 0.05, 0.95 * std::sqrt(3 * (al - t_hi))};
        }
    }
    throw ConfigError("unknown solution id");
}

namespace {

bool strictly_inside(const ExactSolutionEntry& e, double t, double r) {
    if (!e.is_cutoff()) return true;
    auto fronts = front_radii(e, t);
    if (fronts.empty()) return false;
    if (e.id == SolutionId::NONSIM1_CUTOFF) {
        double al = e.constant("alpha"), be = e.constant("beta");
        double outer = 3 * (al - t) - r * r, inner = 3 * (t - be) + r * r;
        return outer > 1e-9 && inner > 1e-9;
    }
    return r < fronts.front() * (1 - 1e-9);
}

}  // namespace

CatalogCheck verify_entry(const ExactSolutionEntry& e, int nt, int nr) {
    if (nt < 2 || nr < 2) throw ConfigError("grid must be at least 2x2");
    CatalogCheck out;
    out.entry = e;
    SampleBox b = sample_box(e);
    for (int i = 0; i < nt; ++i) {
        double t = b.t_lo + (b.t_hi - b.t_lo) * i / (nt - 1);
        for (int j = 0; j < nr; ++j) {
            double r = b.r_lo + (b.r_hi - b.r_lo) * j / (nr - 1);
            if (!e.valid(t, r) || !strictly_inside(e, t, r)) {
                ++out.skipped;
                continue;
            }
            Jet2 jet = eval_exact(e, t, r);
            double res = pde_residual(e.params, jet, r);
            double sc = std::fabs(res) / pde_residual_scale(e.params, jet);
            out.samples.push_back({t, r, jet.u, res, sc});
            out.max_scaled = std::max(out.max_scaled, sc);
        }
    }
    return out;
}

FoliationCheck verify_pair(const GhPair& pair, int nx, int nv, int random_points) {
    if (nx < 2 || nv < 2) throw ConfigError("grid must be at least 2x2");
    FoliationCheck out;
    out.id = pair.id;
    const Parameters& P = pair.params;
    for (int i = 0; i < nx; ++i) {
        double x = 0.1 + 1.9 * i / (nx - 1);
        for (int j = 0; j < nv; ++j) {
            double v = 0.2 + 1.8 * j / (nv - 1);
            if (!pair.violation(x, v).empty()) continue;
            GHJet g = pair.eval(x, v);
            auto [R1, R2] = resolving_residuals(P, x, v, g);
            double sc = std::max(std::fabs(R1), std::fabs(R2)) / resolving_scale(P, v, g);
            double d = similarity_defect(P, x, v, g.G.val, g.H.val);
            out.grid.push_back({x, v, R1, R2, d, sc});
            out.max_scaled = std::max(out.max_scaled, sc);
        }
    }
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ux(0.05, 3.0), uv(0.1, 3.0);
    out.min_abs_defect = INFINITY;
    for (int s = 0; s < random_points; ++s) {
        double x = ux(rng), v = uv(rng);
        if (!pair.violation(x, v).empty()) continue;
        GHJet g = pair.eval(x, v);
        double d = std::fabs(similarity_defect(P, x, v, g.G.val, g.H.val));
        ++out.defect_samples;
        out.min_abs_defect = std::min(out.min_abs_defect, d);
        if (d <= 1e-6) ++out.defect_violations;
    }
    return out;
}

}  // namespace rheat
