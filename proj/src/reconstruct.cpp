#include "rheat/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "rheat/errors.hpp"

namespace rheat {

namespace odeint = boost::numeric::odeint;

namespace {

using Stepper = odeint::runge_kutta_dopri5<double, double, double, double, odeint::vector_space_algebra>;

// Integrates y' = f(s, y) from a to b; backward intervals are mapped to forward ones.
template <class F>
double integrate(F f, double y, double a, double b, double atol, double rtol) {
    if (a == b) return y;
    double h = (b - a) * 1e-3;
    if (b > a) {
        auto rhs = [&](const double& u, double& du, double s) { du = f(s, u); };
        odeint::integrate_adaptive(odeint::make_controlled<Stepper>(atol, rtol), rhs, y, a, b, h);
    } else {
        auto rhs = [&](const double& u, double& du, double s) { du = -f(-s, u); };
        odeint::integrate_adaptive(odeint::make_controlled<Stepper>(atol, rtol), rhs, y, -a, -b, -h);
    }
    if (!std::isfinite(y)) throw NumericError("reconstruction produced a non-finite value");
    return y;
}

}  // namespace

GHJet Reconstruction::field(double x, double v) const {
    if (violation_) {
        std::string why = violation_(x, v);
        if (!why.empty()) throw DomainError("reconstruction left the domain of (G,H): " + why);
    }
    return gh_(x, v);
}

double Reconstruction::along_r(double t, double r_from, double u_from, double r_to) const {
    const double p = P_.p;
    auto f = [&](double r, double u) {
        if (r <= 0) throw DomainError("reconstruction requires r > 0");
        double rp = std::pow(r, p);
        return rp / r * field(t / (r * r), u / rp).H.val;
    };
    return integrate(f, u_from, r_from, r_to, opt_.atol, opt_.rtol);
}

double Reconstruction::along_t(double r, double t_from, double u_from, double t_to) const {
    const double p = P_.p;
    const double rp = std::pow(r, p), x_scale = 1 / (r * r);
    auto f = [&](double t, double u) { return rp * x_scale * field(t * x_scale, u / rp).G.val; };
    return integrate(f, u_from, t_from, t_to, opt_.atol, opt_.rtol);
}

double Reconstruction::operator()(double t, double r) const {
    double u = along_r(seed_.t0, seed_.r0, seed_.u0, r);
    return along_t(r, seed_.t0, u, t);
}

Reconstruction reconstruct(const Parameters& P, GHField gh, std::function<std::string(double, double)> violation,
                           const Seed& seed, const Window& w, const ReconstructOptions& opt) {
    if (!gh) throw ConfigError("reconstruct needs a (G,H) field");
    if (seed.r0 <= 0 || w.r_lo <= 0) throw DomainError("reconstruction requires r > 0");
    if (w.t_lo > w.t_hi || w.r_lo > w.r_hi) throw ConfigError("empty reconstruction window");

    Reconstruction rec;
    rec.P_ = P;
    rec.gh_ = std::move(gh);
    rec.violation_ = std::move(violation);
    rec.seed_ = seed;
    rec.opt_ = opt;

    auto check = [&](double t, double r, double u) {
        double rp = std::pow(r, P.p);
        double x = t / (r * r), v = u / rp;
        GHJet j = rec.field(x, v);
        auto [R1, R2] = resolving_residuals(P, x, v, j);
        double rel = std::max(std::fabs(R1), std::fabs(R2)) / resolving_scale(P, v, j);
        rec.max_residual_ = std::max(rec.max_residual_, rel);
        if (rel > opt.consistency_tol)
            throw ConsistencyError("resolving system not satisfied at (t, r) = (" + std::to_string(t) + ", " +
                                   std::to_string(r) + "): scaled residual " + std::to_string(rel));
    };

    check(seed.t0, seed.r0, seed.u0);
    const int m = std::max(2, opt.samples);
    for (int i = 0; i < m; ++i) {
        double r = w.r_lo + (w.r_hi - w.r_lo) * i / (m - 1);
        double u_line = rec.along_r(seed.t0, seed.r0, seed.u0, r);
        for (int j = 0; j < m; ++j) {
            double t = w.t_lo + (w.t_hi - w.t_lo) * j / (m - 1);
            check(t, r, rec.along_t(r, seed.t0, u_line, t));
        }
    }

    // Corners: r-line then t-line against t-line then r-line.
    for (double t : {w.t_lo, w.t_hi})
        for (double r : {w.r_lo, w.r_hi}) {
            double a = rec(t, r);
            double b = rec.along_r(t, seed.r0, rec.along_t(seed.r0, seed.t0, seed.u0, t), r);
            double d = std::fabs(a - b) / std::max(1.0, std::fabs(a));
            rec.path_discrepancy_ = std::max(rec.path_discrepancy_, d);
        }
    if (rec.path_discrepancy_ > opt.path_tol)
        throw ConsistencyError("reconstruction depends on the integration path: " +
                               std::to_string(rec.path_discrepancy_));
    return rec;
}

Reconstruction reconstruct(const GhPair& pair, const Seed& seed, const Window& window,
                           const ReconstructOptions& opt) {
    return reconstruct(pair.params, pair.eval, pair.violation, seed, window, opt);
}

}  // namespace rheat
