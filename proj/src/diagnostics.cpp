#include "rheat/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rheat/errors.hpp"
#include "rheat/special.hpp"

namespace rheat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

struct Support {
    bool empty = false;
    double lo = 0, hi = 0;
    bool infinite = true;
};

Support support(const ExactSolutionEntry& e, double t) {
    Support s;
    switch (e.id) {
        case SolutionId::USOL2_CUTOFF:
        case SolutionId::TWODIM_USOL2_CUTOFF: {
            auto f = front_radii(e, t);
            s.infinite = false;
            if (f.empty()) {
                s.empty = true;
                return s;
            }
            s.hi = f.front();
            return s;
        }
        case SolutionId::NONSIM1_CUTOFF: {
            double al = e.constant("alpha"), be = e.constant("beta");
            s.infinite = false;
            if (t >= al) {
                s.empty = true;
                return s;
            }
            s.hi = std::sqrt(3 * (al - t));
            if (t < be) s.lo = std::sqrt(3 * (be - t));
            return s;
        }
        default: return s;
    }
}

double length_scale(const ExactSolutionEntry& e, double t) {
    double a = std::fabs(e.constant("alpha", 1.0));
    return std::max(1.0, std::sqrt(std::max(a, 1.0) * std::fabs(t)));
}

Jet2 jet_at(const ExactSolutionEntry& e, double t, double r) {
    try {
        return eval_exact(e, t, r);
    } catch (const DomainError&) {
        return {kNaN, kNaN, kNaN, kNaN};
    }
}

double energy_density(const Parameters& P, double u) {
    if (std::fabs(P.q + 2) < 1e-14) return std::log(std::fabs(u));
    return std::pow(std::fabs(u), P.q + 2) / (P.q + 2);
}

struct Integral {
    std::optional<double> value;
    double error = 0;
    bool divergent = false;
};

Integral integrate_over(const ExactSolutionEntry& e, double t, const Integrand& f, const DiagnosticsOptions& opt) {
    Support s = support(e, t);
    Integral out;
    if (s.empty) {
        out.value = 0.0;
        return out;
    }
    QuadResult q;
    if (s.infinite) {
        double rc = opt.r_cut > 0 ? opt.r_cut : 20 * length_scale(e, t);
        q = integrate_to_infinity(f, s.lo, EndpointKind::SQRT, rc, opt.quad);
    } else {
        q = integrate(f, s.lo, s.hi, EndpointKind::SQRT, EndpointKind::SQRT, opt.quad);
    }
    if (q.divergent || !q.converged || !std::isfinite(q.value)) {
        out.divergent = true;
        return out;
    }
    out.value = q.value;
    out.error = q.error;
    return out;
}

struct Integrals {
    Integral H, E, S;
};

Integrals heat_integrals(const ExactSolutionEntry& e, double t, const DiagnosticsOptions& opt, bool want_E = true) {
    const Parameters& P = e.params;
    const bool planar = planar_reading(e);
    auto wH = [&](double r) { return planar ? r : std::pow(r, P.n - 1); };
    auto wE = [&](double r) { return std::pow(r, P.n - 1); };
    Integrals I;
    I.H = integrate_over(e, t, [&](double r) { return jet_at(e, t, r).u * wH(r); }, opt);
    I.S = integrate_over(
        e, t, [&](double r) { return P.k * signed_pow(jet_at(e, t, r).u, P.q + 1) * wH(r); }, opt);
    if (want_E)
        I.E = integrate_over(
            e, t,
            [&](double r) {
                Jet2 j = jet_at(e, t, r);
                return (0.5 * j.u_r * j.u_r - P.k * energy_density(P, j.u)) * wE(r);
            },
            opt);
    return I;
}

struct Limit {
    std::optional<double> value;
    double error = 0;
    bool divergent = false;
};

// lim_{r -> 0} g(r) from g(h), g(h/2), g(h/4): a geometric (Aitken) tail when the
// differences contract, otherwise the quadratic Richardson combination.
Limit origin_limit(const std::function<double(double)>& g, double h) {
    double f0 = g(h), f1 = g(h / 2), f2 = g(h / 4);
    Limit L;
    if (!std::isfinite(f0) || !std::isfinite(f1) || !std::isfinite(f2)) {
        L.divergent = true;
        return L;
    }
    double d1 = f1 - f0, d2 = f2 - f1;
    double scale = 1 + std::fabs(f2);
    if (std::fabs(d2) <= 1e-14 * scale) {
        L.value = f2;
        L.error = std::fabs(d2);
        return L;
    }
    double rho = d1 != 0 ? d2 / d1 : 2.0;
    if (std::fabs(rho) >= 1) {
        L.divergent = true;
        return L;
    }
    if (rho > 0) {
        L.value = f2 + d2 * rho / (1 - rho);
        L.error = std::fabs(d2 * rho / (1 - rho)) * rho + 1e-15 * scale;
    } else {
        L.value = (8 * f2 - 6 * f1 + f0) / 3;
        L.error = std::fabs(*L.value - (2 * f2 - f1));
    }
    return L;
}

void put(DiagnosticsReport& rep, const std::string& name, std::optional<double>& slot, const Integral& I) {
    rep.divergent[name] = I.divergent;
    if (!I.divergent) {
        slot = I.value;
        rep.errors[name] = I.error;
    }
}

void put(DiagnosticsReport& rep, const std::string& name, std::optional<double>& slot, const Limit& L) {
    rep.divergent[name] = L.divergent;
    if (!L.divergent) {
        slot = L.value;
        rep.errors[name] = L.error;
    }
}

double probe_step(double t, const DiagnosticsOptions& opt) {
    if (opt.dt_probe > 0) return opt.dt_probe;
    return t != 0 ? 1e-4 * std::fabs(t) : 1e-4;
}

}  // namespace

bool planar_reading(const ExactSolutionEntry& e) {
    if (e.id == SolutionId::TWODIM_USOL2 || e.id == SolutionId::TWODIM_USOL2_CUTOFF) return true;
    return !is_integer(e.params.n);
}

DiagnosticsReport diagnostics_report(const ExactSolutionEntry& e, double t, const DiagnosticsOptions& opt) {
    const Parameters& P = e.params;
    DiagnosticsReport rep;
    rep.t = t;
    rep.planar = planar_reading(e);

    Integrals I = heat_integrals(e, t, opt);
    put(rep, "H", rep.H, I.H);
    put(rep, "E", rep.E, I.E);
    put(rep, "S", rep.S, I.S);

    Support s = support(e, t);
    const double m = rep.planar ? 1.0 : P.n - 1;
    if (s.empty || s.lo > 0) {
        // The origin lies outside the support.
        rep.F = 0.0;
        rep.errors["F"] = 0;
        rep.divergent["F"] = false;
        if (rep.planar) {
            rep.point_source_term = 0.0;
            rep.combined_point = 0.0;
        }
    } else {
        double h = opt.r0;
        if (!s.infinite) h = std::min(h, 1e-3 * s.hi);
        Limit F = origin_limit([&](double r) { return -std::pow(r, m) * jet_at(e, t, r).u_r; }, h);
        put(rep, "F", rep.F, F);
        if (rep.planar) {
            Limit U = origin_limit([&](double r) { return jet_at(e, t, r).u; }, h);
            Limit C = origin_limit(
                [&](double r) {
                    Jet2 j = jet_at(e, t, r);
                    return -r * j.u_r + P.nu * j.u;
                },
                h);
            Limit PT = U;
            if (PT.value) {
                PT.value = P.nu * *U.value;
                PT.error = std::fabs(P.nu) * U.error;
            }
            put(rep, "point_source_term", rep.point_source_term, PT);
            put(rep, "combined_point", rep.combined_point, C);
        }
    }

    if (opt.derivatives) {
        double dt = probe_step(t, opt);
        rep.dt_probe = dt;
        bool can_probe = true;
        if (e.id == SolutionId::USOL2_CUTOFF || e.id == SolutionId::TWODIM_USOL2_CUTOFF) can_probe = t - dt > 0;
        if (can_probe) {
            Integrals lo = heat_integrals(e, t - dt, opt), hi = heat_integrals(e, t + dt, opt);
            if (lo.H.value && hi.H.value && !lo.H.divergent && !hi.H.divergent) {
                rep.dH_dt = (*hi.H.value - *lo.H.value) / (2 * dt);
                rep.errors["dH_dt"] = (lo.H.error + hi.H.error) / (2 * dt);
            }
            rep.divergent["dH_dt"] = !rep.dH_dt;
            if (lo.E.value && hi.E.value && !lo.E.divergent && !hi.E.divergent) {
                rep.dE_dt = (*hi.E.value - *lo.E.value) / (2 * dt);
                rep.errors["dE_dt"] = (lo.E.error + hi.E.error) / (2 * dt);
            }
            rep.divergent["dE_dt"] = !rep.dE_dt;
        } else {
            rep.notes.push_back("time probe crosses t = 0");
        }
    }
    return rep;
}

DiagnosticsReport diagnostics_report(const Parameters& P, const RadialField& f, bool planar) {
    DiagnosticsReport rep;
    rep.t = f.t;
    rep.planar = planar;
    rep.truncated = true;
    rep.notes.push_back("TRUNCATED: integrals over [r_min, r_max] only");
    const int J = f.J();
    const double h = f.dr;
    std::vector<double> ur(J + 1);
    for (int j = 1; j < J; ++j) ur[j] = (f.u[j + 1] - f.u[j - 1]) / (2 * h);
    ur[0] = (-3 * f.u[0] + 4 * f.u[1] - f.u[2]) / (2 * h);
    ur[J] = (3 * f.u[J] - 4 * f.u[J - 1] + f.u[J - 2]) / (2 * h);

    auto quad = [&](auto g) {
        double s = 0;
        if (J % 2 == 0) {
            for (int j = 0; j <= J; ++j) s += g(j) * (j == 0 || j == J ? 1 : (j % 2 ? 4 : 2));
            return s * h / 3;
        }
        for (int j = 0; j <= J; ++j) s += g(j) * (j == 0 || j == J ? 0.5 : 1.0);
        return s * h;
    };
    auto wH = [&](int j) { return planar ? f.r(j) : std::pow(f.r(j), P.n - 1); };
    auto wE = [&](int j) { return std::pow(f.r(j), P.n - 1); };
    rep.H = quad([&](int j) { return f.u[j] * wH(j); });
    rep.S = quad([&](int j) { return P.k * signed_pow(f.u[j], P.q + 1) * wH(j); });
    rep.E = quad([&](int j) { return (0.5 * ur[j] * ur[j] - P.k * energy_density(P, f.u[j])) * wE(j); });
    const double m = planar ? 1.0 : P.n - 1;
    rep.F = -std::pow(f.r_min, m) * ur[0];
    if (planar) {
        rep.point_source_term = P.nu * f.u[0];
        rep.combined_point = -f.r_min * ur[0] + P.nu * f.u[0];
    }
    for (const char* k : {"H", "E", "S", "F"}) rep.divergent[k] = false;
    return rep;
}

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::H: return "H";
        case Quantity::E: return "E";
        case Quantity::S: return "S";
        case Quantity::F: return "F";
        case Quantity::DH_DT: return "dH_dt";
    }
    return "?";
}

Quantity quantity_from_string(const std::string& s) {
    for (Quantity q : {Quantity::H, Quantity::E, Quantity::S, Quantity::F, Quantity::DH_DT})
        if (to_string(q) == s) return q;
    throw ConfigError("unknown quantity: " + s);
}

namespace {

double G(double x) { return gamma_fn(x).value; }
double F21(double a, double b, double c, double z) { return hyp2f1(a, b, c, z).value; }

bool twodim_smooth(const ExactSolutionEntry& e) {
    return e.id == SolutionId::TWODIM_USOL2 && e.branch == 1 && e.constant("c") == 0 && e.constant("alpha") > 0;
}

struct CuspTimes {
    double al, be, k;
};

CuspTimes cusp(const ExactSolutionEntry& e) { return {e.constant("alpha"), e.constant("beta"), e.params.k}; }

// The two heat expressions of the cusp solution.
double cusp_H_early(const CuspTimes& c, double t) {
    return kPi / 16 * std::pow(c.k, 0.25) * std::pow(3 * (c.al - c.be), 1.5) * std::pow(3 * (c.al - t), -0.25) *
           F21(0.25, 1.5, 3, (c.al - c.be) / (c.al - t));
}

double cusp_H_late(const CuspTimes& c, double t) {
    return 0.4 * std::sqrt(2 / kPi) * G(0.75) * G(0.75) * std::pow(c.k, 0.25) * std::pow(3 * (c.al - t), 1.25) *
           F21(-0.5, 1.5, 2.25, (c.al - t) / (c.al - c.be));
}

double cusp_dH_early(const CuspTimes& c, double t) {
    double z = (c.al - c.be) / (c.al - t);
    return -3 * kPi / 8 * std::pow(c.k, 0.25) * std::sqrt(3 * (c.al - c.be)) * std::pow(3 * (c.al - t), -0.25) *
           (F21(0.25, 0.5, 2, z) - F21(0.25, 1.5, 2, z));
}

double cusp_dH_late_reference(const CuspTimes& c, double t) {
    double z = (c.al - t) / (c.al - c.be);
    return -0.6 * std::sqrt(2 / kPi) * G(0.75) * G(0.75) * std::pow(c.k, 0.25) * std::pow(3 * (c.al - t), 0.25) *
           (2.5 * F21(-0.5, 1.5, 1.25, z) - z * F21(0.5, 1.5, 2.25, z));
}

double cusp_dH_late(const CuspTimes& c, double t) {
    double z = (c.al - t) / (c.al - c.be);
    return -0.4 * std::sqrt(2 / kPi) * G(0.75) * G(0.75) * std::pow(c.k, 0.25) * std::pow(3 * (c.al - t), 0.25) *
           (3.75 * F21(-0.5, 1.5, 2.25, z) - z * F21(0.5, 2.5, 3.25, z));
}

std::optional<double> cusp_form(const ExactSolutionEntry& e, Quantity q, double t, bool reference) {
    CuspTimes c = cusp(e);
    if (q != Quantity::H && q != Quantity::DH_DT) return std::nullopt;
    if (t > c.al) return 0.0;
    if (t == c.al || t == c.be) return std::nullopt;
    if (q == Quantity::H) return t < c.be ? cusp_H_early(c, t) : cusp_H_late(c, t);
    if (t < c.be) return cusp_dH_early(c, t);
    return reference ? cusp_dH_late_reference(c, t) : cusp_dH_late(c, t);
}

}  // namespace

std::optional<double> closed_form_reference(const ExactSolutionEntry& e, Quantity q, double t) {
    const double n = e.params.n;
    switch (e.id) {
        case SolutionId::USOL2_CUTOFF: {
            if (t <= 0) return std::nullopt;
            double be = e.constant("beta");
            switch (q) {
                case Quantity::H: return (n - 4) / (n - 1) * be * std::pow(t, n - 1);
                case Quantity::F: return (n - 2) * be * std::pow(t, n - 2);
                case Quantity::S: return -2 * be * std::pow(t, n - 2);
                case Quantity::DH_DT: return (n - 4) * be * std::pow(t, n - 2);
                default: return std::nullopt;
            }
        }
        case SolutionId::TWODIM_USOL2: {
            if (!twodim_smooth(e) || t <= 0) return std::nullopt;
            const double nu = e.params.nu, be = e.constant("beta");
            auto H = [&]() -> std::optional<double> {
                if (!(nu > 2)) return std::nullopt;
                return 4 * std::sqrt(kPi) / (std::pow(2, 1.5 * nu) * 3) * std::pow(nu + 2, (1 - nu) / 2) / (nu - 2) *
                       G(1 + nu / 2) / G((1 + nu) / 2) * be * std::pow(t, 1 - nu / 2);
            };
            switch (q) {
                case Quantity::E:
                    if (!(nu > 0)) return std::nullopt;
                    return 1 / (std::pow(2, 1.5 * nu) * 3) * nu * (nu * nu + 2 * nu + 6) *
                           std::pow(nu + 2, (1 - nu) / 2) * G(1 + nu / 2) * G(1.5 * nu) / G(2 + 2 * nu) * be *
                           std::pow(t, -(1 + 3 * nu) / 2);
                case Quantity::H: return H();
                case Quantity::S: {
                    auto h = H();
                    if (!h) return std::nullopt;
                    return -(nu - 2) / 2 * *h / t;
                }
                case Quantity::F:
                    if (!(nu > 0)) return std::nullopt;
                    return 0.0;
                case Quantity::DH_DT: {
                    auto h = H();
                    if (!h) return std::nullopt;
                    return (1 - nu / 2) * *h / t;
                }
            }
            return std::nullopt;
        }
        case SolutionId::NONSIM1_CUTOFF: return cusp_form(e, q, t, true);
        default: return std::nullopt;
    }
}

std::optional<double> corrected_closed_form(const ExactSolutionEntry& e, Quantity q, double t) {
    switch (e.id) {
        case SolutionId::TWODIM_USOL2: {
            if (!twodim_smooth(e) || t <= 0) return std::nullopt;
            const double nu = e.params.nu, be = e.constant("beta");
            auto H = [&]() -> std::optional<double> {
                if (!(nu > 2)) return std::nullopt;
                return 4 * std::sqrt(kPi) * std::pow(2, -1.5 * nu) * std::pow(nu + 2, (2 - nu) / 2) *
                       G(1 + nu / 2) / ((nu - 2) * G((1 + nu) / 2)) * be * std::pow(t, 1 - nu / 2);
            };
            switch (q) {
                case Quantity::E:
                    if (!(nu > 0)) return std::nullopt;
                    return nu * nu * (nu + 2) * be * be * G(1 + nu / 2) * G(1.5 * nu) / G(2 + 2 * nu) *
                           std::pow(2 * (nu + 2) * t, -1.5 * nu);
                case Quantity::H: return H();
                case Quantity::S: {
                    auto h = H();
                    if (!h) return std::nullopt;
                    return -(nu - 2) / 2 * *h / t;
                }
                case Quantity::F:
                    if (!(nu > 0)) return std::nullopt;
                    return 0.0;
                case Quantity::DH_DT: {
                    auto h = H();
                    if (!h) return std::nullopt;
                    return (1 - nu / 2) * *h / t;
                }
            }
            return std::nullopt;
        }
        case SolutionId::NONSIM1_CUTOFF: return cusp_form(e, q, t, false);
        default: return closed_form_reference(e, q, t);
    }
}

double fit_decay_exponent(const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 5) throw ConfigError("fit_decay_exponent needs at least five samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [t, v] : series) {
        if (!(t > 0)) throw DomainError("fit_decay_exponent: times must be positive");
        if (!(v > 0)) throw DomainError("fit_decay_exponent: values must be positive");
        double x = std::log(t), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(series.size());
    double den = m * sxx - sx * sx;
    if (den == 0) throw DomainError("fit_decay_exponent: times must not all coincide");
    return (m * sxy - sx * sy) / den;
}

EnergyFluxCheck energy_flux_check(const ExactSolutionEntry& e, double t, const DiagnosticsOptions& opt) {
    EnergyFluxCheck out;
    const Parameters& P = e.params;
    double dt = probe_step(t, opt);
    Integrals lo = heat_integrals(e, t - dt, opt), hi = heat_integrals(e, t + dt, opt);
    if (lo.E.divergent || hi.E.divergent || !lo.E.value || !hi.E.value) {
        out.flagged = true;
        out.note = "E is not finite";
        return out;
    }
    out.dE_dt = (*hi.E.value - *lo.E.value) / (2 * dt);

    Support s = support(e, t);
    if (!s.empty && s.lo == 0) {
        double h = opt.r0;
        if (!s.infinite) h = std::min(h, 1e-3 * s.hi);
        Limit b = origin_limit(
            [&](double r) {
                Jet2 j = jet_at(e, t, r);
                return std::pow(r, P.n - 1) * j.u_r * j.u_t;
            },
            h);
        if (b.divergent || !b.value) {
            out.flagged = true;
            out.note = "energy flux at the origin is not finite";
            return out;
        }
        out.boundary_term = -*b.value;
    }
    Integral d = integrate_over(
        e, t,
        [&](double r) {
            Jet2 j = jet_at(e, t, r);
            return j.u_t * j.u_t * std::pow(r, P.n - 1);
        },
        opt);
    if (d.divergent || !d.value) {
        out.flagged = true;
        out.note = "dissipation integral is not finite";
        return out;
    }
    out.dissipation = -*d.value;
    out.residual = out.dE_dt - (out.boundary_term + out.dissipation);
    return out;
}

EnergyFluxCheck energy_flux_check(const Parameters& P, const Trajectory& tr, std::size_t i) {
    if (i == 0 || i + 1 >= tr.snapshots.size()) throw ConfigError("energy_flux_check needs neighbouring snapshots");
    const RadialField &a = tr.snapshots[i - 1], &f = tr.snapshots[i], &b = tr.snapshots[i + 1];
    double dt = b.t - f.t;
    if (std::fabs((f.t - a.t) - dt) > 1e-9 * std::max(1.0, std::fabs(dt)))
        throw ConfigError("energy_flux_check needs equally spaced snapshots");
    EnergyFluxCheck out;
    out.dE_dt = (*diagnostics_report(P, b).E - *diagnostics_report(P, a).E) / (2 * dt);
    const int J = f.J();
    RadialField ut = f;
    for (int j = 0; j <= J; ++j) ut.u[j] = (b.u[j] - a.u[j]) / (2 * dt);
    auto ur = [&](int j) {
        if (j == 0) return (-3 * f.u[0] + 4 * f.u[1] - f.u[2]) / (2 * f.dr);
        if (j == J) return (3 * f.u[J] - 4 * f.u[J - 1] + f.u[J - 2]) / (2 * f.dr);
        return (f.u[j + 1] - f.u[j - 1]) / (2 * f.dr);
    };
    out.boundary_term = std::pow(f.r(J), P.n - 1) * ur(J) * ut.u[J] - std::pow(f.r(0), P.n - 1) * ur(0) * ut.u[0];
    double s = 0;
    for (int j = 0; j <= J; ++j)
        s += ut.u[j] * ut.u[j] * std::pow(f.r(j), P.n - 1) * (j == 0 || j == J ? 0.5 : 1.0);
    out.dissipation = -s * f.dr;
    out.residual = out.dE_dt - (out.boundary_term + out.dissipation);
    return out;
}

nlohmann::json to_json(const DiagnosticsReport& r) {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json j;
    j["t"] = r.t;
    j["H"] = opt(r.H);
    j["E"] = opt(r.E);
    j["S"] = opt(r.S);
    j["F"] = opt(r.F);
    j["point_source_term"] = opt(r.point_source_term);
    j["combined_point"] = opt(r.combined_point);
    j["dH_dt"] = opt(r.dH_dt);
    j["dE_dt"] = opt(r.dE_dt);
    j["dt_probe"] = r.dt_probe;
    j["errors"] = r.errors;
    j["divergent"] = r.divergent;
    j["planar"] = r.planar;
    j["truncated"] = r.truncated;
    j["notes"] = r.notes;
    return j;
}

}  // namespace rheat
