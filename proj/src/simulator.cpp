#include "rheat/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "rheat/errors.hpp"

namespace rheat {

std::string to_string(BoundaryMode m) {
    return m == BoundaryMode::DIRICHLET_EXACT ? "DIRICHLET_EXACT" : "FROZEN";
}

BoundaryMode boundary_mode_from_string(const std::string& s) {
    if (s == "DIRICHLET_EXACT") return BoundaryMode::DIRICHLET_EXACT;
    if (s == "FROZEN") return BoundaryMode::FROZEN;
    throw ConfigError("unknown boundary mode: " + s);
}

std::string to_string(SimEvent::Type t) { return t == SimEvent::Type::BLOWUP ? "BLOWUP" : "COMPLETED"; }

bool Trajectory::blew_up() const {
    return std::any_of(events.begin(), events.end(), [](const SimEvent& e) { return e.type == SimEvent::Type::BLOWUP; });
}

void validate(const SimConfig& c) {
    if (c.J < 8) throw ConfigError("J must be at least 8");
    if (!(c.r_max > c.r_min)) throw ConfigError("r_max must exceed r_min");
    if (c.r_min < 0 || (c.r_min == 0 && !c.origin_closure))
        throw ConfigError("r_min must be positive unless the origin closure is enabled");
    if (c.origin_closure && c.r_min != 0) throw ConfigError("the origin closure requires r_min = 0");
    if (!(c.sigma > 0 && c.sigma <= 0.5)) throw ConfigError("sigma must lie in (0, 0.5]");
    if (!(c.t_end >= c.t_start)) throw ConfigError("t_end must not precede t_start");
    if (!(c.u_max > 0)) throw ConfigError("u_max must be positive");
    if (c.boundary == BoundaryMode::DIRICHLET_EXACT && !c.entry)
        throw ConfigError("DIRICHLET_EXACT needs a catalog entry");
    for (std::size_t i = 0; i < c.output_times.size(); ++i) {
        if (i > 0 && !(c.output_times[i] > c.output_times[i - 1]))
            throw ConfigError("output times must be strictly increasing");
    }
}

double diffusive_dt_limit(const SimConfig& c) {
    const double dr = c.dr(), n = c.params.n;
    double rmin = c.origin_closure ? dr : c.r_min;
    double denom = 1 + std::fabs(n - 1) * dr / (2 * rmin);
    if (c.origin_closure) denom = std::max(denom, std::fabs(n));
    return c.sigma * dr * dr / denom;
}

double stable_dt(const SimConfig& c, const RadialField& f) {
    double dt = diffusive_dt_limit(c);
    if (c.reaction_factor > 0 && c.params.k != 0) {
        double umax = 0;
        for (double v : f.u) umax = std::max(umax, std::fabs(v));
        if (umax > 0) {
            double rate = std::fabs(c.params.k) * std::fabs(c.params.q + 1) * std::pow(umax, c.params.q);
            if (rate > 0 && std::isfinite(rate)) dt = std::min(dt, c.reaction_factor / rate);
        }
    }
    return dt;
}

RadialField make_field(const SimConfig& c, double t) {
    RadialField f;
    f.t = t;
    f.r_min = c.r_min;
    f.dr = c.dr();
    f.u.assign(c.J + 1, 0.0);
    return f;
}

RadialField field_from_entry(const SimConfig& c, const ExactSolutionEntry& e, double t) {
    RadialField f = make_field(c, t);
    for (int j = 0; j <= c.J; ++j) f.u[j] = eval_value(e, t, f.r(j));
    return f;
}

namespace {

inline double node_rhs(const Parameters& P, double r, double dr, double um, double u0, double up) {
    double d2 = (up - 2 * u0 + um) / (dr * dr);
    double d1 = (up - um) / (2 * dr);
    return d2 + (P.n - 1) / r * d1 + P.k * signed_pow(u0, P.q + 1);
}

inline double origin_rhs(const Parameters& P, double dr, double u0, double u1) {
    // Symmetric ghost value u_{-1} = u_1.
    return P.n * 2 * (u1 - u0) / (dr * dr) + P.k * signed_pow(u0, P.q + 1);
}

}  // namespace

void rhs_serial(const Parameters& P, double r_min, double dr, bool origin_closure, const std::vector<double>& u,
                std::vector<double>& du) {
    const int J = static_cast<int>(u.size()) - 1;
    du.assign(u.size(), 0.0);
    for (int j = 1; j < J; ++j) du[j] = node_rhs(P, r_min + j * dr, dr, u[j - 1], u[j], u[j + 1]);
    if (origin_closure) du[0] = origin_rhs(P, dr, u[0], u[1]);
}

void rhs_parallel(const Parameters& P, double r_min, double dr, bool origin_closure, const std::vector<double>& u,
                  std::vector<double>& du) {
    const int J = static_cast<int>(u.size()) - 1;
    du.assign(u.size(), 0.0);
    const double* in = u.data();
    double* out = du.data();
#pragma omp parallel for schedule(static)
    for (int j = 1; j < J; ++j) out[j] = node_rhs(P, r_min + j * dr, dr, in[j - 1], in[j], in[j + 1]);
    if (origin_closure) du[0] = origin_rhs(P, dr, u[0], u[1]);
}

namespace {

class Integrator {
public:
    explicit Integrator(const SimConfig& c) : c_(c) {}

    void set_boundary(std::vector<double>& u, double t, const RadialField& initial) const {
        const int J = c_.J;
        if (c_.boundary == BoundaryMode::FROZEN) {
            if (!c_.origin_closure) u[0] = initial.u[0];
            u[J] = initial.u[J];
            return;
        }
        const auto& e = *c_.entry;
        if (!c_.origin_closure) u[0] = eval_value(e, t, c_.r_min);
        u[J] = eval_value(e, t, c_.r_max);
    }

    void rhs(const std::vector<double>& u, std::vector<double>& du) const {
        if (c_.parallel)
            rhs_parallel(c_.params, c_.r_min, c_.dr(), c_.origin_closure, u, du);
        else
            rhs_serial(c_.params, c_.r_min, c_.dr(), c_.origin_closure, u, du);
    }

    // Dirichlet nodes integrate the exact boundary derivative through the same
    // stages as the interior, so stage states stay consistent near the ends;
    // the exact values are restored at the end of the step.
    RadialField rk4(const RadialField& f, double dt, const RadialField& initial) {
        const std::size_t N = f.u.size();
        rhs(f.u, k1_);
        boundary_rate(k1_, f.t);
        stage(f.u, k1_, 0.5 * dt);
        rhs(y_, k2_);
        boundary_rate(k2_, f.t + 0.5 * dt);
        stage(f.u, k2_, 0.5 * dt);
        rhs(y_, k3_);
        boundary_rate(k3_, f.t + 0.5 * dt);
        stage(f.u, k3_, dt);
        rhs(y_, k4_);
        boundary_rate(k4_, f.t + dt);
        RadialField out = f;
        out.t = f.t + dt;
        for (std::size_t j = 0; j < N; ++j) out.u[j] = f.u[j] + dt / 6 * (k1_[j] + 2 * k2_[j] + 2 * k3_[j] + k4_[j]);
        set_boundary(out.u, out.t, initial);
        return out;
    }

private:
    void boundary_rate(std::vector<double>& k, double t) const {
        if (c_.boundary == BoundaryMode::FROZEN) return;
        const auto& e = *c_.entry;
        if (!c_.origin_closure) k.front() = eval_exact(e, t, c_.r_min).u_t;
        k.back() = eval_exact(e, t, c_.r_max).u_t;
    }

    void stage(const std::vector<double>& u, const std::vector<double>& k, double h) {
        y_.resize(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) y_[j] = u[j] + h * k[j];
    }

    const SimConfig& c_;
    std::vector<double> y_, k1_, k2_, k3_, k4_;
};

void check_grid(const SimConfig& c, const RadialField& f) {
    if (f.J() != c.J || std::fabs(f.r_min - c.r_min) > 1e-14 || std::fabs(f.dr - c.dr()) > 1e-14 * c.dr())
        throw ConfigError("field does not match the configured grid");
}

}  // namespace

RadialField step(const SimConfig& c, const RadialField& f, double dt) {
    validate(c);
    check_grid(c, f);
    if (!(dt > 0)) throw ConfigError("dt must be positive");
    if (dt > diffusive_dt_limit(c) * (1 + 1e-12)) throw ConfigError("dt exceeds the stability bound");
    Integrator I(c);
    return I.rk4(f, dt, f);
}

Trajectory run(const SimConfig& c, const RadialField& initial) {
    validate(c);
    check_grid(c, initial);
    Trajectory tr;
    tr.snapshots.push_back(initial);

    std::vector<double> stops;
    for (double t : c.output_times)
        if (t > initial.t && t < c.t_end) stops.push_back(t);
    stops.push_back(c.t_end);

    Integrator I(c);
    RadialField f = initial;
    auto blowup = [&](double t, const std::string& why) {
        tr.events.push_back({SimEvent::Type::BLOWUP, t, why});
        tr.snapshots.push_back(f);
        return tr;
    };

    for (double stop : stops) {
        while (f.t < stop) {
            double dt = stable_dt(c, f);
            if (dt < c.min_dt) return blowup(f.t, "time step below minimum");
            bool last = f.t + dt >= stop - 1e-15 * std::max(1.0, std::fabs(stop));
            if (last) dt = stop - f.t;
            RadialField next;
            try {
                next = I.rk4(f, dt, initial);
            } catch (const DomainError& e) {
                return blowup(f.t, std::string("boundary data undefined: ") + e.what());
            }
            ++tr.steps;
            if (last) next.t = stop;
            double umax = 0;
            bool finite = true;
            for (double v : next.u) {
                if (!std::isfinite(v)) finite = false;
                umax = std::max(umax, std::fabs(v));
            }
            f = std::move(next);
            if (!finite) return blowup(f.t, "non-finite value");
            if (umax >= c.u_max) return blowup(f.t, "threshold crossed");
        }
        tr.snapshots.push_back(f);
    }
    tr.events.push_back({SimEvent::Type::COMPLETED, f.t, ""});
    return tr;
}

double max_error(const RadialField& f, const ExactSolutionEntry& e) {
    double err = 0;
    for (int j = 0; j <= f.J(); ++j) err = std::max(err, std::fabs(f.u[j] - eval_value(e, f.t, f.r(j))));
    return err;
}

ConvergenceReport convergence_order(const SimConfig& base, const ExactSolutionEntry& e, const std::vector<int>& Js) {
    if (Js.size() < 3) throw ConfigError("convergence_order needs at least three refinement levels");
    ConvergenceReport rep;
    rep.spatially_trivial = e.spatially_homogeneous();
    for (int J : Js) {
        SimConfig c = base;
        c.J = J;
        c.entry = e;
        c.boundary = BoundaryMode::DIRICHLET_EXACT;
        c.output_times.clear();
        Trajectory tr = run(c, field_from_entry(c, e, c.t_start));
        if (tr.blew_up()) {
            rep.events.insert(rep.events.end(), tr.events.begin(), tr.events.end());
            continue;
        }
        rep.J.push_back(J);
        rep.dr.push_back(c.dr());
        rep.error.push_back(max_error(tr.snapshots.back(), e));
    }
    if (!rep.events.empty() || rep.spatially_trivial) return rep;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(rep.error.size());
    for (std::size_t i = 0; i < rep.error.size(); ++i) {
        if (!(rep.error[i] > 0)) return rep;
        double x = std::log(rep.dr[i]), y = std::log(rep.error[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    rep.order = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return rep;
}

nlohmann::json to_json(const SimConfig& c) {
    nlohmann::json j;
    j["params"] = {{"n", c.params.n}, {"q", c.params.q}, {"k", c.params.k}};
    j["r_min"] = c.r_min;
    j["r_max"] = c.r_max;
    j["J"] = c.J;
    j["t_start"] = c.t_start;
    j["t_end"] = c.t_end;
    j["sigma"] = c.sigma;
    j["u_max"] = c.u_max;
    j["boundary"] = to_string(c.boundary);
    if (c.entry) j["entry"] = to_json(*c.entry);
    j["origin_closure"] = c.origin_closure;
    j["reaction_factor"] = c.reaction_factor;
    j["min_dt"] = c.min_dt;
    j["output_times"] = c.output_times;
    j["parallel"] = c.parallel;
    return j;
}

SimConfig sim_config_from_json(const nlohmann::json& j) {
    try {
        SimConfig c;
        if (j.contains("entry")) {
            c.entry = entry_from_json(j.at("entry"));
            c.params = c.entry->params;
        }
        if (j.contains("params")) {
            const auto& p = j.at("params");
            c.params = make_parameters(p.at("n").get<double>(), p.at("q").get<double>(), p.at("k").get<double>());
            if (c.entry && (c.params.n != c.entry->params.n || c.params.q != c.entry->params.q ||
                            c.params.k != c.entry->params.k))
                throw ConfigError("params disagree with the entry's parameters");
        } else if (!c.entry) {
            throw ConfigError("simulation config needs params or entry");
        }
        c.r_min = j.value("r_min", c.r_min);
        c.r_max = j.value("r_max", c.r_max);
        c.J = j.value("J", c.J);
        c.t_start = j.value("t_start", c.t_start);
        c.t_end = j.value("t_end", c.t_end);
        c.sigma = j.value("sigma", c.sigma);
        c.u_max = j.value("u_max", c.u_max);
        if (j.contains("boundary")) c.boundary = boundary_mode_from_string(j.at("boundary").get<std::string>());
        c.origin_closure = j.value("origin_closure", c.origin_closure);
        c.reaction_factor = j.value("reaction_factor", c.reaction_factor);
        c.min_dt = j.value("min_dt", c.min_dt);
        if (j.contains("output_times")) c.output_times = j.at("output_times").get<std::vector<double>>();
        c.parallel = j.value("parallel", c.parallel);
        validate(c);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad simulation config: ") + e.what());
    }
}

}  // namespace rheat
