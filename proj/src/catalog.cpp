#include "rheat/catalog.hpp"

#include <cmath>
#include <cstdio>

#include "rheat/errors.hpp"

namespace rheat {

namespace {

const std::vector<std::pair<SolutionId, const char*>> kNames = {
    {SolutionId::USOL1, "USOL1"},
    {SolutionId::USOL2, "USOL2"},
    {SolutionId::USOL3, "USOL3"},
    {SolutionId::USOL4, "USOL4"},
    {SolutionId::USOL5, "USOL5"},
    {SolutionId::USOL6, "USOL6"},
    {SolutionId::USOL2_CUTOFF, "USOL2_CUTOFF"},
    {SolutionId::TWODIM_USOL2, "TWODIM_USOL2"},
    {SolutionId::TWODIM_USOL2_CUTOFF, "TWODIM_USOL2_CUTOFF"},
    {SolutionId::NONSIM1_CUTOFF, "NONSIM1_CUTOFF"},
};

bool near(double a, double b) { return std::fabs(a - b) <= 1e-12 * (1 + std::fabs(b)); }

std::string fmt(const char* f, double a) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

void require_q(const Parameters& P, double q, const char* id) {
    require(near(P.q, q), std::string(id) + ": requires q = " + fmt("%.17g", q));
}

void require_n(const Parameters& P, double n, const char* id) {
    require(near(P.n, n), std::string(id) + ": requires n = " + fmt("%.17g", n));
}

// Parabola factors of the cusp entry; both positive strictly inside the support.
struct CuspFactors {
    double outer, inner;
};

CuspFactors cusp_factors(const ExactSolutionEntry& e, double t, double r) {
    double al = e.constant("alpha"), be = e.constant("beta");
    return {3 * (al - t) - r * r, 3 * (t - be) + r * r};
}

}  // namespace

std::string to_string(SolutionId id) {
    for (auto& [k, v] : kNames)
        if (k == id) return v;
    return "?";
}

SolutionId solution_id_from_string(const std::string& s) {
    for (auto& [k, v] : kNames)
        if (s == v) return k;
    throw ConfigError("unknown solution id: " + s);
}

const std::vector<SolutionId>& all_solution_ids() {
    static const std::vector<SolutionId> ids = [] {
        std::vector<SolutionId> v;
        for (auto& kv : kNames) v.push_back(kv.first);
        return v;
    }();
    return ids;
}

double ExactSolutionEntry::constant(const std::string& name, double fallback) const {
    auto it = constants.find(name);
    return it == constants.end() ? fallback : it->second;
}

bool ExactSolutionEntry::is_cutoff() const {
    return id == SolutionId::USOL2_CUTOFF || id == SolutionId::TWODIM_USOL2_CUTOFF ||
           id == SolutionId::NONSIM1_CUTOFF;
}

ExactSolutionEntry make_entry(SolutionId id, double n, double q, double k, int branch,
                              std::map<std::string, double> constants) {
    ExactSolutionEntry e;
    e.id = id;
    e.params = make_parameters(n, q, k);
    require(branch == 1 || branch == -1, "branch must be +1 or -1");
    e.branch = branch;
    e.constants = std::move(constants);
    const Parameters& P = e.params;
    const std::string name = to_string(id);
    auto setdef = [&](const char* c, double v) { e.constants.emplace(c, v); };

    switch (id) {
        case SolutionId::USOL1:
            setdef("c", 0);
            break;
        case SolutionId::USOL2: {
            require(!near(n, 2) && !near(n, 3) && !near(n, 4), "USOL2: n must not be 2, 3 or 4");
            require_q(P, 2 / (2 - n), "USOL2");
            require(-k / ((n - 2) * (n - 3)) > 0, "USOL2: requires -k/((n-2)(n-3)) > 0");
            setdef("c", 0);
            break;
        }
        case SolutionId::USOL3:
            require_q(P, -4, "USOL3");
            require_n(P, 2.5, "USOL3");
            require(k > 0, "USOL3: requires k > 0");
            setdef("c", 0);
            setdef("c_tilde", 0);
            break;
        case SolutionId::USOL4:
            require_q(P, 2, "USOL4");
            require_n(P, 2.5, "USOL4");
            require(k < 0, "USOL4: requires k < 0");
            setdef("c", 0);
            setdef("c_tilde", 0);
            break;
        case SolutionId::USOL5:
        case SolutionId::USOL6:
            require_q(P, 2, name.c_str());
            require_n(P, 2.5, name.c_str());
            require(k < 0, name + ": requires k < 0");
            setdef("c", 0);
            break;
        case SolutionId::USOL2_CUTOFF: {
            require(n >= 5, "USOL2_CUTOFF: requires n >= 5");
            require(k < 0, "USOL2_CUTOFF: requires k < 0");
            require_q(P, 2 / (2 - n), "USOL2_CUTOFF");
            e.constants["alpha"] = std::sqrt(2 * (n - 4));
            e.constants["beta"] = std::pow((n - 2) * (n - 3) / (std::fabs(k) * (n - 4) * (n - 4)), 1 - n / 2);
            break;
        }
        case SolutionId::TWODIM_USOL2:
        case SolutionId::TWODIM_USOL2_CUTOFF: {
            double nu = P.nu;
            require(!near(nu, 0) && !near(nu, -1) && !near(nu, -2), name + ": nu must not be 0, -1 or -2");
            // The nonlinearity that makes this profile an exact solution is q = 2/nu.
            require_q(P, 2 / nu, name.c_str());
            if (nu > -1 && nu < 0)
                require(k > 0, name + ": requires k > 0 for -1 < nu < 0");
            else
                require(k < 0, name + ": requires k < 0 for nu < -1 or nu > 0");
            if (id == SolutionId::TWODIM_USOL2_CUTOFF) {
                require(nu < -2, "TWODIM_USOL2_CUTOFF: requires nu < -2");
                e.branch = -1;
            }
            setdef("c", 0);
            e.constants["alpha"] = 2 * (nu + 2);
            e.constants["beta"] = std::pow(-4 * nu * (nu + 1) / k, nu / 2);
            break;
        }
        case SolutionId::NONSIM1_CUTOFF: {
            require_q(P, -4, "NONSIM1_CUTOFF");
            require_n(P, 2.5, "NONSIM1_CUTOFF");
            require(k > 0, "NONSIM1_CUTOFF: requires k > 0");
            require(e.constants.count("alpha") && e.constants.count("beta"),
                    "NONSIM1_CUTOFF: requires constants alpha and beta");
            double al = e.constants["alpha"], be = e.constants["beta"];
            require(al > be && be > 0, "NONSIM1_CUTOFF: requires alpha > beta > 0");
            e.constants["gamma"] = std::sqrt(k) / (3 * (al - be));
            e.constants["c"] = 1 / (3 * (al - be));
            e.constants["c_tilde"] = -al;
            break;
        }
    }
    return e;
}

ExactSolutionEntry default_entry(SolutionId id) {
    switch (id) {
        case SolutionId::USOL1: return make_entry(id, 3, 2, -1, 1, {{"c", 1}});
        case SolutionId::USOL2: return make_entry(id, 6, -0.5, -1, 1, {{"c", 1}});
        case SolutionId::USOL3: return make_entry(id, 2.5, -4, 1, 1, {{"c", 1}, {"c_tilde", 0}});
        case SolutionId::USOL4: return make_entry(id, 2.5, 2, -1, 1, {{"c", 1}, {"c_tilde", 0}});
        case SolutionId::USOL5: return make_entry(id, 2.5, 2, -1, 1, {{"c", 0}});
        case SolutionId::USOL6: return make_entry(id, 2.5, 2, -1, 1, {{"c", 0}});
        case SolutionId::USOL2_CUTOFF: return make_entry(id, 6, -0.5, -1);
        case SolutionId::TWODIM_USOL2: return make_entry(id, -1, 2.0 / 3.0, -1, 1, {{"c", 0}});
        case SolutionId::TWODIM_USOL2_CUTOFF: return make_entry(id, 5, -2.0 / 3.0, -1, -1);
        case SolutionId::NONSIM1_CUTOFF:
            return make_entry(id, 2.5, -4, 1, 1, {{"alpha", 20}, {"beta", 5}});
    }
    throw ConfigError("unknown solution id");
}

std::string ExactSolutionEntry::violation(double t, double r) const {
    if (!std::isfinite(t) || !std::isfinite(r)) return "non-finite point";
    const Parameters& P = params;
    if (id == SolutionId::USOL1) {
        if (-P.k * P.q * (t + constant("c")) <= 0) return "USOL1: requires -k q (t+c) > 0";
        return {};
    }
    if (r <= 0) return to_string(id) + ": requires r > 0";
    switch (id) {
        case SolutionId::USOL2: {
            double s = branch * std::sqrt(-P.k / ((P.n - 2) * (P.n - 3)));
            double B = s * (r / 2 - (P.n - 4) * (t + constant("c")) / r);
            if (!is_integer(P.n - 2) && B <= 0) return "USOL2: requires positive base for non-integer n-2";
            if (P.n - 2 < 2 && B == 0) return "USOL2: zero base";
            return {};
        }
        case SolutionId::USOL3: {
            double T = t + constant("c_tilde");
            double inner = branch * std::sqrt(P.k) * (1 + constant("c") * (3 * T + r * r)) * (3 * T / r + r);
            if (inner <= 0) return "USOL3: requires (1 + c(3t+r^2))(3t/r+r) of the branch sign";
            return {};
        }
        case SolutionId::USOL4: {
            double T = t + constant("c_tilde");
            if (r * (15 * T + r * r) + constant("c") * std::sqrt(r) == 0) return "USOL4: zero denominator";
            return {};
        }
        case SolutionId::USOL5: {
            double T = t + constant("c");
            if (3 * T + r * r == 0) return "USOL5: zero denominator";
            return {};
        }
        case SolutionId::USOL6: {
            double T = t + constant("c");
            if (15 * T + r * r == 0) return "USOL6: zero denominator";
            return {};
        }
        case SolutionId::USOL2_CUTOFF:
        case SolutionId::TWODIM_USOL2_CUTOFF:
            if (t <= 0) return to_string(id) + ": requires t > 0";
            return {};
        case SolutionId::TWODIM_USOL2: {
            double base = branch * (constant("alpha") * (t + constant("c")) + r * r);
            if (base <= 0) return "TWODIM_USOL2: requires positive base";
            return {};
        }
        case SolutionId::NONSIM1_CUTOFF: {
            auto f = cusp_factors(*this, t, r);
            bool on_front = (f.outer == 0 && f.inner >= 0) || (f.inner == 0 && f.outer >= 0);
            if (on_front) return "NONSIM1_CUTOFF: u_r is unbounded on the cusp";
            return {};
        }
        default: return {};
    }
}

Jet2 eval_exact(const ExactSolutionEntry& e, double t, double r) {
    std::string bad = e.violation(t, r);
    if (!bad.empty()) throw DomainError(bad);
    const Parameters& P = e.params;
    const Jet2 T0 = Jet2::var_t(t), R = Jet2::var_r(r);
    const double sg = e.branch;
    switch (e.id) {
        case SolutionId::USOL1: {
            Jet2 base = -P.k * P.q * (T0 + e.constant("c"));
            return pow(base, -1 / P.q);
        }
        case SolutionId::USOL2: {
            double s = sg * std::sqrt(-P.k / ((P.n - 2) * (P.n - 3)));
            Jet2 B = s * (R / 2 - (P.n - 4) * (T0 + e.constant("c")) / R);
            return pow(B, P.n - 2);
        }
        case SolutionId::USOL3: {
            Jet2 T = T0 + e.constant("c_tilde");
            Jet2 inner = sg * std::sqrt(P.k) * (1 + e.constant("c") * (3 * T + R * R)) * (3 * T / R + R);
            return sqrt(inner);
        }
        case SolutionId::USOL4: {
            Jet2 T = T0 + e.constant("c_tilde");
            Jet2 den = (R * (15 * T + R * R) + e.constant("c") * sqrt(R)) * std::sqrt(-2 * P.k);
            return sg * 5 * (3 * T + R * R) / den;
        }
        case SolutionId::USOL5: {
            Jet2 T = T0 + e.constant("c");
            return sg * 3 * (T - R * R) / (R * (3 * T + R * R) * std::sqrt(-2 * P.k));
        }
        case SolutionId::USOL6: {
            Jet2 T = T0 + e.constant("c");
            return sg * 5 * (3 * T + R * R) / (R * (15 * T + R * R) * std::sqrt(-2 * P.k));
        }
        case SolutionId::USOL2_CUTOFF: {
            double al = e.constant("alpha"), be = e.constant("beta");
            if (r >= al * std::sqrt(t)) return {};
            return be * pow(R, 2 - P.n) * pow(T0 - (R / al) * (R / al), P.n - 2);
        }
        case SolutionId::TWODIM_USOL2: {
            double al = e.constant("alpha"), be = e.constant("beta");
            Jet2 base = sg * (al * (T0 + e.constant("c")) + R * R);
            return be * pow(R, P.nu) * pow(base, -P.nu);
        }
        case SolutionId::TWODIM_USOL2_CUTOFF: {
            double al = std::fabs(e.constant("alpha")), be = e.constant("beta");
            if (r * r >= al * t) return {};
            return be * pow(R, P.nu) * pow(al * T0 - R * R, -P.nu);
        }
        case SolutionId::NONSIM1_CUTOFF: {
            auto f = cusp_factors(e, t, r);
            if (f.outer <= 0 || f.inner <= 0) return {};
            double al = e.constant("alpha"), be = e.constant("beta"), ga = e.constant("gamma");
            Jet2 outer = 3 * (al - T0) - R * R, inner = 3 * (T0 - be) + R * R;
            return pow(R, -0.5) * sqrt(ga * outer * inner);
        }
    }
    throw DomainError("unknown solution id");
}

double eval_value(const ExactSolutionEntry& e, double t, double r) {
    if (e.id == SolutionId::NONSIM1_CUTOFF && r > 0) {
        auto f = cusp_factors(e, t, r);
        if (f.outer <= 0 || f.inner <= 0) return 0.0;
    }
    return eval_exact(e, t, r).u;
}

std::vector<double> front_radii(const ExactSolutionEntry& e, double t) {
    std::vector<double> out;
    switch (e.id) {
        case SolutionId::USOL2_CUTOFF:
            if (t > 0) out.push_back(e.constant("alpha") * std::sqrt(t));
            break;
        case SolutionId::TWODIM_USOL2_CUTOFF:
            if (t > 0) out.push_back(std::sqrt(std::fabs(e.constant("alpha")) * t));
            break;
        case SolutionId::NONSIM1_CUTOFF: {
            double al = e.constant("alpha"), be = e.constant("beta");
            if (t < be) out.push_back(std::sqrt(3 * (be - t)));
            if (t < al) out.push_back(std::sqrt(3 * (al - t)));
            break;
        }
        default: break;
    }
    return out;
}

nlohmann::json to_json(const ExactSolutionEntry& e) {
    nlohmann::json c = nlohmann::json::object();
    for (auto& [k, v] : e.constants) c[k] = v;
    return {{"id", to_string(e.id)}, {"n", e.params.n}, {"q", e.params.q},
            {"k", e.params.k},       {"branch", e.branch}, {"constants", c}};
}

ExactSolutionEntry entry_from_json(const nlohmann::json& j) {
    try {
        SolutionId id = solution_id_from_string(j.at("id").get<std::string>());
        std::map<std::string, double> c;
        if (j.contains("constants"))
            for (auto& [k, v] : j.at("constants").items()) c[k] = v.get<double>();
        if (!j.contains("n") && !j.contains("q") && !j.contains("k")) {
            ExactSolutionEntry d = default_entry(id);
            for (auto& [k, v] : c) d.constants[k] = v;
            return make_entry(id, d.params.n, d.params.q, d.params.k, j.value("branch", d.branch), d.constants);
        }
        return make_entry(id, j.at("n").get<double>(), j.at("q").get<double>(), j.at("k").get<double>(),
                          j.value("branch", 1), c);
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("catalog entry: ") + ex.what());
    }
}

}  // namespace rheat
