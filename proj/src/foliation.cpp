#include "rheat/foliation.hpp"

#include <cmath>

#include "rheat/errors.hpp"

namespace rheat {

Dual operator/(const Dual& a, const Dual& b) {
    if (b.val == 0) throw DomainError("dual division by zero");
    double i = 1 / b.val;
    Dual bi{i, -i * i * b.dx, -i * i * b.dv};
    return a * bi;
}

Dual pow(const Dual& a, double e) {
    if (e == 0) return Dual::constant(1);
    double h0 = real_pow(a.val, e);
    double h1 = e == 1 ? 1.0 : e * real_pow(a.val, e - 1);
    return {h0, h1 * a.dx, h1 * a.dv};
}

double real_pow(double v, double e) {
    if (v < 0 && !is_integer(e)) throw DomainError("negative base with non-integer exponent");
    return std::pow(v, e);
}

std::pair<double, double> resolving_residuals(const Parameters& P, double x, double v, const GHJet& gh) {
    const Dual& G = gh.G;
    const Dual& H = gh.H;
    for (double c : {G.val, G.dx, G.dv, H.val, H.dx, H.dv})
        if (!std::isfinite(c)) throw NumericError("non-finite GH jet");
    const double p = P.p, n = P.n;
    double R1 = (p - 2) * G.val - p * v * G.dv - 2 * x * G.dx - H.dx + H.val * G.dv - G.val * H.dv;
    double R2 = G.val - (p + n - 2) * H.val + p * v * H.dv + 2 * x * H.dx - H.val * H.dv -
                P.k * real_pow(v, P.q + 1);
    return {R1, R2};
}

double resolving_scale(const Parameters& P, double v, const GHJet& gh) {
    return 1 + std::fabs(gh.G.val) + std::fabs(gh.H.val) + std::fabs(P.k) * std::pow(std::fabs(v), P.q + 1);
}

double similarity_defect(const Parameters& P, double x, double v, double G, double H) {
    return H + 2 * x * G - P.p * v;
}

namespace {

const std::vector<std::pair<GhPairId, const char*>> kPairNames = {
    {GhPairId::PROP1_SOL1, "PROP1_SOL1"}, {GhPairId::PROP1_SOL2, "PROP1_SOL2"},
    {GhPairId::PROP1_SOL3, "PROP1_SOL3"}, {GhPairId::PROP1_SOL4, "PROP1_SOL4"},
    {GhPairId::PROP2_SOL1, "PROP2_SOL1"}, {GhPairId::PROP2_SOL2, "PROP2_SOL2"},
};

bool near(double a, double b) { return std::fabs(a - b) <= 1e-12 * (1 + std::fabs(b)); }

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

void require_fixed(const Parameters& P, double q, double n, const std::string& id) {
    require(near(P.q, q) && near(P.n, n), id + ": requires specific (q, n)");
}

}  // namespace

std::string to_string(GhPairId id) {
    for (auto& [k, v] : kPairNames)
        if (k == id) return v;
    return "?";
}

GhPairId gh_pair_from_string(const std::string& s) {
    for (auto& [k, v] : kPairNames)
        if (s == v) return k;
    throw ConfigError("unknown GH pair: " + s);
}

const std::vector<GhPairId>& all_gh_pairs() {
    static const std::vector<GhPairId> ids = [] {
        std::vector<GhPairId> v;
        for (auto& kv : kPairNames) v.push_back(kv.first);
        return v;
    }();
    return ids;
}

Parameters default_gh_params(GhPairId id) {
    switch (id) {
        case GhPairId::PROP1_SOL1: return make_parameters(3, 3, 1);
        case GhPairId::PROP1_SOL2: return make_parameters(6, -0.5, -1);
        case GhPairId::PROP1_SOL3: return make_parameters(2.5, -4, 1);
        case GhPairId::PROP1_SOL4: return make_parameters(2.5, 2, -1);
        case GhPairId::PROP2_SOL1:
        case GhPairId::PROP2_SOL2: return make_parameters(2.5, 2, -0.5);
    }
    throw ConfigError("unknown GH pair");
}

GhPair catalog_GH(GhPairId id, const Parameters& P, int branch) {
    require(branch == 1 || branch == -1, "branch must be +1 or -1");
    GhPair out;
    out.id = id;
    out.params = P;
    out.branch = branch;
    const double k = P.k, n = P.n, q = P.q, sg = branch;
    const std::string name = to_string(id);
    auto no_violation = [](double, double) { return std::string(); };

    switch (id) {
        case GhPairId::PROP1_SOL1: {
            out.eval = [k, q](double, double v) {
                Dual V = Dual::var_v(v);
                return GHJet{k * pow(V, q + 1), Dual::constant(0)};
            };
            out.violation = [q](double, double v) {
                if (v <= 0 && !is_integer(q + 1)) return std::string("requires v > 0");
                return std::string();
            };
            break;
        }
        case GhPairId::PROP1_SOL2: {
            require(!near(n, 2) && !near(n, 3) && !near(n, 4), name + ": n must not be 2, 3 or 4");
            require(near(q, 2 / (2 - n)), name + ": requires q = 2/(2-n)");
            double rad = -k * (n - 2) / (n - 3);
            require(rad > 0, name + ": requires -k(n-2)/(n-3) > 0");
            double amp = sg * (4 - n) * std::sqrt(rad), e = (n - 3) / (n - 2);
            out.eval = [amp, e, n](double, double v) {
                Dual V = Dual::var_v(v);
                Dual G = amp * pow(V, e);
                return GHJet{G, G / (4 - n) + (2 - n) * V};
            };
            out.violation = [e](double, double v) {
                if (v <= 0 && !is_integer(e)) return std::string("requires v > 0");
                if (v == 0 && e < 1) return std::string("requires v != 0");
                return std::string();
            };
            break;
        }
        case GhPairId::PROP1_SOL3: {
            require_fixed(P, -4, 2.5, name);
            require(k > 0, name + ": requires k > 0");
            double c = sg * 1.5 * std::sqrt(k);
            out.eval = [c](double x, double v) {
                Dual X = Dual::var_x(x), V = Dual::var_v(v);
                Dual G = 3 * V / (3 * X + 1) + c / V;
                return GHJet{G, (2.0 / 3.0) * G - 0.5 * V};
            };
            out.violation = [](double x, double v) {
                if (v == 0 || 3 * x + 1 == 0) return std::string("requires v != 0 and 3x+1 != 0");
                return std::string();
            };
            break;
        }
        case GhPairId::PROP1_SOL4: {
            require_fixed(P, 2, 2.5, name);
            require(k < 0, name + ": requires k < 0");
            double s = sg * std::sqrt(-2 * k);
            out.eval = [s](double x, double v) {
                Dual X = Dual::var_x(x), V = Dual::var_v(v);
                Dual G = 3 * V * (1 + s * V) / (3 * X + 1);
                return GHJet{G, (3 * X + 1) * G / 6 - (3 * X - 1) * V / (3 * X + 1)};
            };
            out.violation = [](double x, double) {
                if (3 * x + 1 == 0) return std::string("requires 3x+1 != 0");
                return std::string();
            };
            break;
        }
        case GhPairId::PROP2_SOL1:
        case GhPairId::PROP2_SOL2: {
            require_fixed(P, 2, 2.5, name);
            require(k < 0, name + ": requires k < 0");
            double s = std::sqrt(-2 * k);
            bool first = id == GhPairId::PROP2_SOL1;
            double amp = first ? 0.75 : 3.75;
            double inner = first ? -sg : sg;
            double hG = first ? 2.0 / 3.0 : 2.0 / 15.0;
            out.eval = [s, sg, amp, inner, hG](double, double v) {
                Dual V = Dual::var_v(v);
                Dual w = V + inner / s;
                Dual G = sg * amp * s * w * w;
                return GHJet{G, hG * G + V + inner * 2 / s};
            };
            out.violation = no_violation;
            break;
        }
    }
    return out;
}

}  // namespace rheat
