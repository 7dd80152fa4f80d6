#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rheat/params.hpp"

namespace rheat {

// Value with first partials in the invariants (x, v).
struct Dual {
    double val = 0, dx = 0, dv = 0;

    static Dual constant(double c) { return {c, 0, 0}; }
    static Dual var_x(double x) { return {x, 1, 0}; }
    static Dual var_v(double v) { return {v, 0, 1}; }
};

inline Dual operator+(const Dual& a, const Dual& b) { return {a.val + b.val, a.dx + b.dx, a.dv + b.dv}; }
inline Dual operator-(const Dual& a, const Dual& b) { return {a.val - b.val, a.dx - b.dx, a.dv - b.dv}; }
inline Dual operator-(const Dual& a) { return {-a.val, -a.dx, -a.dv}; }
inline Dual operator*(const Dual& a, const Dual& b) {
    return {a.val * b.val, a.dx * b.val + a.val * b.dx, a.dv * b.val + a.val * b.dv};
}
inline Dual operator*(double c, const Dual& a) { return {c * a.val, c * a.dx, c * a.dv}; }
inline Dual operator*(const Dual& a, double c) { return c * a; }
inline Dual operator+(const Dual& a, double c) { return {a.val + c, a.dx, a.dv}; }
inline Dual operator+(double c, const Dual& a) { return a + c; }
inline Dual operator-(const Dual& a, double c) { return a + (-c); }
inline Dual operator-(double c, const Dual& a) { return (-a) + c; }
Dual operator/(const Dual& a, const Dual& b);
inline Dual operator/(const Dual& a, double c) { return a * (1 / c); }
inline Dual operator/(double c, const Dual& a) { return Dual::constant(c) / a; }
Dual pow(const Dual& a, double e);

// G, H and their first partials at a point (x, v).
struct GHJet {
    Dual G, H;
};

// Real power v^e: DomainError for v < 0 with non-integer e.
double real_pow(double v, double e);

// (R1, R2) of the scaling-group resolving system.
std::pair<double, double> resolving_residuals(const Parameters& P, double x, double v, const GHJet& gh);

// Scale for judging residuals: 1 + |G| + |H| + |k| |v|^{q+1}.
double resolving_scale(const Parameters& P, double v, const GHJet& gh);

// H + 2x G - p v.
double similarity_defect(const Parameters& P, double x, double v, double G, double H);

enum class GhPairId {
    PROP1_SOL1,  // G = k v^{q+1}, H = 0
    PROP1_SOL2,  // q = 2/(2-n)
    PROP1_SOL3,  // q = -4, n = 5/2
    PROP1_SOL4,  // q = 2, n = 5/2
    PROP2_SOL1,  // q = 2, n = 5/2, quadratic in v
    PROP2_SOL2,  // q = 2, n = 5/2, quadratic in v
};

std::string to_string(GhPairId id);
GhPairId gh_pair_from_string(const std::string& s);
const std::vector<GhPairId>& all_gh_pairs();

using GHField = std::function<GHJet(double x, double v)>;

struct GhPair {
    GhPairId id = GhPairId::PROP1_SOL1;
    Parameters params;
    int branch = +1;
    GHField eval;
    // Empty when (x, v) is in the domain of the closed form.
    std::function<std::string(double x, double v)> violation;
};

// Throws ConfigError when (n, q, k) do not match the pair's constraints.
// For PROP2_SOL1 the inner sign of the square is opposite to the branch sign,
// for PROP2_SOL2 it equals the branch sign; these are the sign patterns that solve the system.
GhPair catalog_GH(GhPairId id, const Parameters& P, int branch = +1);

// Parameters used when no others are requested.
Parameters default_gh_params(GhPairId id);

}  // namespace rheat
