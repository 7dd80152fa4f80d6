#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rheat/catalog.hpp"
#include "rheat/quadrature.hpp"
#include "rheat/simulator.hpp"

namespace rheat {

// Heat-type integrals use r dr when the entry lives in the planar reading
// (non-integer n, or the TWODIM entries) and r^{n-1} dr otherwise. E always
// uses r^{n-1} dr, the measure of the gradient-flow form.
struct DiagnosticsReport {
    double t = 0;
    std::optional<double> H, E, S, F;
    std::optional<double> point_source_term;  // nu lim u, planar reading only
    std::optional<double> combined_point;     // lim(-r u_r + nu u), planar reading only
    std::optional<double> dH_dt, dE_dt;
    double dt_probe = 0;
    std::map<std::string, double> errors;    // absolute error estimates
    std::map<std::string, bool> divergent;   // set: the quantity has no finite value
    bool planar = false;
    bool truncated = false;  // field source: integrals only over [r_min, r_max]
    std::vector<std::string> notes;
};

struct DiagnosticsOptions {
    double dt_probe = 0;  // 0: 1e-4 t (1e-4 when t = 0)
    double r0 = 1e-3;     // largest radius of the origin extrapolation
    double r_cut = 0;     // 0: chosen from the entry's length scale
    QuadOptions quad;
    bool derivatives = true;  // dH/dt and dE/dt by central differences
};

bool planar_reading(const ExactSolutionEntry& e);

DiagnosticsReport diagnostics_report(const ExactSolutionEntry& e, double t, const DiagnosticsOptions& opt = {});

// Field source: composite Simpson over the nodes, u_r by second-order differences.
DiagnosticsReport diagnostics_report(const Parameters& P, const RadialField& f, bool planar = false);

enum class Quantity { H, E, S, F, DH_DT };
std::string to_string(Quantity q);
Quantity quantity_from_string(const std::string& s);

// Reference closed forms. The two cusp-solution expressions are assigned to the
// time range on which their 2F1 argument lies in [0, 1).
std::optional<double> closed_form_reference(const ExactSolutionEntry& e, Quantity q, double t);

// Closed forms re-derived where the reference ones disagree with quadrature.
std::optional<double> corrected_closed_form(const ExactSolutionEntry& e, Quantity q, double t);

// Least-squares slope of log value against log t. DomainError for a non-positive value.
double fit_decay_exponent(const std::vector<std::pair<double, double>>& series);

struct EnergyFluxCheck {
    bool flagged = false;  // E divergent at a probe time
    double dE_dt = 0;
    double boundary_term = 0;  // -lim r^{n-1} u_r u_t
    double dissipation = 0;    // -int u_t^2 r^{n-1} dr
    double residual = 0;       // dE_dt - (boundary_term + dissipation)
    std::string note;
};

EnergyFluxCheck energy_flux_check(const ExactSolutionEntry& e, double t, const DiagnosticsOptions& opt = {});

// Uses snapshots i-1, i, i+1 of an equally spaced trajectory; FROZEN ends give no boundary term.
EnergyFluxCheck energy_flux_check(const Parameters& P, const Trajectory& tr, std::size_t i);

nlohmann::json to_json(const DiagnosticsReport& r);

}  // namespace rheat
