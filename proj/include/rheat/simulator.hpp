#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rheat/catalog.hpp"
#include "rheat/params.hpp"

namespace rheat {

// Nodes r_j = r_min + j dr, j = 0..J.
struct RadialField {
    double t = 0;
    double r_min = 1;
    double dr = 0.1;
    std::vector<double> u;

    int J() const { return static_cast<int>(u.size()) - 1; }
    double r(int j) const { return r_min + j * dr; }
};

enum class BoundaryMode {
    DIRICHLET_EXACT,  // both ends taken from the catalog entry at the stage time
    FROZEN,           // both ends keep their initial values
};

std::string to_string(BoundaryMode m);
BoundaryMode boundary_mode_from_string(const std::string& s);

struct SimConfig {
    Parameters params;
    double r_min = 0.5;
    double r_max = 5;
    int J = 64;
    double t_start = 0;
    double t_end = 1;
    double sigma = 0.4;  // safety factor on the diffusive step bound
    double u_max = 1e6;  // blow-up threshold
    BoundaryMode boundary = BoundaryMode::DIRICHLET_EXACT;
    std::optional<ExactSolutionEntry> entry;  // required for DIRICHLET_EXACT
    // Regular origin: allows r_min = 0 with u_r(0) = 0 and (n-1) u_r / r -> (n-1) u_rr.
    bool origin_closure = false;
    // Limits dt so that dt |d(source)/du| stays below this; 0 disables the limit.
    double reaction_factor = 0.05;
    double min_dt = 1e-12;
    std::vector<double> output_times;  // snapshots besides the initial and final ones
    bool parallel = false;             // OpenMP right-hand side

    double dr() const { return (r_max - r_min) / J; }
};

// Throws ConfigError for inconsistent settings.
void validate(const SimConfig& cfg);

// Largest dt allowed by the diffusive bound sigma dr^2 / (1 + (n-1) dr / (2 r_min)).
double diffusive_dt_limit(const SimConfig& cfg);

// Adds the reaction limit for the current field.
double stable_dt(const SimConfig& cfg, const RadialField& f);

RadialField make_field(const SimConfig& cfg, double t);
RadialField field_from_entry(const SimConfig& cfg, const ExactSolutionEntry& e, double t);

// Semi-discrete right-hand side at interior nodes; boundary entries of du are zero
// except the origin node under origin_closure.
void rhs_serial(const Parameters& P, double r_min, double dr, bool origin_closure, const std::vector<double>& u,
                std::vector<double>& du);
void rhs_parallel(const Parameters& P, double r_min, double dr, bool origin_closure, const std::vector<double>& u,
                  std::vector<double>& du);

// One classical RK4 step. ConfigError when dt exceeds the diffusive bound.
RadialField step(const SimConfig& cfg, const RadialField& f, double dt);

struct SimEvent {
    enum class Type { BLOWUP, COMPLETED } type = Type::COMPLETED;
    double t_est = 0;
    std::string detail;
};

std::string to_string(SimEvent::Type t);

struct Trajectory {
    std::vector<RadialField> snapshots;
    std::vector<SimEvent> events;
    long steps = 0;

    bool blew_up() const;
};

Trajectory run(const SimConfig& cfg, const RadialField& initial);

// Max |u_j - exact| over all nodes of a field.
double max_error(const RadialField& f, const ExactSolutionEntry& e);

struct ConvergenceReport {
    std::vector<int> J;
    std::vector<double> dr, error;
    std::optional<double> order;  // empty when undefined
    bool spatially_trivial = false;
    std::vector<SimEvent> events;  // blow-up events of the refinement runs
};

// Runs cfg at each J from the entry's exact data and fits log error against log dr.
ConvergenceReport convergence_order(const SimConfig& cfg, const ExactSolutionEntry& e, const std::vector<int>& Js);

nlohmann::json to_json(const SimConfig& cfg);
SimConfig sim_config_from_json(const nlohmann::json& j);

}  // namespace rheat
