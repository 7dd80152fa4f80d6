#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rheat/jet.hpp"
#include "rheat/params.hpp"

namespace rheat {

enum class SolutionId {
    USOL1,
    USOL2,
    USOL3,
    USOL4,
    USOL5,
    USOL6,
    USOL2_CUTOFF,
    TWODIM_USOL2,
    TWODIM_USOL2_CUTOFF,
    NONSIM1_CUTOFF,
};

std::string to_string(SolutionId id);
SolutionId solution_id_from_string(const std::string& s);  // ConfigError on unknown name
const std::vector<SolutionId>& all_solution_ids();

struct ExactSolutionEntry {
    SolutionId id = SolutionId::USOL1;
    Parameters params;
    int branch = +1;
    // c, c_tilde, alpha, beta, gamma as applicable; derived ones are filled in by make_entry.
    std::map<std::string, double> constants;

    double constant(const std::string& name, double fallback = 0.0) const;

    // Empty when (t, r) is admissible, otherwise the violated constraint.
    std::string violation(double t, double r) const;
    bool valid(double t, double r) const { return violation(t, r).empty(); }

    bool is_cutoff() const;
    bool spatially_homogeneous() const { return id == SolutionId::USOL1; }
};

// Checks the (n, q) constraints and sign conditions on k; throws ConfigError.
ExactSolutionEntry make_entry(SolutionId id, double n, double q, double k, int branch = +1,
                              std::map<std::string, double> constants = {});

// A representative admissible entry for each id, used by the CLI and tests.
ExactSolutionEntry default_entry(SolutionId id);

// Throws DomainError naming the violated constraint.
Jet2 eval_exact(const ExactSolutionEntry& e, double t, double r);

// Value only; defined on the whole closed support of cutoff entries.
double eval_value(const ExactSolutionEntry& e, double t, double r);

// Radii of the moving fronts at time t (empty for entries without one).
std::vector<double> front_radii(const ExactSolutionEntry& e, double t);

nlohmann::json to_json(const ExactSolutionEntry& e);
ExactSolutionEntry entry_from_json(const nlohmann::json& j);

}  // namespace rheat
