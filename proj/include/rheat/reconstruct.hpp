#pragma once

#include <functional>
#include <string>

#include "rheat/foliation.hpp"
#include "rheat/params.hpp"

namespace rheat {

struct Seed {
    double t0 = 0, r0 = 1, u0 = 1;
};

struct Window {
    double t_lo = 0, t_hi = 1, r_lo = 1, r_hi = 2;
};

struct ReconstructOptions {
    double rtol = 1e-10;
    double atol = 1e-13;
    double consistency_tol = 1e-8;  // scaled resolving residual allowed on samples
    double path_tol = 1e-7;         // corner disagreement between the two path orders
    int samples = 5;                // per side of the consistency sample grid
};

// u(t, r) obtained from u_r = r^{p-1} H(x, v) along t = t0 and then
// u_t = r^{p-2} G(x, v) along each line r = const.
class Reconstruction {
public:
    double operator()(double t, double r) const;
    double path_discrepancy() const { return path_discrepancy_; }
    double max_consistency_residual() const { return max_residual_; }
    const Seed& seed() const { return seed_; }

private:
    friend Reconstruction reconstruct(const Parameters&, GHField, std::function<std::string(double, double)>,
                                      const Seed&, const Window&, const ReconstructOptions&);
    double along_r(double t, double r_from, double u_from, double r_to) const;
    double along_t(double r, double t_from, double u_from, double t_to) const;
    GHJet field(double x, double v) const;

    Parameters P_;
    GHField gh_;
    std::function<std::string(double, double)> violation_;
    Seed seed_;
    ReconstructOptions opt_;
    double path_discrepancy_ = 0;
    double max_residual_ = 0;
};

// Throws ConsistencyError when the resolving residuals fail on the sample grid
// or the two path orders disagree at a window corner, and DomainError when an
// integration path leaves the domain of (G, H).
Reconstruction reconstruct(const Parameters& P, GHField gh, std::function<std::string(double, double)> violation,
                           const Seed& seed, const Window& window, const ReconstructOptions& opt = {});

Reconstruction reconstruct(const GhPair& pair, const Seed& seed, const Window& window,
                           const ReconstructOptions& opt = {});

}  // namespace rheat
