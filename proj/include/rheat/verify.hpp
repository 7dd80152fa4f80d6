#pragma once

#include <string>
#include <vector>

#include "rheat/catalog.hpp"
#include "rheat/foliation.hpp"

namespace rheat {

struct SampleBox {
    double t_lo, t_hi, r_lo, r_hi;
};

// A rectangle of (t, r) on which the entry is defined (and, for cutoff
// entries, a region that meets the inside of the support).
SampleBox sample_box(const ExactSolutionEntry& e);

struct CatalogSample {
    double t, r, u, residual, scaled;
};

struct CatalogCheck {
    ExactSolutionEntry entry;
    std::vector<CatalogSample> samples;
    double max_scaled = 0;
    int skipped = 0;  // grid points outside the domain or on/outside a front
};

// PDE residuals on an nt x nr grid of the sample box; cutoff entries are only
// sampled strictly inside their support.
CatalogCheck verify_entry(const ExactSolutionEntry& e, int nt = 20, int nr = 20);

struct FoliationSample {
    double x, v, R1, R2, defect, scaled;
};

struct FoliationCheck {
    GhPairId id;
    std::vector<FoliationSample> grid;
    double max_scaled = 0;
    double min_abs_defect = 0;  // over the random defect samples
    int defect_samples = 0;
    int defect_violations = 0;  // samples with |defect| <= 1e-6
};

// Resolving residuals on an nx x nv grid of x in [0.1, 2], v in [0.2, 2], and
// the similarity defect at `random_points` pseudo-random points (fixed seed).
FoliationCheck verify_pair(const GhPair& pair, int nx = 20, int nv = 20, int random_points = 100);

}  // namespace rheat
