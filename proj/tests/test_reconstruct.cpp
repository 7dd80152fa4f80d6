#include <doctest.h>

#include <cmath>

#include "rheat/catalog.hpp"
#include "rheat/errors.hpp"
#include "rheat/foliation.hpp"
#include "rheat/reconstruct.hpp"

using namespace rheat;

namespace {

double max_error_on(const Reconstruction& rec, const ExactSolutionEntry& e, const Window& w, int m = 7) {
    double err = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double t = w.t_lo + (w.t_hi - w.t_lo) * i / (m - 1);
            double r = w.r_lo + (w.r_hi - w.r_lo) * j / (m - 1);
            err = std::max(err, std::fabs(rec(t, r) - eval_value(e, t, r)));
        }
    return err;
}

double check_pair(GhPairId id, int pair_branch, const ExactSolutionEntry& e, const Window& w) {
    GhPair pr = catalog_GH(id, e.params, pair_branch);
    double t0 = 0.5 * (w.t_lo + w.t_hi), r0 = 0.5 * (w.r_lo + w.r_hi);
    Seed s{t0, r0, eval_value(e, t0, r0)};
    Reconstruction rec = reconstruct(pr, s, w);
    CHECK(rec.path_discrepancy() <= 1e-7);
    return max_error_on(rec, e, w);
}

}  // namespace

TEST_CASE("spatially homogeneous solution from the first pair") {
    auto P = make_parameters(3, 2, -1);
    auto e = make_entry(SolutionId::USOL1, 3, 2, -1, 1, {{"c", 1}});
    Seed s{0, 1, 1 / std::sqrt(2.0)};
    Window w{0, 1, 0.5, 2};
    Reconstruction rec = reconstruct(catalog_GH(GhPairId::PROP1_SOL1, P), s, w);
    CHECK(rec.path_discrepancy() <= 1e-7);
    CHECK(max_error_on(rec, e, w) <= 1e-6);
    // The integration constant read back from the seed.
    double c_fit = std::pow(s.u0, -P.q) / (-P.k * P.q) - s.t0;
    CHECK(c_fit == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("catalog solutions from their pairs") {
    auto u5 = default_entry(SolutionId::USOL5);
    CHECK(check_pair(GhPairId::PROP2_SOL1, 1, u5, {0.8, 1.2, 1.1, 1.8}) <= 1e-6);
    auto u6 = default_entry(SolutionId::USOL6);
    CHECK(check_pair(GhPairId::PROP2_SOL2, -1, u6, {0.1, 0.6, 0.6, 1.6}) <= 1e-6);
    auto u3 = default_entry(SolutionId::USOL3);
    CHECK(check_pair(GhPairId::PROP1_SOL3, -1, u3, {0.1, 0.6, 0.6, 1.6}) <= 1e-6);
    auto u4 = default_entry(SolutionId::USOL4);
    CHECK(check_pair(GhPairId::PROP1_SOL4, -1, u4, {0.1, 0.6, 0.6, 1.6}) <= 1e-6);
    auto u2 = default_entry(SolutionId::USOL2);
    CHECK(check_pair(GhPairId::PROP1_SOL2, -1, u2, {0.1, 0.6, 0.6, 1.6}) <= 1e-6);
}

TEST_CASE("inconsistent field") {
    auto P = make_parameters(3, 2, 1);
    GHField bad = [](double, double v) { return GHJet{Dual::var_v(v), Dual::var_v(v)}; };
    auto ok = [](double, double) { return std::string(); };
    CHECK_THROWS_AS(reconstruct(P, bad, ok, Seed{0.2, 1, 1}, Window{0, 0.5, 0.5, 1.5}), ConsistencyError);
}

TEST_CASE("path leaving the domain") {
    auto P = make_parameters(3, -1.5, -1);
    GhPair pr = catalog_GH(GhPairId::PROP1_SOL1, P);
    // u_t = -u^{-1/2} reaches u = 0 at t = 2/3 u0^{3/2}.
    CHECK_THROWS_AS(reconstruct(pr, Seed{0, 1, 1}, Window{0, 2, 0.5, 1.5}), DomainError);
}
