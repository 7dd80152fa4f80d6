#include <doctest.h>

#include <cmath>

#include "rheat/catalog.hpp"
#include "rheat/errors.hpp"
#include "rheat/residuals.hpp"
#include "rheat/verify.hpp"

using namespace rheat;

namespace {

// Central differences of the value evaluator, independent of the jet arithmetic.
Jet2 fd_jet(const ExactSolutionEntry& e, double t, double r) {
    const double h = 1e-4 * std::max(1.0, std::fabs(r));
    const double ht = 1e-5;
    Jet2 j;
    j.u = eval_value(e, t, r);
    j.u_t = (eval_value(e, t + ht, r) - eval_value(e, t - ht, r)) / (2 * ht);
    j.u_r = (eval_value(e, t, r + h) - eval_value(e, t, r - h)) / (2 * h);
    j.u_rr = (eval_value(e, t, r + h) - 2 * j.u + eval_value(e, t, r - h)) / (h * h);
    return j;
}

}  // namespace

TEST_CASE("parameters") {
    auto P = make_parameters(2.5, 2, -1);
    CHECK(P.p == doctest::Approx(-1));
    CHECK(P.nu == doctest::Approx(-0.5));
    auto Q = make_parameters(6, -0.5, -1);
    CHECK(Q.p == doctest::Approx(4));
    CHECK(Q.nu == doctest::Approx(-4));
    CHECK_THROWS_AS(make_parameters(3, 0, 1), ConfigError);
    CHECK_THROWS_AS(make_parameters(NAN, 2, 1), ConfigError);
}

TEST_CASE("catalog point values") {
    auto u1 = make_entry(SolutionId::USOL1, 3, 2, -1, 1, {{"c", 0}});
    Jet2 j = eval_exact(u1, 1, 0.7);
    CHECK(j.u == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(j.u_r == 0);

    auto u5 = make_entry(SolutionId::USOL5, 2.5, 2, -1, 1, {{"c", 0}});
    CHECK(std::fabs(eval_value(u5, 1, 1)) < 1e-15);

    auto u6 = make_entry(SolutionId::USOL6, 2.5, 2, -1, 1, {{"c", 0}});
    CHECK(eval_value(u6, 0, 1) == doctest::Approx(5 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("constraints raise") {
    CHECK_THROWS_AS(make_entry(SolutionId::USOL6, 3, 2, -1), ConfigError);
    CHECK_THROWS_AS(make_entry(SolutionId::USOL6, 2.5, 2, 1), ConfigError);
    CHECK_THROWS_AS(make_entry(SolutionId::USOL2_CUTOFF, 4.5, 2 / (2 - 4.5), -1), ConfigError);
    auto u1 = make_entry(SolutionId::USOL1, 3, 2, 1, 1, {{"c", -1}});
    CHECK_THROWS_AS(eval_exact(u1, 1.5, 1), DomainError);
    CHECK_THROWS_AS(solution_id_from_string("USOL9"), ConfigError);
}

TEST_CASE("jets agree with finite differences") {
    for (auto id : all_solution_ids()) {
        auto e = default_entry(id);
        SampleBox b = sample_box(e);
        for (double ft : {0.3, 0.7})
            for (double fr : {0.35, 0.6}) {
                double t = b.t_lo + ft * (b.t_hi - b.t_lo), r = b.r_lo + fr * (b.r_hi - b.r_lo);
                if (!e.valid(t, r)) continue;
                bool inside = true;
                for (double f : front_radii(e, t)) inside = inside && std::fabs(f - r) > 1e-2;
                if (!inside) continue;
                Jet2 a = eval_exact(e, t, r), o = fd_jet(e, t, r);
                double s = 1 + std::fabs(a.u) + std::fabs(a.u_t) + std::fabs(a.u_r) + std::fabs(a.u_rr);
                INFO(to_string(id), " t=", t, " r=", r);
                CHECK(std::fabs(a.u - o.u) <= 1e-13 * s);
                CHECK(std::fabs(a.u_t - o.u_t) <= 1e-6 * s);
                CHECK(std::fabs(a.u_r - o.u_r) <= 1e-6 * s);
                CHECK(std::fabs(a.u_rr - o.u_rr) <= 1e-4 * s);
            }
    }
}

TEST_CASE("pde residual") {
    auto u6 = make_entry(SolutionId::USOL6, 2.5, 2, -1, 1, {{"c", 0}});
    Jet2 j = eval_exact(u6, 0.3, 1.7);
    CHECK(std::fabs(pde_residual(u6.params, j, 1.7)) <= 1e-12 * pde_residual_scale(u6.params, j));

    auto P = make_parameters(3, 2, 1);
    CHECK(pde_residual(P, Jet2{1, 0, 0, 0}, 1) == doctest::Approx(-1));
}

TEST_CASE("catalog residuals on the sample grids") {
    for (auto id : all_solution_ids()) {
        CatalogCheck c = verify_entry(default_entry(id), 20, 20);
        INFO(to_string(id));
        CHECK(c.samples.size() >= 100);
        CHECK(c.max_scaled <= 1e-9);
    }
}

TEST_CASE("similarity profile residual") {
    auto P = make_parameters(3, 2, -1);
    double U = std::pow(P.q / 2, 1 / P.q);
    CHECK(similarity_ode_residual(P, SimilarityForm::XI_FORM, 1.0, {U, 0, 0}) == doctest::Approx(0).epsilon(1e-14));
    CHECK(similarity_ode_residual(P, SimilarityForm::X_FORM, 0.4, {0, 0, 0}) == 0);
    auto Q = make_parameters(3, 2, 1);
    CHECK(similarity_ode_residual(Q, SimilarityForm::X_FORM, 1.0, {1, 0, 0}) == doctest::Approx(1));
}

TEST_CASE("entry json round trip") {
    for (auto id : all_solution_ids()) {
        auto e = default_entry(id);
        auto f = entry_from_json(to_json(e));
        CHECK(f.id == e.id);
        CHECK(f.params.n == e.params.n);
        CHECK(f.params.q == e.params.q);
        CHECK(f.branch == e.branch);
        CHECK(f.constants == e.constants);
    }
}
