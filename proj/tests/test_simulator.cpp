#include <doctest.h>

#include <cmath>

#include "rheat/catalog.hpp"
#include "rheat/errors.hpp"
#include "rheat/simulator.hpp"

using namespace rheat;

namespace {

SimConfig config_for(const ExactSolutionEntry& e, double r_min, double r_max, int J, double t0, double t1) {
    SimConfig c;
    c.params = e.params;
    c.entry = e;
    c.r_min = r_min;
    c.r_max = r_max;
    c.J = J;
    c.t_start = t0;
    c.t_end = t1;
    return c;
}

}  // namespace

TEST_CASE("serial and parallel right-hand sides agree") {
    auto P = make_parameters(2.5, 2, -1);
    std::vector<double> u(301), a(301), b(301);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = std::sin(0.1 * j) + 1.5;
    for (bool closure : {false, true}) {
        double r_min = closure ? 0 : 0.5;
        rhs_serial(P, r_min, 0.01, closure, u, a);
        rhs_parallel(P, r_min, 0.01, closure, u, b);
        CHECK(a == b);
    }
}

TEST_CASE("radial operator on polynomials") {
    // u = r^2 + 2n t solves the linear equation; central differences are exact on quadratics.
    auto P = make_parameters(3, 2, 0);
    const double dr = 0.05;
    std::vector<double> u(41), du(41);
    for (int j = 0; j <= 40; ++j) u[j] = (j * dr) * (j * dr);
    rhs_serial(P, 0, dr, true, u, du);
    for (int j = 0; j < 40; ++j) CHECK(du[j] == doctest::Approx(6).epsilon(1e-10));
    CHECK(du[40] == 0);
}

TEST_CASE("spatially constant data stays constant") {
    auto e = make_entry(SolutionId::USOL1, 3, 2, -1, 1, {{"c", 1}});
    auto c = config_for(e, 0.5, 2, 40, 0, 0.5);
    Trajectory tr = run(c, field_from_entry(c, e, 0));
    const RadialField& f = tr.snapshots.back();
    for (double v : f.u) CHECK(std::fabs(v - f.u[0]) <= 1e-12);
}

TEST_CASE("harmonic profile is nearly static") {
    auto P = make_parameters(3, 2, 0);
    SimConfig c;
    c.params = P;
    c.r_min = 0.5;
    c.r_max = 2;
    c.J = 60;
    c.t_end = 0.2;
    c.boundary = BoundaryMode::FROZEN;
    RadialField f = make_field(c, 0);
    for (int j = 0; j <= c.J; ++j) f.u[j] = 1 / f.r(j);
    Trajectory tr = run(c, f);
    double change = 0;
    for (int j = 0; j <= c.J; ++j) change = std::max(change, std::fabs(tr.snapshots.back().u[j] - f.u[j]));
    CHECK(change <= 10 * c.dr() * c.dr());
}

TEST_CASE("one step from exact data") {
    auto e = default_entry(SolutionId::USOL6);
    auto c = config_for(e, 0.5, 5, 450, 0, 1);
    double dt = diffusive_dt_limit(c);
    RadialField f = step(c, field_from_entry(c, e, 0), dt);
    CHECK(f.t == doctest::Approx(dt));
    // Local truncation of the three-point operator, dt dr^2 (u''''/12 + (n-1) u'''/(6r)),
    // for the initial profile u = C/r; it sets the error scale near the inner end.
    const double C = eval_value(e, 0, 1), n = e.params.n, dr = c.dr();
    double worst = 0, far = 0;
    for (int j = 1; j < c.J; ++j) {
        double r = f.r(j), err = std::fabs(f.u[j] - eval_value(e, dt, r));
        double tau = dr * dr * (24 * C / std::pow(r, 5) / 12 - (n - 1) * 6 * C / std::pow(r, 4) / (6 * r));
        worst = std::max(worst, err / (dt * std::fabs(tau)));
        if (r >= 1) far = std::max(far, err);
    }
    CHECK(worst <= 1.5);
    CHECK(far <= 1e-8);
    CHECK_THROWS_AS(step(c, field_from_entry(c, e, 0), 2 * dt), ConfigError);
}

TEST_CASE("blow-up of the homogeneous solution") {
    auto e = make_entry(SolutionId::USOL1, 3, 2, 1, 1, {{"c", -1}});
    auto c = config_for(e, 0.5, 1.5, 32, 0, 1.2);
    c.u_max = 1e6;
    Trajectory tr = run(c, field_from_entry(c, e, 0));
    REQUIRE(tr.blew_up());
    CHECK(tr.events.back().t_est >= 0.95);
    CHECK(tr.events.back().t_est <= 1.0);
}

TEST_CASE("dispersive homogeneous solution") {
    auto e = make_entry(SolutionId::USOL1, 3, 2, -1, 1, {{"c", 1}});
    auto c = config_for(e, 0.5, 1.5, 32, 0, 4);
    Trajectory tr = run(c, field_from_entry(c, e, 0));
    CHECK(!tr.blew_up());
    CHECK(tr.snapshots.back().t == 4);
    CHECK(max_error(tr.snapshots.back(), e) <= 1e-6);
}

TEST_CASE("exact-solution accuracy") {
    auto e = default_entry(SolutionId::USOL6);
    auto c = config_for(e, 0.5, 5, 450, 0, 0.5);
    c.output_times = {0.1, 0.3};
    Trajectory tr = run(c, field_from_entry(c, e, 0));
    REQUIRE(tr.snapshots.size() == 4);
    CHECK(tr.snapshots[1].t == doctest::Approx(0.1));
    for (auto& s : tr.snapshots) CHECK(max_error(s, e) <= 1e-4);
}

TEST_CASE("spatial order") {
    auto u6 = default_entry(SolutionId::USOL6);
    auto r6 = convergence_order(config_for(u6, 0.5, 5, 64, 0, 0.5), u6, {128, 256, 512});
    REQUIRE(r6.order);
    CHECK(*r6.order >= 1.8);
    CHECK(*r6.order <= 2.2);

    auto u5 = default_entry(SolutionId::USOL5);
    auto r5 = convergence_order(config_for(u5, 0.5, 4, 64, 0, 0.3), u5, {64, 128, 256});
    REQUIRE(r5.order);
    CHECK(*r5.order >= 1.8);
    CHECK(*r5.order <= 2.2);

    auto u1 = make_entry(SolutionId::USOL1, 3, 2, -1, 1, {{"c", 1}});
    auto r1 = convergence_order(config_for(u1, 0.5, 2, 16, 0, 0.5), u1, {16, 32, 64});
    CHECK(r1.spatially_trivial);
    CHECK(!r1.order);
}

TEST_CASE("configuration errors") {
    auto e = default_entry(SolutionId::USOL6);
    auto c = config_for(e, 0.5, 5, 64, 0, 0.5);
    auto bad = c;
    bad.r_max = 0.4;
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = c;
    bad.entry.reset();
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = c;
    bad.output_times = {0.3, 0.2};
    CHECK_THROWS_AS(validate(bad), ConfigError);
    bad = c;
    bad.r_min = 0;
    CHECK_THROWS_AS(validate(bad), ConfigError);
    CHECK_THROWS_AS(boundary_mode_from_string("PERIODIC"), ConfigError);
}

TEST_CASE("config json") {
    auto e = default_entry(SolutionId::USOL6);
    auto c = config_for(e, 0.5, 5, 64, 0, 0.5);
    c.output_times = {0.25};
    SimConfig d = sim_config_from_json(to_json(c));
    CHECK(d.J == 64);
    CHECK(d.r_max == 5);
    CHECK(d.output_times == c.output_times);
    REQUIRE(d.entry);
    CHECK(d.entry->id == SolutionId::USOL6);
    auto j = to_json(c);
    j["params"]["k"] = -2;
    CHECK_THROWS_AS(sim_config_from_json(j), ConfigError);
    CHECK_THROWS_AS(sim_config_from_json(nlohmann::json{{"J", 10}}), ConfigError);
}
