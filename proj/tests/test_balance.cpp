#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rheat/ansatz.hpp"
#include "rheat/balance.hpp"
#include "rheat/errors.hpp"
#include "rheat/foliation.hpp"
#include "rheat/reduced.hpp"

using namespace rheat;

namespace {

const PowerCoefficient* find_power(const std::vector<PowerCoefficient>& ex, double e) {
    for (auto& c : ex)
        if (std::fabs(c.exponent.value - e) < 1e-12) return &c;
    return nullptr;
}

bool has_case(const std::vector<BalanceCase>& cs, Rational q, Rational a, Rational b) {
    for (auto& c : cs) {
        if (!c.q || *c.q != q || !c.b) continue;
        Rational ca = c.a.at(q), cb = c.b->at(q);
        if ((ca == a && cb == b) || (ca == b && cb == a)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("exponents") {
    Exponent h = Exponent::from_double(0.5);
    REQUIRE(h.exact);
    CHECK(*h.exact == Rational(1, 2));
    CHECK(!Exponent::from_double(std::sqrt(2.0)).exact);
    CHECK(Exponent::rational(Rational(1, 3)).same_as(Exponent::real(1.0 / 3.0)));
    CHECK(!Exponent::rational(Rational(1, 3)).same_as(Exponent::rational(Rational(1, 2))));
    CHECK((Exponent::rational(Rational(1, 3)) + Exponent::rational(Rational(2, 3))).exact == Rational(1));
}

TEST_CASE("expansion reproduces direct substitution") {
    auto P = make_parameters(2.5, -4, 1);
    PowerAnsatz an({{polynomial_coefficient({1.0, 0.3}), polynomial_coefficient({-0.2, 0.5, 0.1}), Exponent::rational(1)},
                    {constant_coefficient(0.7), polynomial_coefficient({0.4, -1.0}), Exponent::rational(-1)},
                    {polynomial_coefficient({0.0, 2.0}), constant_coefficient(-0.6), Exponent::rational(Rational(1, 2))}});
    auto ex = expand_ansatz(P, an);
    for (double x : {0.2, 0.9, 1.7})
        for (double v : {0.3, 1.1, 2.4}) {
            auto pt = an.eval(x, v);
            GHJet gh{{pt.G, pt.Gx, pt.Gv}, {pt.H, pt.Hx, pt.Hv}};
            auto [R1, R2] = resolving_residuals(P, x, v, gh);
            auto [E1, E2] = evaluate_expansion(ex, x, v);
            CHECK(E1 == doctest::Approx(R1).epsilon(1e-12));
            CHECK(E2 == doctest::Approx(R2).epsilon(1e-12));
        }
}

TEST_CASE("expansion coefficient fixing the two-term amplitude") {
    for (double q : {-4.0, 2.0, 0.6}) {
        auto P = make_parameters(3, q, -0.8);
        double ha = 1.7;
        PowerAnsatz an({{constant_coefficient(0.4), constant_coefficient(0.9), Exponent::rational(1)},
                        {constant_coefficient(0.0), constant_coefficient(ha), Exponent::from_double(1 + q / 2)}});
        auto ex = expand_ansatz(P, an);
        const PowerCoefficient* c = find_power(ex, q + 1);
        REQUIRE(c);
        CHECK(c->R2(0.5) == doctest::Approx(-(1 + q / 2) * ha * ha - P.k).epsilon(1e-13));
    }
}

TEST_CASE("one-power expansion") {
    auto P = make_parameters(3, 2, 1);
    PowerAnsatz an({{constant_coefficient(0), constant_coefficient(0), Exponent::rational(1)}});
    auto ex = expand_ansatz(P, an);
    for (auto& c : ex) {
        if (std::fabs(c.exponent.value - 1) < 1e-12) {
            CHECK(c.R1(0.4) == 0);
            CHECK(c.R2(0.4) == 0);
        }
    }
    CHECK(find_power(ex, 1));
    CHECK(find_power(ex, 3));
    CHECK(find_power(ex, 3)->R2(0.4) == doctest::Approx(-1));
}

TEST_CASE("three-term coefficient at q = a = 2, b = 0") {
    auto P = make_parameters(2.5, 2, -0.5);
    double h1 = 0.9;
    PowerAnsatz an({{constant_coefficient(0.3), constant_coefficient(0.1), Exponent::rational(1)},
                    {constant_coefficient(0.2), constant_coefficient(h1), Exponent::rational(2)},
                    {constant_coefficient(0.5), constant_coefficient(0.4), Exponent::rational(0)}});
    auto ex = expand_ansatz(P, an);
    const PowerCoefficient* c = find_power(ex, 3);
    REQUIRE(c);
    CHECK(c->R2(1.3) == doctest::Approx(-2 * h1 * h1 - P.k).epsilon(1e-13));
}

TEST_CASE("repeated exponents rejected") {
    CHECK_THROWS_AS(PowerAnsatz({{constant_coefficient(1), constant_coefficient(1), Exponent::rational(1)},
                                 {constant_coefficient(1), constant_coefficient(1), Exponent::real(1.0)}}),
                    ConfigError);
}

TEST_CASE("two-term balances") {
    auto cs = enumerate_balances(2);
    REQUIRE(cs.size() == 2);
    CHECK(same_case_set(cs, reference_balance_cases(2)));
    bool found = false;
    for (auto& c : cs)
        if (!c.q && c.a.q_coef == Rational(1, 2) && c.a.constant == Rational(1)) found = true;
    CHECK(found);
}

TEST_CASE("three-term balances") {
    auto cs = enumerate_balances(3);
    CHECK(cs.size() == 3);
    CHECK(has_case(cs, Rational(2), Rational(2), Rational(0)));
    CHECK(has_case(cs, Rational(-3, 2), Rational(0), Rational(1, 2)));
    CHECK(has_case(cs, Rational(-8, 3), Rational(-1, 3), Rational(1, 3)));
    CHECK(!has_case(cs, Rational(-3, 2), Rational(0), Rational(-1, 2)));
}

TEST_CASE("classification of fixed exponents") {
    CHECK(classify_balance(Rational(2), Rational(2), Rational(0)) == BalanceStatus::NONTRIVIAL);
    CHECK(classify_balance(Rational(-3, 2), Rational(0), Rational(1, 2)) == BalanceStatus::NONTRIVIAL);
    CHECK(classify_balance(Rational(-3, 2), Rational(0), Rational(-1, 2)) == BalanceStatus::FEWER_TERMS);
    CHECK(classify_balance(Rational(-2, 3), Rational(-1, 3), Rational(1, 3)) == BalanceStatus::FEWER_TERMS);
    CHECK(classify_balance(Rational(1), Rational(2), Rational(0)) == BalanceStatus::FEWER_TERMS);
    CHECK(classify_balance(Rational(2), Rational(1), Rational(0)) == BalanceStatus::INVALID_EXPONENTS);
}

TEST_CASE("first reduced system") {
    auto P = make_parameters(2.5, -4, 1);
    auto h2 = [](double x) { return 2 / (3 * x + 1) - 0.5; };
    auto h2p = [](double x) { return -6 / ((3 * x + 1) * (3 * x + 1)); };
    CHECK(h2(1) == doctest::Approx(0));
    CHECK(h2p(1) == doctest::Approx(-0.375));
    CHECK(sys1_invariant(P, 0, h2(0), h2p(0)) == doctest::Approx(-1.5));
    for (double x : {0.0, 1.0, 3.7}) {
        auto r = sys1_residual(P, x, h2(x), h2p(x), -1.5);
        CHECK(std::fabs(r.first) <= 1e-12);
        CHECK(std::fabs(r.second) <= 1e-12);
    }
    auto N1 = make_parameters(1, 2, -1);
    auto z = sys1_residual(N1, 0.6, 0, 0, 0);
    CHECK(z.first == 0);
    CHECK(z.second == 0);
}

TEST_CASE("first reduced system from the fourth pair") {
    auto P = make_parameters(2.5, 2, -1);
    GhPair pr = catalog_GH(GhPairId::PROP1_SOL4, P, 1);
    // The coefficient of v in H, read off by dividing out the v^2 part.
    auto h2 = [&](double x) {
        double a = pr.eval(x, 1).H.val, b = pr.eval(x, 2).H.val;
        return 2 * a - b / 2;
    };
    const double d = 1e-6;
    double c = sys1_invariant(P, 0.5, h2(0.5), (h2(0.5 + d) - h2(0.5 - d)) / (2 * d));
    for (double x : {0.1, 0.5, 2.0}) {
        double hp = (h2(x + d) - h2(x - d)) / (2 * d);
        auto r = sys1_residual(P, x, h2(x), hp, c);
        CHECK(std::fabs(r.first) <= 1e-8);
        CHECK(std::fabs(r.second) <= 1e-8);
    }
}

TEST_CASE("second reduced system") {
    auto P = make_parameters(2.5, -1.5, 1);
    for (double h : {2.0, -0.5, 0.0})
        for (double x : {0.0, 0.4, 3.0}) {
            auto r = sys2_residual(P, x, h, 0, 0, 0);
            CHECK(r.first == doctest::Approx(0).epsilon(1e-14));
            CHECK(r.second == doctest::Approx(0).epsilon(1e-14));
        }
    CHECK(sys2_residual(P, 1, 1, 0, 0, 0).first == doctest::Approx(-6));
    for (double h : {-1.3, 0.7, 3.1})
        CHECK(sys2_residual(P, 0.8, h, 0, 0, 0).first == doctest::Approx(2 * h * (2 * h + 1) * (h - 2)));

    auto roots = sys2_constant_solutions(P, -5, 5, 1e-10);
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::fabs(roots[1]) < 1e-12);
    CHECK(roots[2] == doctest::Approx(2).epsilon(1e-12));
}
