#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>

#include "rheat/errors.hpp"
#include "rheat/special.hpp"

using namespace rheat;

namespace {

double boost_2f1(double a, double b, double c, double z) {
    return boost::math::hypergeometric_pFq({a, b}, {c}, z);
}

}  // namespace

TEST_CASE("gamma values") {
    CHECK(gamma_fn(1).value == doctest::Approx(1).epsilon(1e-15));
    CHECK(gamma_fn(5).value == doctest::Approx(24).epsilon(1e-14));
    CHECK(gamma_fn(0.5).value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_fn(0.75).value * gamma_fn(0.25).value == doctest::Approx(M_PI * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(gamma_fn(0.25).method == SpecialValue::Method::REFLECTION);
    CHECK_THROWS_AS(gamma_fn(0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-3), DomainError);
    CHECK(rgamma(-2) == 0);
    CHECK(rgamma(4) == doctest::Approx(1.0 / 6));
}

TEST_CASE("gamma recurrence and std::tgamma") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> X(0.1, 20), Y(-6, 25);
    for (int i = 0; i < 500; ++i) {
        double x = X(rng);
        double g = gamma_fn(x).value, g1 = gamma_fn(x + 1).value;
        CHECK(std::fabs(g1 - x * g) <= 1e-13 * std::fabs(g1));
        double y = Y(rng);
        if (std::fabs(y - std::round(y)) < 1e-3 && y < 0.5) continue;
        CHECK(gamma_fn(y).value == doctest::Approx(std::tgamma(y)).epsilon(1e-12));
    }
}

TEST_CASE("hypergeometric special values") {
    CHECK(hyp2f1(0.3, -1.7, 2.2, 0).value == 1);
    CHECK(hyp2f1(1, 1, 2, 0.5).value == doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-14));
    double gauss = std::tgamma(3) * std::tgamma(1.25) / (std::tgamma(2.75) * std::tgamma(1.5));
    SpecialValue s = hyp2f1(0.25, 1.5, 3, 1);
    CHECK(s.method == SpecialValue::Method::GAUSS_SUM);
    CHECK(s.value == doctest::Approx(gauss).epsilon(1e-13));
    // The series just below z = 1 approaches the sum.
    CHECK(hyp2f1(0.25, 1.5, 3, 1 - 1e-9).value == doctest::Approx(gauss).epsilon(1e-6));
    // Terminating series: F(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1)).
    double b = 0.7, c = 1.9, z = 0.8;
    CHECK(hyp2f1(-2, b, c, z).value == doctest::Approx(1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1))));
    CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 0.5, 1), DomainError);
    CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1.5, 1.2), DomainError);
    CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1.5, -0.1), DomainError);
}

TEST_CASE("hypergeometric contiguous relation") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> A(-2.5, 2.5), C(0.3, 4), Z(0, 0.5);
    for (int i = 0; i < 300; ++i) {
        double a = A(rng), b = A(rng), c = C(rng), z = Z(rng);
        double lhs = c * hyp2f1(a, b, c, z).value - c * hyp2f1(a + 1, b, c, z).value +
                     b * z * hyp2f1(a + 1, b + 1, c + 1, z).value;
        double scale = std::fabs(c * hyp2f1(a, b, c, z).value) + std::fabs(c * hyp2f1(a + 1, b, c, z).value) + 1;
        CHECK(std::fabs(lhs) <= 1e-11 * scale);
    }
}

TEST_CASE("hypergeometric against boost") {
    struct Case {
        double a, b, c, z;
    };
    for (Case k : {Case{0.25, 1.5, 3, 0.3}, Case{0.25, 1.5, 3, 0.9}, Case{-0.5, 1.5, 2.25, 0.6},
                   Case{-0.5, 1.5, 2.25, 0.99}, Case{0.5, 2.5, 3.25, 0.75}, Case{1.2, 0.3, 1.1, 0.95},
                   Case{1, 1, 2, 0.7}, Case{0.5, 0.5, 1, 0.8}}) {
        SpecialValue s = hyp2f1(k.a, k.b, k.c, k.z);
        double ref = boost_2f1(k.a, k.b, k.c, k.z);
        INFO(k.a, " ", k.b, " ", k.c, " ", k.z);
        CHECK(s.value == doctest::Approx(ref).epsilon(1e-11));
        CHECK(s.err <= 1e-10 * (1 + std::fabs(ref)));
    }
}
