#include "rheat/special.hpp"

#include <cmath>
#include <numbers>

#include "rheat/errors.hpp"
#include "rheat/params.hpp"

namespace rheat {

std::string to_string(SpecialValue::Method m) {
    switch (m) {
        case SpecialValue::Method::SERIES: return "SERIES";
        case SpecialValue::Method::TRANSFORMED_SERIES: return "TRANSFORMED_SERIES";
        case SpecialValue::Method::REFLECTION: return "REFLECTION";
        case SpecialValue::Method::LANCZOS: return "LANCZOS";
        case SpecialValue::Method::GAUSS_SUM: return "GAUSS_SUM";
    }
    return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;

constexpr double kLanczosG = 7;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
    771.32342877765313,   -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos(double x) {
    // Gamma(x) for x >= 1/2.
    double z = x - 1;
    double a = kLanczos[0];
    double t = z + kLanczosG + 0.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    double half = std::pow(t, (z + 0.5) / 2);
    return std::sqrt(2 * kPi) * half * half * std::exp(-t) * a;
}

bool is_pole(double x) { return x <= 0 && x == std::floor(x); }

}  // namespace

SpecialValue gamma_fn(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
    if (is_pole(x)) throw DomainError("gamma: pole at a non-positive integer");
    if (x >= 0.5) {
        double v = lanczos(x);
        return {v, std::fabs(v) * 2e-15 * (1 + std::fabs(x) * kEps * 10), SpecialValue::Method::LANCZOS};
    }
    double s = std::sin(kPi * x);
    double v = kPi / (s * lanczos(1 - x));
    // Loss in sin(pi x) near the poles grows like 1 / distance.
    double d = std::fabs(x - std::round(x));
    double rel = 2e-15 + kEps / std::max(d, kEps);
    return {v, std::fabs(v) * rel, SpecialValue::Method::REFLECTION};
}

double rgamma(double x) {
    if (is_pole(x)) return 0.0;
    return 1 / gamma_fn(x).value;
}

namespace {

struct Series {
    double value, err;
};

// Direct Gauss series; terminates when a or b is a non-positive integer.
Series gauss_series(double a, double b, double c, double z) {
    double term = 1, sum = 1, abs_sum = 1;
    for (int m = 0; m < 200000; ++m) {
        double r = (a + m) * (b + m) / ((c + m) * (m + 1)) * z;
        term *= r;
        sum += term;
        abs_sum += std::fabs(term);
        if (term == 0) return {sum, abs_sum * kEps * 4};
        // Once the ratio settles below one the tail is bounded geometrically.
        double ratio = std::fabs(r);
        if (m > 2 && ratio < 1 && std::fabs(term) <= 1e-16 * std::fabs(sum)) {
            double tail = std::fabs(term) * ratio / (1 - ratio);
            return {sum, tail + abs_sum * kEps * 4};
        }
    }
    throw NumericError("hyp2f1: series did not converge");
}

}  // namespace

SpecialValue hyp2f1(double a, double b, double c, double z) {
    for (double v : {a, b, c, z})
        if (!std::isfinite(v)) throw DomainError("hyp2f1: non-finite argument");
    if (is_pole(c)) throw DomainError("hyp2f1: c is a non-positive integer");
    if (z < 0 || z > 1) throw DomainError("hyp2f1: z outside [0, 1]");
    if (z == 0) return {1.0, 0.0, SpecialValue::Method::SERIES};

    const double s = c - a - b;
    bool terminating = is_pole(a) || is_pole(b);
    if (z == 1) {
        if (terminating) {
            Series r = gauss_series(a, b, c, 1);
            return {r.value, r.err, SpecialValue::Method::SERIES};
        }
        if (s <= 0) throw DomainError("hyp2f1: divergent at z = 1 (c-a-b <= 0)");
        auto g = gamma_fn(c), gs = gamma_fn(s);
        double v = g.value * gs.value * rgamma(c - a) * rgamma(c - b);
        return {v, std::fabs(v) * 1e-14, SpecialValue::Method::GAUSS_SUM};
    }

    bool integer_s = std::fabs(s - std::round(s)) < 1e-9;
    if (z < 0.5 || terminating || integer_s) {
        Series r = gauss_series(a, b, c, z);
        return {r.value, r.err, SpecialValue::Method::SERIES};
    }
    // z -> 1 - z connection formula.
    double w = 1 - z;
    double A = gamma_fn(c).value * gamma_fn(s).value * rgamma(c - a) * rgamma(c - b);
    double B = gamma_fn(c).value * gamma_fn(-s).value * rgamma(a) * rgamma(b);
    Series f1{0, 0}, f2{0, 0};
    if (A != 0) f1 = gauss_series(a, b, 1 - s, w);
    if (B != 0) f2 = gauss_series(c - a, c - b, 1 + s, w);
    double ws = std::pow(w, s);
    double v = A * f1.value + B * ws * f2.value;
    double err = std::fabs(A) * f1.err + std::fabs(B * ws) * f2.err +
                 1e-14 * (std::fabs(A * f1.value) + std::fabs(B * ws * f2.value));
    return {v, err, SpecialValue::Method::TRANSFORMED_SERIES};
}

}  // namespace rheat
