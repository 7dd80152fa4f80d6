#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rheat/balance.hpp"
#include "rheat/params.hpp"

namespace rheat {

// An exponent of v. When `exact` is set, comparisons use it; otherwise values
// closer than 1e-12 are treated as equal.
struct Exponent {
    double value = 0;
    std::optional<Rational> exact;

    static Exponent rational(Rational r);
    static Exponent real(double v);
    // Detects small-denominator rationals (denominator <= 1000).
    static Exponent from_double(double v);

    bool same_as(const Exponent& o) const;
    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;
};

// Value and first x-derivative of a coefficient function.
using CoefficientFn = std::function<std::pair<double, double>(double x)>;

struct AnsatzTerm {
    CoefficientFn g;  // coefficient in G
    CoefficientFn h;  // coefficient in H
    Exponent exponent;
};

// G = sum g_i(x) v^{a_i}, H = sum h_i(x) v^{a_i}; exponents pairwise distinct.
class PowerAnsatz {
public:
    PowerAnsatz() = default;
    explicit PowerAnsatz(std::vector<AnsatzTerm> terms);  // ConfigError on repeated exponents

    const std::vector<AnsatzTerm>& terms() const { return terms_; }
    // G, H and their x and v derivatives at (x, v); v > 0 unless all exponents are integers.
    struct Point {
        double G, Gx, Gv, H, Hx, Hv;
    };
    Point eval(double x, double v) const;

private:
    std::vector<AnsatzTerm> terms_;
};

CoefficientFn constant_coefficient(double c);
// c_0 + c_1 x + c_2 x^2 + ...
CoefficientFn polynomial_coefficient(std::vector<double> coeffs);

struct PowerCoefficient {
    Exponent exponent;
    std::function<double(double x)> R1, R2;
};

// Coefficients of each power of v after substituting the ansatz into the
// resolving system. Powers that coincide are merged and their coefficients summed.
std::vector<PowerCoefficient> expand_ansatz(const Parameters& P, const PowerAnsatz& ansatz);

// Sums coefficient(x) v^exponent over the expansion.
std::pair<double, double> evaluate_expansion(const std::vector<PowerCoefficient>& ex, double x, double v);

nlohmann::json to_json(const Exponent& e);

}  // namespace rheat
