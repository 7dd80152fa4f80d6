#pragma once

#include <string>

namespace rheat {

struct SpecialValue {
    enum class Method { SERIES, TRANSFORMED_SERIES, REFLECTION, LANCZOS, GAUSS_SUM };
    double value = 0;
    double err = 0;  // absolute error bound
    Method method = Method::SERIES;
};

std::string to_string(SpecialValue::Method m);

// Lanczos approximation (g = 7, 9 terms); reflection below x = 1/2.
// DomainError at the poles x = 0, -1, -2, ...
SpecialValue gamma_fn(double x);

// 1 / Gamma(x), zero at the poles.
double rgamma(double x);

// Gauss hypergeometric 2F1(a, b; c; z) for 0 <= z <= 1. Direct series below
// z = 1/2, the z -> 1-z connection formula above (unless c-a-b is an
// integer), Gauss summation at z = 1 when c-a-b > 0.
SpecialValue hyp2f1(double a, double b, double c, double z);

}  // namespace rheat
