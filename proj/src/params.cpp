#include "rheat/params.hpp"

#include <cmath>

#include "rheat/errors.hpp"

namespace rheat {

Parameters make_parameters(double n, double q, double k) {
    if (!std::isfinite(n) || !std::isfinite(q) || !std::isfinite(k))
        throw ConfigError("parameters must be finite");
    if (q == 0.0) throw ConfigError("q must be nonzero");
    Parameters P;
    P.n = n;
    P.q = q;
    P.k = k;
    P.p = -2.0 / q;
    P.nu = 2.0 - n;
    return P;
}

double signed_pow(double u, double e) {
    if (u == 0.0) return e > 0 ? 0.0 : (e == 0 ? 1.0 : INFINITY);
    double a = std::pow(std::fabs(u), e);
    return u < 0 ? -a : a;
}

bool is_integer(double x, double tol) { return std::fabs(x - std::round(x)) <= tol; }

}  // namespace rheat
