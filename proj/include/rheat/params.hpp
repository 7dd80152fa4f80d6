#pragma once

namespace rheat {

// Coefficients of u_t = u_rr + (n-1) u_r / r + k u^{q+1}.
struct Parameters {
    double n = 3.0;
    double q = 2.0;
    double k = -1.0;
    double p = -1.0;   // -2/q
    double nu = -1.0;  // 2-n
};

// Throws ConfigError when q == 0 or an input is not finite.
Parameters make_parameters(double n, double q, double k);

// sign(u)|u|^e, the form used by the source term.
double signed_pow(double u, double e);

bool is_integer(double x, double tol = 1e-12);

}  // namespace rheat
