#pragma once

#include <cmath>

#include "rheat/errors.hpp"
#include "rheat/params.hpp"

namespace rheat {

// u and the derivatives that enter the PDE residual, at one point (t, r).
// Arithmetic propagates them exactly: only d/dt, d/dr and d2/dr2 are carried,
// which closes under products because no mixed term is needed.
struct Jet2 {
    double u = 0, u_t = 0, u_r = 0, u_rr = 0;

    static Jet2 constant(double c) { return {c, 0, 0, 0}; }
    static Jet2 var_t(double t) { return {t, 1, 0, 0}; }
    static Jet2 var_r(double r) { return {r, 0, 1, 0}; }
};

// Composes a scalar function with value h0 and derivatives h1, h2.
inline Jet2 chain(const Jet2& f, double h0, double h1, double h2) {
    return {h0, h1 * f.u_t, h1 * f.u_r, h2 * f.u_r * f.u_r + h1 * f.u_rr};
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.u + b.u, a.u_t + b.u_t, a.u_r + b.u_r, a.u_rr + b.u_rr};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.u - b.u, a.u_t - b.u_t, a.u_r - b.u_r, a.u_rr - b.u_rr};
}
inline Jet2 operator-(const Jet2& a) { return {-a.u, -a.u_t, -a.u_r, -a.u_rr}; }
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.u * b.u, a.u_t * b.u + a.u * b.u_t, a.u_r * b.u + a.u * b.u_r,
            a.u_rr * b.u + 2 * a.u_r * b.u_r + a.u * b.u_rr};
}
inline Jet2 operator*(double c, const Jet2& a) { return {c * a.u, c * a.u_t, c * a.u_r, c * a.u_rr}; }
inline Jet2 operator*(const Jet2& a, double c) { return c * a; }
inline Jet2 operator+(const Jet2& a, double c) { return {a.u + c, a.u_t, a.u_r, a.u_rr}; }
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }

inline Jet2 inv(const Jet2& a) {
    if (a.u == 0) throw DomainError("jet division by zero");
    double i = 1 / a.u;
    return chain(a, i, -i * i, 2 * i * i * i);
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1 / c); }
inline Jet2 operator/(double c, const Jet2& a) { return c * inv(a); }

// Real power; negative bases only for integer exponents.
inline Jet2 pow(const Jet2& a, double e) {
    if (a.u < 0 && !is_integer(e)) throw DomainError("jet pow: negative base with non-integer exponent");
    if (a.u == 0 && e < 2 && e != 0 && e != 1) throw DomainError("jet pow: derivatives singular at zero base");
    if (e == 0) return Jet2::constant(1);
    double h0 = std::pow(a.u, e);
    double h1 = e * std::pow(a.u, e - 1);
    double h2 = e * (e - 1) * std::pow(a.u, e - 2);
    if (e == 1) h2 = 0;
    return chain(a, h0, h1, h2);
}

inline Jet2 sqrt(const Jet2& a) { return pow(a, 0.5); }

}  // namespace rheat
