#include "rheat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "rheat/errors.hpp"

namespace rheat {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Piece {
    double a, b, value, error;
    bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const Integrand& f, double a, double b, int& evals, bool& bad) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double resk = fc * kWgk[7], resg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        double dx = h * kXgk[j];
        double f1 = f(c - dx), f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    double value = resk * h;
    double error = std::fabs((resk - resg) * h);
    if (!std::isfinite(value) || !std::isfinite(error)) bad = true;
    return {a, b, value, error};
}

}  // namespace

QuadResult integrate_gk(const Integrand& f, double a, double b, const QuadOptions& opt) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    bool bad = false;
    std::priority_queue<Piece> heap;
    Piece first = gk15(f, a, b, res.evaluations, bad);
    heap.push(first);
    double total = first.value, err = first.error;
    int intervals = 1;
    while (!bad) {
        if (err <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
            res.converged = true;
            break;
        }
        if (intervals >= opt.max_intervals) break;
        Piece worst = heap.top();
        heap.pop();
        double m = 0.5 * (worst.a + worst.b);
        if (!(m > std::min(worst.a, worst.b) && m < std::max(worst.a, worst.b))) break;
        Piece l = gk15(f, worst.a, m, res.evaluations, bad);
        Piece r = gk15(f, m, worst.b, res.evaluations, bad);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++intervals;
    }
    if (bad) {
        res.value = std::numeric_limits<double>::quiet_NaN();
        res.error = std::numeric_limits<double>::infinity();
        res.divergent = true;
        return res;
    }
    // Recompute the sums to shed accumulated update error.
    total = 0;
    err = 0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    res.value = total;
    res.error = err;
    res.divergent = std::fabs(total) > opt.divergence_cap;
    return res;
}

QuadResult integrate(const Integrand& f, double a, double b, EndpointKind left, EndpointKind right,
                     const QuadOptions& opt) {
    if (b < a) {
        QuadResult r = integrate(f, b, a, right, left, opt);
        r.value = -r.value;
        return r;
    }
    if (a == b) return integrate_gk(f, a, b, opt);
    const double m = 0.5 * (a + b);
    auto part = [&](double lo, double hi, EndpointKind kl, EndpointKind kr) {
        QuadOptions o = opt;
        o.abs_tol = opt.abs_tol / 2;
        if (kl == EndpointKind::SQRT) {
            double L = std::sqrt(hi - lo);
            auto g = [&](double s) { return s == 0 ? 0.0 : 2 * s * f(lo + s * s); };
            return integrate_gk(g, 0, L, o);
        }
        if (kr == EndpointKind::SQRT) {
            double L = std::sqrt(hi - lo);
            auto g = [&](double s) { return s == 0 ? 0.0 : 2 * s * f(hi - s * s); };
            return integrate_gk(g, 0, L, o);
        }
        return integrate_gk(f, lo, hi, o);
    };
    if (left == EndpointKind::REGULAR && right == EndpointKind::REGULAR) return integrate_gk(f, a, b, opt);
    if (right == EndpointKind::REGULAR) return part(a, b, left, EndpointKind::REGULAR);
    if (left == EndpointKind::REGULAR) return part(a, b, EndpointKind::REGULAR, right);
    QuadResult l = part(a, m, left, EndpointKind::REGULAR);
    QuadResult r = part(m, b, EndpointKind::REGULAR, right);
    QuadResult out;
    out.value = l.value + r.value;
    out.error = l.error + r.error;
    out.converged = l.converged && r.converged;
    out.divergent = l.divergent || r.divergent || std::fabs(out.value) > opt.divergence_cap;
    out.evaluations = l.evaluations + r.evaluations;
    return out;
}

QuadResult integrate_to_infinity(const Integrand& f, double a, EndpointKind left, double r_cut,
                                 const QuadOptions& opt) {
    if (!(r_cut > a)) throw ConfigError("r_cut must exceed the lower limit");
    QuadOptions half = opt;
    half.abs_tol = opt.abs_tol / 2;
    QuadResult head = integrate(f, a, r_cut, left, EndpointKind::REGULAR, half);
    if (head.divergent) return head;

    auto mapped = [&](double s) {
        if (s == 0) return 0.0;
        double r = r_cut / s;
        return f(r) * r_cut / (s * s);
    };
    QuadResult tail = integrate_gk(mapped, 0, 1, half);
    QuadResult out;
    out.evaluations = head.evaluations + tail.evaluations;
    if (tail.converged && !tail.divergent) {
        out.value = head.value + tail.value;
        out.error = head.error + tail.error;
        out.converged = head.converged;
        out.divergent = std::fabs(out.value) > opt.divergence_cap;
        return out;
    }
    // Growth test over successive doublings.
    double total = head.value, err = head.error, lo = r_cut;
    int small = 0;
    bool settled = false;
    for (int i = 0; i < 80; ++i) {
        QuadResult inc = integrate_gk(f, lo, 2 * lo, half);
        out.evaluations += inc.evaluations;
        if (inc.divergent && !std::isfinite(inc.value)) {
            out.divergent = true;
            break;
        }
        total += inc.value;
        err += inc.error;
        lo *= 2;
        if (std::fabs(total) > opt.divergence_cap) {
            out.divergent = true;
            break;
        }
        small = std::fabs(inc.value) <= opt.abs_tol ? small + 1 : 0;
        if (small >= 2) {
            out.converged = head.converged;
            settled = true;
            break;
        }
    }
    // Increments that never die out (e.g. a logarithmic tail) also count as divergence.
    if (!settled) out.divergent = true;
    out.value = out.divergent ? std::numeric_limits<double>::quiet_NaN() : total;
    out.error = out.divergent ? std::numeric_limits<double>::infinity() : err;
    return out;
}

}  // namespace rheat
