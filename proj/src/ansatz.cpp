#include "rheat/ansatz.hpp"

#include <cmath>
#include <memory>

#include "rheat/errors.hpp"
#include "rheat/foliation.hpp"

namespace rheat {

Exponent Exponent::rational(Rational r) {
    return {boost::rational_cast<double>(r), r};
}

Exponent Exponent::real(double v) { return {v, std::nullopt}; }

Exponent Exponent::from_double(double v) {
    if (!std::isfinite(v)) throw ConfigError("non-finite exponent");
    for (long long d = 1; d <= 1000; ++d) {
        double num = std::round(v * d);
        if (std::fabs(num) < 1e15 && std::fabs(num / d - v) <= 1e-14 * (1 + std::fabs(v)))
            return rational(Rational((long long)num, d));
    }
    return real(v);
}

bool Exponent::same_as(const Exponent& o) const {
    if (exact && o.exact) return *exact == *o.exact;
    return std::fabs(value - o.value) <= 1e-12;
}

Exponent Exponent::operator+(const Exponent& o) const {
    if (exact && o.exact) return rational(*exact + *o.exact);
    return real(value + o.value);
}

Exponent Exponent::operator-(const Exponent& o) const {
    if (exact && o.exact) return rational(*exact - *o.exact);
    return real(value - o.value);
}

nlohmann::json to_json(const Exponent& e) {
    nlohmann::json j;
    j["value"] = e.value;
    if (e.exact) j["exact"] = rational_str(*e.exact);
    return j;
}

PowerAnsatz::PowerAnsatz(std::vector<AnsatzTerm> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!terms_[i].g || !terms_[i].h) throw ConfigError("ansatz term without coefficient");
        for (std::size_t j = 0; j < i; ++j)
            if (terms_[i].exponent.same_as(terms_[j].exponent)) throw ConfigError("repeated ansatz exponent");
    }
}

PowerAnsatz::Point PowerAnsatz::eval(double x, double v) const {
    Point pt{0, 0, 0, 0, 0, 0};
    for (auto& t : terms_) {
        double a = t.exponent.value;
        double va = real_pow(v, a);
        double dva = a == 0 ? 0.0 : a * real_pow(v, a - 1);
        auto [g, gx] = t.g(x);
        auto [h, hx] = t.h(x);
        pt.G += g * va;
        pt.Gx += gx * va;
        pt.Gv += g * dva;
        pt.H += h * va;
        pt.Hx += hx * va;
        pt.Hv += h * dva;
    }
    return pt;
}

CoefficientFn constant_coefficient(double c) {
    return [c](double) { return std::pair<double, double>{c, 0.0}; };
}

CoefficientFn polynomial_coefficient(std::vector<double> coeffs) {
    return [coeffs](double x) {
        double val = 0, der = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            der = der * x + val;
            val = val * x + coeffs[i];
        }
        return std::pair<double, double>{val, der};
    };
}

namespace {

using Piece = std::function<double(double)>;

struct Collector {
    struct Slot {
        Exponent e;
        std::vector<Piece> r1, r2;
    };
    std::vector<Slot> slots;

    Slot& at(const Exponent& e) {
        for (auto& s : slots)
            if (s.e.same_as(e)) return s;
        slots.push_back({e, {}, {}});
        return slots.back();
    }
};

Piece sum_of(std::vector<Piece> parts) {
    auto shared = std::make_shared<std::vector<Piece>>(std::move(parts));
    return [shared](double x) {
        double s = 0;
        for (auto& f : *shared) s += f(x);
        return s;
    };
}

}  // namespace

std::vector<PowerCoefficient> expand_ansatz(const Parameters& P, const PowerAnsatz& ansatz) {
    Collector col;
    const double p = P.p, n = P.n, k = P.k;
    const auto& T = ansatz.terms();
    const Exponent one = Exponent::rational(Rational(1));

    for (auto& t : T) {
        double a = t.exponent.value;
        auto g = t.g, h = t.h;
        auto& s = col.at(t.exponent);
        s.r1.push_back([=](double x) {
            auto [gv, gd] = g(x);
            auto [hv, hd] = h(x);
            (void)hv;
            return (p - 2 - p * a) * gv - 2 * x * gd - hd;
        });
        s.r2.push_back([=](double x) {
            auto [gv, gd] = g(x);
            auto [hv, hd] = h(x);
            (void)gd;
            return gv - (p + n - 2) * hv + p * a * hv + 2 * x * hd;
        });
    }
    // H G_v - G H_v and -H H_v: the product of terms i and j lands on a_i + a_j - 1.
    for (auto& ti : T)
        for (auto& tj : T) {
            Exponent e = ti.exponent + tj.exponent - one;
            double ai = ti.exponent.value, aj = tj.exponent.value;
            auto gi = ti.g, hi = ti.h, hj = tj.h;
            auto& s = col.at(e);
            if (ai != aj)
                s.r1.push_back([=](double x) { return gi(x).first * hj(x).first * (ai - aj); });
            s.r2.push_back([=](double x) { return -hi(x).first * hj(x).first * aj; });
        }
    col.at(Exponent::from_double(P.q + 1)).r2.push_back([k](double) { return -k; });

    std::vector<PowerCoefficient> out;
    for (auto& s : col.slots) out.push_back({s.e, sum_of(s.r1), sum_of(s.r2)});
    return out;
}

std::pair<double, double> evaluate_expansion(const std::vector<PowerCoefficient>& ex, double x, double v) {
    double r1 = 0, r2 = 0;
    for (auto& c : ex) {
        double w = real_pow(v, c.exponent.value);
        r1 += c.R1(x) * w;
        r2 += c.R2(x) * w;
    }
    return {r1, r2};
}

}  // namespace rheat
