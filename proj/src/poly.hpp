#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
// Only what the balance enumeration needs: ring operations, substitution,
// grouping by a subset of variables and exact division by one term.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace rheat::detail {

using Rat = boost::rational<long long>;

constexpr int kMaxVars = 20;
using Monomial = std::array<std::uint8_t, kMaxVars>;

class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) {
        if (c.numerator() != 0) terms_[Monomial{}] = c;
    }
    static Poly var(int i) {
        Poly p;
        Monomial m{};
        m[i] = 1;
        p.terms_[m] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) {
                Monomial m{};
                for (int i = 0; i < kMaxVars; ++i) m[i] = m1[i] + m2[i];
                r.add_term(m, c1 * c2);
            }
        return r;
    }
    Poly operator*(Rat c) const { return *this * Poly(c); }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    bool depends_on(int i) const {
        for (auto& [m, c] : terms_)
            if (m[i]) return true;
        return false;
    }
    int degree(int i) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max<int>(d, m[i]);
        return d;
    }

    // Replaces variable i by q.
    Poly subs(int i, const Poly& q) const {
        if (!depends_on(i)) return *this;
        Poly r;
        std::vector<Poly> powers{Poly(Rat(1))};
        for (auto& [m, c] : terms_) {
            while ((int)powers.size() <= m[i]) powers.push_back(powers.back() * q);
            Monomial rest = m;
            rest[i] = 0;
            Poly t;
            t.terms_[rest] = c;
            r = r + t * powers[m[i]];
        }
        return r;
    }

    // Groups terms by the exponents of the variables flagged in mask.
    std::map<Monomial, Poly> group_by(const std::array<bool, kMaxVars>& mask) const {
        std::map<Monomial, Poly> out;
        for (auto& [m, c] : terms_) {
            Monomial key{}, rest = m;
            for (int i = 0; i < kMaxVars; ++i)
                if (mask[i]) {
                    key[i] = m[i];
                    rest[i] = 0;
                }
            out[key].add_term(rest, c);
        }
        return out;
    }

    // Exact quotient by a single-term polynomial, if it divides every term.
    std::optional<Poly> divide_by_term(const Poly& d) const {
        if (d.terms_.size() != 1) return std::nullopt;
        auto& [dm, dc] = *d.terms_.begin();
        Poly r;
        for (auto& [m, c] : terms_) {
            Monomial q{};
            for (int i = 0; i < kMaxVars; ++i) {
                if (m[i] < dm[i]) return std::nullopt;
                q[i] = m[i] - dm[i];
            }
            r.terms_[q] = c / dc;
        }
        return r;
    }

    // Univariate coefficients in variable i, assuming no other variable occurs.
    std::vector<Rat> univariate(int i) const {
        std::vector<Rat> c(degree(i) + 1, Rat(0));
        for (auto& [m, v] : terms_) c[m[i]] += v;
        return c;
    }

    Rat eval_const() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    void add_term(const Monomial& m, Rat c) {
        if (c.numerator() == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.numerator() == 0) terms_.erase(it);
        }
    }
    std::map<Monomial, Rat> terms_;
};

// Rational roots of a univariate polynomial given by ascending coefficients.
std::vector<Rat> rational_roots(std::vector<Rat> coeffs);

std::string rat_str(Rat r);

}  // namespace rheat::detail
