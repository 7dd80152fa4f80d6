#include "poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rheat::detail {

std::string rat_str(Rat r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        std::string mono;
        for (int i = 0; i < kMaxVars; ++i)
            if (m[i]) {
                if (!mono.empty()) mono += "*";
                mono += i < (int)names.size() ? names[i] : "x" + std::to_string(i);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
        Rat a = c;
        bool neg = a < Rat(0);
        if (neg) a = -a;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (mono.empty()) s += rat_str(a);
        else if (a == Rat(1)) s += mono;
        else s += rat_str(a) + "*" + mono;
    }
    return s;
}

namespace {

std::vector<long long> divisors(long long v) {
    v = std::llabs(v);
    std::vector<long long> d;
    for (long long i = 1; i * i <= v; ++i)
        if (v % i == 0) {
            d.push_back(i);
            if (i != v / i) d.push_back(v / i);
        }
    return d;
}

Rat horner(const std::vector<Rat>& c, Rat x) {
    Rat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace

std::vector<Rat> rational_roots(std::vector<Rat> c) {
    while (!c.empty() && c.back().numerator() == 0) c.pop_back();
    std::vector<Rat> roots;
    if (c.size() <= 1) return roots;
    std::size_t low = 0;
    while (c[low].numerator() == 0) ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        c.erase(c.begin(), c.begin() + low);
        if (c.size() <= 1) return roots;
    }
    long long lcm = 1;
    for (auto& a : c) lcm = std::lcm(lcm, a.denominator());
    long long a0 = (c.front() * lcm).numerator(), ad = (c.back() * lcm).numerator();
    for (long long p : divisors(a0))
        for (long long q : divisors(ad))
            for (int s : {1, -1}) {
                Rat x(s * p, q);
                if (horner(c, x).numerator() == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace rheat::detail
