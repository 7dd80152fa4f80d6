#include "rheat/balance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "poly.hpp"

namespace rheat {

using detail::Monomial;
using detail::Poly;
using detail::Rat;

namespace {

// Variable layout of the coefficient polynomials.
enum : int { VX = 0, VN = 1, VK = 2, VA = 3, VB = 4, VQ = 5 };
constexpr int kG = 6, kH = 9, kDG = 12, kDH = 15;  // + term index (0: v, 1: v^a, 2: v^b)
constexpr int kNumVars = 18;

const std::vector<std::string> kVarNames = {"x",  "n",  "k",  "a",   "b",   "q",   "g1",  "ga",  "gb",
                                            "h1", "ha", "hb", "g1'", "ga'", "gb'", "h1'", "ha'", "hb'"};

bool is_coefficient_var(int i) { return i >= kG && i < kDG; }

Poly cst(Rat c) { return Poly(c); }
Poly var(int i) { return Poly::var(i); }

// Substitution of solved exponent variables by affine forms in the free ones.
using ExpSolution = std::map<int, Poly>;

Poly substitute(const Poly& p, const ExpSolution& s) {
    Poly r = p;
    for (auto& [v, e] : s) r = r.subs(v, e);
    return r;
}

struct Problem {
    int term_count;
    std::vector<std::string> names;   // formal powers
    std::map<std::string, Poly> forms;  // power as affine form in a, b, q
    std::vector<Poly> constraints;      // must not vanish identically
    std::vector<int> exp_vars;          // a, (b), q
    std::vector<Poly> term_exps;        // exponent of each ansatz term
};

Problem make_problem(int term_count) {
    Problem P;
    P.term_count = term_count;
    Poly one = cst(1), A = var(VA), B = var(VB), Q = var(VQ);
    if (term_count == 3) {
        P.names = {"1", "a", "b", "2a-1", "2b-1", "a+b-1", "q+1"};
        P.forms = {{"1", one},
                   {"a", A},
                   {"b", B},
                   {"2a-1", A * 2 - one},
                   {"2b-1", B * 2 - one},
                   {"a+b-1", A + B - one},
                   {"q+1", Q + one}};
        P.constraints = {A - one, B - one, A - B, Q};
        P.exp_vars = {VA, VB, VQ};
        P.term_exps = {one, A, B};
    } else if (term_count == 2) {
        P.names = {"1", "a", "2a-1", "q+1"};
        P.forms = {{"1", one}, {"a", A}, {"2a-1", A * 2 - one}, {"q+1", Q + one}};
        P.constraints = {A - one, Q};
        P.exp_vars = {VA, VQ};
        P.term_exps = {one, A};
    } else {
        throw std::invalid_argument("term_count must be 2 or 3");
    }
    return P;
}

// Name of the formal power equal to e_i + e_j - 1.
std::string product_power(const Problem& P, int i, int j) {
    Poly e = P.term_exps[i] + P.term_exps[j] - cst(1);
    for (auto& nm : P.names)
        if (P.forms.at(nm) == e) return nm;
    throw std::logic_error("product power not in the formal list");
}

struct Contribution {
    std::string power;
    int eq;  // 1 or 2
    Poly c;
};

// Coefficients of each power of v in both equations, multiplied by q to clear p = -2/q.
std::vector<Contribution> contributions(const Problem& P) {
    std::vector<Contribution> out;
    Poly Q = var(VQ), X = var(VX), N = var(VN), K = var(VK), one = cst(1);
    int T = P.term_count;
    for (int i = 0; i < T; ++i) {
        const Poly& e = P.term_exps[i];
        Poly g = var(kG + i), h = var(kH + i), dg = var(kDG + i), dh = var(kDH + i);
        std::string nm = i == 0 ? "1" : (i == 1 ? "a" : "b");
        // q[(p-2) g - p e g - 2x g' - h']
        out.push_back({nm, 1, (cst(-2) - Q * 2 + e * 2) * g - Q * X * dg * 2 - Q * dh});
        // q[g - (p+n-2) h + p e h + 2x h']
        out.push_back({nm, 2, Q * g - (cst(-2) + Q * N - Q * 2) * h - e * h * 2 + Q * X * dh * 2});
        for (int j = 0; j < T; ++j) {
            std::string pw = product_power(P, i, j);
            Poly hi = var(kH + i), gj = var(kG + j), hj = var(kH + j);
            out.push_back({pw, 1, Q * (P.term_exps[j] - P.term_exps[i]) * hi * gj});
            out.push_back({pw, 2, -(Q * P.term_exps[j] * hi * hj)});
        }
    }
    out.push_back({"q+1", 2, -(Q * K)});
    return out;
}

// Gaussian elimination of affine equalities in the exponent variables.
std::optional<ExpSolution> solve_affine(const std::vector<Poly>& eqs, const std::vector<int>& vars) {
    // rows: coefficient per var plus constant
    std::vector<std::vector<Rat>> rows;
    for (auto& e : eqs) {
        std::vector<Rat> row(vars.size() + 1, Rat(0));
        for (auto& [m, c] : e.terms()) {
            bool konst = true;
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (m[vars[k]]) {
                    row[k] += c;
                    konst = false;
                }
            if (konst) row.back() += c;
        }
        rows.push_back(row);
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < vars.size() && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].numerator() == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rat inv = Rat(1) / rows[r][c];
        for (auto& a : rows[r]) a *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && rows[k][c].numerator() != 0) {
                Rat f = rows[k][c];
                for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= f * rows[r][j];
            }
        pivot_col.push_back((int)c);
        ++r;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k].back().numerator() != 0) return std::nullopt;
    ExpSolution s;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        int c = pivot_col[k];
        Poly e = cst(-rows[k].back());
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((int)j != c && rows[k][j].numerator() != 0) e = e - var(vars[j]) * rows[k][j];
        s[vars[c]] = e;
    }
    return s;
}

using Partition = std::vector<std::vector<std::string>>;

bool valid_partition(const Problem& P, const Partition& part, const ExpSolution& s) {
    for (auto& c : P.constraints)
        if (substitute(c, s).is_zero()) return false;
    std::vector<Poly> reps;
    for (auto& cl : part) {
        Poly r = substitute(P.forms.at(cl[0]), s);
        for (std::size_t i = 1; i < cl.size(); ++i)
            if (!(substitute(P.forms.at(cl[i]), s) == r)) return false;
        reps.push_back(r);
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            if (reps[i] == reps[j]) return false;
    return true;
}

std::vector<int> free_vars(const Problem& P, const ExpSolution& s) {
    std::vector<int> f;
    for (int v : P.exp_vars)
        if (!s.count(v)) f.push_back(v);
    return f;
}

// Common rational roots in `y` of polynomials that involve only y.
std::vector<Rat> common_roots(const std::vector<Poly>& polys, int y) {
    std::vector<Rat> cand;
    bool have = false;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        auto r = detail::rational_roots(p.univariate(y));
        if (!have) {
            cand = r;
            have = true;
        } else {
            std::vector<Rat> keep;
            for (auto& x : cand)
                if (std::find(r.begin(), r.end(), x) != r.end()) keep.push_back(x);
            cand = keep;
        }
        if (cand.empty()) break;
    }
    return have ? cand : std::vector<Rat>{};
}

// Solves small dense rational systems; returns nothing if singular.
std::optional<std::vector<Rat>> solve_dense(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c].numerator() == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(M[p], M[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && M[r][c].numerator() != 0) {
                Rat f = M[r][c] / M[c][c];
                for (std::size_t j = c; j < n; ++j) M[r][j] -= f * M[c][j];
                b[r] -= f * b[c];
            }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
    return x;
}

// Affine factors y = L(others) shared by every coefficient of `c` (grouped by x, n, k),
// reported for the first free variable that occurs in each factor.
std::vector<std::pair<int, Poly>> affine_factors(const Poly& c, const std::vector<int>& free) {
    std::array<bool, detail::kMaxVars> mask{};
    mask[VX] = mask[VN] = mask[VK] = true;
    std::vector<Poly> parts;
    for (auto& [m, p] : c.group_by(mask)) parts.push_back(p);
    std::vector<std::pair<int, Poly>> out;
    static const Rat samples[] = {Rat(7, 3), Rat(-11, 5), Rat(13, 7), Rat(17, 4), Rat(-19, 6)};
    for (std::size_t yi = 0; yi < free.size(); ++yi) {
        int y = free[yi];
        std::vector<int> others;
        for (int v : free)
            if (v != y) others.push_back(v);
        std::size_t need = others.size() + 1;
        std::vector<std::vector<Rat>> pts;
        std::vector<std::vector<Rat>> roots;
        for (std::size_t s = 0; s < need + 1; ++s) {
            std::vector<Rat> pt;
            std::vector<Poly> restricted = parts;
            for (std::size_t o = 0; o < others.size(); ++o) {
                Rat val = samples[(s + 2 * o) % 5] + Rat((long long)(s * o));
                pt.push_back(val);
                for (auto& p : restricted) p = p.subs(others[o], cst(val));
            }
            pts.push_back(pt);
            roots.push_back(common_roots(restricted, y));
        }
        // every combination of one root per sample among the first `need` samples
        std::vector<std::size_t> idx(need, 0);
        bool any = true;
        for (auto& r : roots)
            if (r.empty()) any = false;
        while (any) {
            std::vector<std::vector<Rat>> M;
            std::vector<Rat> rhs;
            for (std::size_t s = 0; s < need; ++s) {
                std::vector<Rat> row = pts[s];
                row.push_back(Rat(1));
                M.push_back(row);
                rhs.push_back(roots[s][idx[s]]);
            }
            if (auto coef = solve_dense(M, rhs)) {
                Poly L = cst((*coef)[others.size()]);
                for (std::size_t o = 0; o < others.size(); ++o) L = L + var(others[o]) * (*coef)[o];
                bool earlier = false;
                for (std::size_t j = 0; j < yi; ++j)
                    if (L.depends_on(free[j])) earlier = true;
                bool divides = true;
                for (auto& p : parts)
                    if (!p.subs(y, L).is_zero()) divides = false;
                bool dup = false;
                for (auto& [v, e] : out)
                    if (v == y && e == L) dup = true;
                if (divides && !earlier && !dup) out.emplace_back(y, L);
            }
            std::size_t k = 0;
            while (k < need && ++idx[k] == roots[k].size()) idx[k++] = 0;
            if (k == need) break;
        }
    }
    return out;
}

struct Branch {
    ExpSolution sol;
    std::set<int> zero;         // coefficient functions forced to vanish
    std::map<int, Poly> assign;  // coefficient functions fixed to constants
};

class Engine {
public:
    Engine(const Problem& P, const Partition& part) : P_(P), part_(part) {
        auto contrib = contributions(P);
        for (auto& cl : part)
            for (int e : {1, 2}) {
                Poly s;
                for (auto& c : contrib)
                    if (c.eq == e && std::find(cl.begin(), cl.end(), c.power) != cl.end()) s = s + c.c;
                if (!s.is_zero()) eqs_.push_back(s);
            }
    }

    std::vector<Branch> propagate(const Branch& b) const {
        std::vector<Poly> eqs;
        for (auto& e0 : eqs_) {
            Poly e = substitute(e0, b.sol);
            for (int z : b.zero) {
                e = e.subs(z, Poly());
                e = e.subs(z + (kDG - kG), Poly());
            }
            for (auto& [u, v] : b.assign) {
                e = e.subs(u, v);
                e = e.subs(u + (kDG - kG), Poly());
            }
            if (!e.is_zero()) eqs.push_back(e);
        }
        std::array<bool, detail::kMaxVars> umask{};
        for (int i = kG; i < kNumVars; ++i) umask[i] = true;
        for (auto& e : eqs) {
            bool has = false;
            for (int i = kG; i < kNumVars; ++i)
                if (e.depends_on(i)) has = true;
            if (!has) return {};
        }
        // a single coefficient function entering linearly with a constant value
        for (auto& e : eqs) {
            std::vector<int> present;
            for (int i = kG; i < kNumVars; ++i)
                if (e.depends_on(i)) present.push_back(i);
            if (present.size() != 1 || !is_coefficient_var(present[0]) || e.degree(present[0]) != 1) continue;
            int u = present[0];
            std::array<bool, detail::kMaxVars> m{};
            m[u] = true;
            auto g = e.group_by(m);
            Monomial one{};
            one[u] = 1;
            Poly coef = g[one], rest = g[Monomial{}];
            auto val = (-rest).divide_by_term(coef);
            if (val && !val->is_zero() && !val->depends_on(VX)) {
                Branch nb = b;
                nb.assign[u] = *val;
                return propagate(nb);
            }
        }
        for (auto& e : eqs) {
            auto g = e.group_by(umask);
            if (g.size() != 1) continue;
            const Monomial& mono = g.begin()->first;
            const Poly& coef = g.begin()->second;
            std::vector<Branch> res;
            bool have_factor = false;
            for (int i = kG; i < kDG; ++i)
                if (mono[i]) {
                    have_factor = true;
                    Branch nb = b;
                    nb.zero.insert(i);
                    auto sub = propagate(nb);
                    res.insert(res.end(), sub.begin(), sub.end());
                }
            for (auto& [y, L] : affine_factors(coef, free_vars(P_, b.sol))) {
                ExpSolution ns;
                for (auto& [v, ex] : b.sol) ns[v] = ex.subs(y, L);
                ns[y] = L;
                if (!valid_partition(P_, part_, ns)) continue;
                Branch nb = b;
                nb.sol = ns;
                auto sub = propagate(nb);
                res.insert(res.end(), sub.begin(), sub.end());
            }
            if (!have_factor && res.empty()) continue;
            return res;
        }
        return {b};
    }

private:
    const Problem& P_;
    const Partition& part_;
    std::vector<Poly> eqs_;
};

void for_each_partition(const std::vector<std::string>& items, const std::function<void(const Partition&)>& f) {
    std::size_t n = items.size();
    std::vector<int> rgs(n, 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        Partition part(blocks);
        for (std::size_t i = 0; i < n; ++i) part[rgs[i]].push_back(items[i]);
        f(part);
        // next restricted growth string
        int i = (int)n - 1;
        while (i > 0) {
            int mx = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= mx) {
                ++rgs[i];
                for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
}

bool trivial(const Problem& P, const Branch& b) {
    for (int t = 1; t < P.term_count; ++t)
        if (b.zero.count(kG + t) && b.zero.count(kH + t)) return true;
    return false;
}

struct OpenCase {
    Partition part;
    Branch branch;
};

std::string partition_label(const Partition& part) {
    std::string s;
    for (auto& cl : part) {
        if (cl.size() < 2) continue;
        if (!s.empty()) s += ", ";
        for (std::size_t i = 0; i < cl.size(); ++i) s += (i ? "=" : "") + cl[i];
    }
    return s.empty() ? "no coincidences" : s;
}

// Affine form in q of an exponent variable under a solution whose only free variable is q.
std::optional<ExponentForm> as_form(const ExpSolution& s, int v) {
    Poly e = s.count(v) ? s.at(v) : var(v);
    ExponentForm f;
    for (auto& [m, c] : e.terms()) {
        int deg = 0;
        bool other = false;
        for (int i = 0; i < detail::kMaxVars; ++i)
            if (m[i]) {
                if (i == VQ && m[i] == 1) deg = 1;
                else other = true;
            }
        if (other) return std::nullopt;
        if (deg) f.q_coef += c;
        else f.constant += c;
    }
    return f;
}

// Re-expresses a solution so that q is the free variable when possible.
ExpSolution with_q_free(const Problem& P, const ExpSolution& s) {
    auto fv = free_vars(P, s);
    if (fv.size() != 1 || fv[0] == VQ || !s.count(VQ)) return s;
    int y = fv[0];
    // q = c1 y + c0  =>  y = (q - c0)/c1
    auto g = s.at(VQ);
    Rat c1 = 0, c0 = 0;
    for (auto& [m, c] : g.terms()) {
        if (m[y]) c1 += c;
        else c0 += c;
    }
    if (c1.numerator() == 0) return s;
    Poly ye = (var(VQ) - cst(c0)) * (Rat(1) / c1);
    ExpSolution out;
    for (auto& [v, e] : s)
        if (v != VQ) out[v] = e.subs(y, ye);
    out[y] = ye;
    return out;
}

bool specializes(const ExpSolution& child, const ExpSolution& parent) {
    for (auto& [v, e] : parent) {
        Poly lhs = child.count(v) ? child.at(v) : var(v);
        if (!(substitute(e, child) == lhs)) return false;
    }
    return true;
}

std::vector<std::string> vanishing_names(const Branch& b) {
    std::vector<std::string> v;
    for (int z : b.zero) v.push_back(kVarNames[z]);
    return v;
}

std::vector<OpenCase> run(const Problem& P, bool keep_trivial) {
    std::vector<OpenCase> found;
    for_each_partition(P.names, [&](const Partition& part) {
        std::vector<Poly> eqs;
        for (auto& cl : part)
            for (std::size_t i = 1; i < cl.size(); ++i) eqs.push_back(P.forms.at(cl[0]) - P.forms.at(cl[i]));
        auto s = solve_affine(eqs, P.exp_vars);
        if (!s || !valid_partition(P, part, *s)) return;
        Engine eng(P, part);
        for (auto& b : eng.propagate(Branch{*s, {}, {}}))
            if (keep_trivial || !trivial(P, b)) found.push_back({part, b});
    });
    return found;
}

ExpSolution mirror(const ExpSolution& s) {
    ExpSolution m;
    auto sw = [](const Poly& p) {
        const int tmp = 19;  // unused slot
        return p.subs(VA, var(tmp)).subs(VB, var(VA)).subs(tmp, var(VB));
    };
    for (auto& [v, e] : s) m[v == VA ? VB : (v == VB ? VA : v)] = sw(e);
    return m;
}

bool same_solution(const ExpSolution& x, const ExpSolution& y) { return specializes(x, y) && specializes(y, x); }

// Preference between mirror images: q+1 balanced against a-side powers, then a < b.
int mirror_rank(const Partition& part, const ExpSolution& s) {
    for (auto& cl : part)
        if (std::find(cl.begin(), cl.end(), "q+1") != cl.end()) {
            bool a_side = false, b_side = false;
            for (auto& m : cl) {
                if (m == "a" || m == "2a-1") a_side = true;
                if (m == "b" || m == "2b-1") b_side = true;
            }
            if (a_side && !b_side) return 0;
            if (b_side && !a_side) return 2;
        }
    auto fa = as_form(s, VA), fb = as_form(s, VB);
    if (fa && fb && fa->q_coef.numerator() == 0 && fb->q_coef.numerator() == 0) return fa->constant < fb->constant ? 0 : 1;
    return 1;
}

}  // namespace

std::string rational_str(Rational r) { return detail::rat_str(r); }

std::string to_string(BalanceStatus s) {
    switch (s) {
        case BalanceStatus::NONTRIVIAL: return "NONTRIVIAL";
        case BalanceStatus::FEWER_TERMS: return "FEWER_TERMS";
        case BalanceStatus::INCONSISTENT: return "INCONSISTENT";
        case BalanceStatus::INVALID_EXPONENTS: return "INVALID_EXPONENTS";
    }
    return "?";
}

std::vector<BalanceCase> enumerate_balances(int term_count) {
    Problem P = make_problem(term_count);
    auto found = run(P, false);

    // drop specializations of a family found in the same partition, and duplicates
    std::vector<OpenCase> kept;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < found.size() && !drop; ++j) {
            if (i == j || found[i].part != found[j].part) continue;
            bool sub = specializes(found[i].branch.sol, found[j].branch.sol);
            bool eq = sub && specializes(found[j].branch.sol, found[i].branch.sol);
            if (sub && !eq) drop = true;
            if (eq && j < i) drop = true;
        }
        if (!drop) kept.push_back(found[i]);
    }

    // merge mirror images under a <-> b
    if (term_count == 3) {
        std::vector<OpenCase> merged;
        std::vector<bool> used(kept.size(), false);
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (used[i]) continue;
            std::size_t best = i;
            for (std::size_t j = i + 1; j < kept.size(); ++j)
                if (!used[j] && same_solution(mirror(kept[i].branch.sol), kept[j].branch.sol)) {
                    used[j] = true;
                    if (mirror_rank(kept[j].part, kept[j].branch.sol) <
                        mirror_rank(kept[best].part, kept[best].branch.sol))
                        best = j;
                }
            used[i] = true;
            merged.push_back(kept[best]);
        }
        kept = merged;
    }

    std::vector<BalanceCase> out;
    for (auto& oc : kept) {
        ExpSolution s = with_q_free(P, oc.branch.sol);
        BalanceCase c;
        c.term_count = term_count;
        auto fq = as_form(s, VQ), fa = as_form(s, VA);
        if (!fq || !fa) throw std::logic_error("balance case is not parametrized by q");
        if (fq->q_coef.numerator() == 0) c.q = fq->constant;
        c.a = *fa;
        if (term_count == 3) {
            auto fb = as_form(s, VB);
            if (!fb) throw std::logic_error("balance case is not parametrized by q");
            c.b = *fb;
        }
        if (c.q) {
            c.a = {Rational(0), c.a.at(*c.q)};
            if (c.b) c.b = ExponentForm{Rational(0), c.b->at(*c.q)};
        }
        c.label = partition_label(oc.part);
        c.vanishing = vanishing_names(oc.branch);
        out.push_back(c);
    }
    return out;
}

BalanceStatus classify_balance(Rational q, Rational a, std::optional<Rational> b) {
    Problem P = make_problem(b ? 3 : 2);
    ExpSolution s{{VA, cst(a)}, {VQ, cst(q)}};
    if (b) s[VB] = cst(*b);
    // natural partition of the formal powers at these values
    std::map<Rat, std::vector<std::string>> groups;
    for (auto& nm : P.names) groups[substitute(P.forms.at(nm), s).eval_const()].push_back(nm);
    Partition part;
    for (auto& [v, cl] : groups) part.push_back(cl);
    if (!valid_partition(P, part, s)) return BalanceStatus::INVALID_EXPONENTS;
    Engine eng(P, part);
    auto br = eng.propagate(Branch{s, {}, {}});
    if (br.empty()) return BalanceStatus::INCONSISTENT;
    for (auto& x : br)
        if (!trivial(P, x)) return BalanceStatus::NONTRIVIAL;
    return BalanceStatus::FEWER_TERMS;
}

bool same_case(const BalanceCase& x, const BalanceCase& y) {
    if (x.term_count != y.term_count || x.q != y.q) return false;
    if (x.a == y.a && x.b == y.b) return true;
    return x.b && y.b && x.a == *y.b && *x.b == y.a;
}

std::vector<BalanceCase> reference_balance_cases(int term_count) {
    auto R = [](long long a, long long b = 1) { return Rational(a, b); };
    if (term_count == 2) {
        BalanceCase x, y;
        x.a = {R(1), R(1)};
        x.label = "a=q+1";
        y.a = {R(1, 2), R(1)};
        y.label = "2a-1=q+1";
        return {x, y};
    }
    if (term_count != 3) throw std::invalid_argument("term_count must be 2 or 3");
    auto mk = [&](Rational q, Rational a, Rational b) {
        BalanceCase c;
        c.term_count = 3;
        c.q = q;
        c.a = {R(0), a};
        c.b = ExponentForm{R(0), b};
        return c;
    };
    return {mk(R(2), R(2), R(0)), mk(R(-3, 2), R(0), R(-1, 2)), mk(R(-2, 3), R(-1, 3), R(1, 3))};
}

bool same_case_set(const std::vector<BalanceCase>& x, const std::vector<BalanceCase>& y) {
    auto covered = [](const std::vector<BalanceCase>& from, const std::vector<BalanceCase>& in) {
        for (auto& c : from)
            if (std::none_of(in.begin(), in.end(), [&](const BalanceCase& d) { return same_case(c, d); }))
                return false;
        return true;
    };
    return covered(x, y) && covered(y, x);
}

nlohmann::json to_json(const BalanceCase& c) {
    auto form = [](const ExponentForm& f) {
        nlohmann::json j;
        j["q_coef"] = rational_str(f.q_coef);
        j["constant"] = rational_str(f.constant);
        return j;
    };
    nlohmann::json j;
    j["term_count"] = c.term_count;
    j["q"] = c.q ? nlohmann::json(rational_str(*c.q)) : nlohmann::json("free");
    j["a"] = form(c.a);
    if (c.b) j["b"] = form(*c.b);
    j["label"] = c.label;
    j["vanishing"] = c.vanishing;
    return j;
}

}  // namespace rheat
