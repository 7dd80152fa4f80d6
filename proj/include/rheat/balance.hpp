#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

namespace rheat {

using Rational = boost::rational<long long>;

// An exponent that is affine in q: q_coef * q + constant.
struct ExponentForm {
    Rational q_coef{0};
    Rational constant{0};

    Rational at(Rational q) const { return q_coef * q + constant; }
    bool operator==(const ExponentForm&) const = default;
};

// One surviving balance of the power ansatz
//   G = g_1 v + g_a v^a [+ g_b v^b],  H = h_1 v + h_a v^a [+ h_b v^b].
struct BalanceCase {
    int term_count = 2;
    std::optional<Rational> q;  // empty when q stays free
    ExponentForm a;
    std::optional<ExponentForm> b;
    std::string label;                   // powers that coincide, e.g. "2a-1=q+1"
    std::vector<std::string> vanishing;  // coefficients forced to zero
};

// Exhaustive exponent balancing of the resolving system for the two- and
// three-term ansatz. Every set partition of the generated powers is solved
// exactly; coefficient equations are propagated until each branch is open,
// contradictory, or reduces to an ansatz with fewer terms. Open cases that are
// specializations of a family, or mirror images under a <-> b, are merged.
std::vector<BalanceCase> enumerate_balances(int term_count);

enum class BalanceStatus {
    NONTRIVIAL,         // an open branch keeps every ansatz term
    FEWER_TERMS,        // every open branch drops a whole non-unit term
    INCONSISTENT,       // every branch contradicts k != 0
    INVALID_EXPONENTS,  // violates a != 1, b != 1, a != b or q != 0
};

std::string to_string(BalanceStatus s);

// Runs the same propagation at fixed exponents.
BalanceStatus classify_balance(Rational q, Rational a, std::optional<Rational> b = std::nullopt);

// Equality of case sets up to a <-> b.
bool same_case(const BalanceCase& x, const BalanceCase& y);

// Reference case lists for the two- and three-term ansatz.
std::vector<BalanceCase> reference_balance_cases(int term_count);

// Both lists contain the same cases (same_case), ignoring order.
bool same_case_set(const std::vector<BalanceCase>& x, const std::vector<BalanceCase>& y);

std::string rational_str(Rational r);
nlohmann::json to_json(const BalanceCase& c);

}  // namespace rheat
