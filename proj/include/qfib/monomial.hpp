#pragma once

#include <cstdint>

namespace qfib {

/// Exponent triple of one monomial x^ex * s^es * q^eq.
/// x is an ordinary polynomial variable (ex >= 0 in every stored value);
/// s and q are Laurent variables, their exponents range over all integers.
struct Monomial {
    std::int32_t ex = 0;
    std::int32_t es = 0;
    std::int32_t eq = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::int64_t grade() const {
        return std::int64_t(ex) + es + eq;
    }

    Monomial times(const Monomial& o) const {
        return {ex + o.ex, es + o.es, eq + o.eq};
    }
    /// Componentwise difference. Caller checks that the result is a valid
    /// quotient (ex >= 0 where required).
    Monomial over(const Monomial& o) const {
        return {ex - o.ex, es - o.es, eq - o.eq};
    }
    bool is_unit() const { return ex == 0 && es == 0 && eq == 0; }
};

/// Graded-lex total order with x > s > q, grading by ex+es+eq.
/// This is the canonical order: term storage and division both use it.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    if (a.ex != b.ex) return a.ex < b.ex;
    if (a.es != b.es) return a.es < b.es;
    return a.eq < b.eq;
}

inline bool operator<(const Monomial& a, const Monomial& b) {
    return graded_lex_less(a, b);
}

/// Descending graded-lex, so that map iteration starts at the leading term.
struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_less(b, a);
    }
};

/// Rendering order: x-degree descending, then s- and q-exponents ascending.
/// This is the order sequence tables are conventionally printed in
/// (x^4 before q*s*x^2 before q^2*s*x^2, constant-in-x terms last).
struct MonomialDisplayOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.ex != b.ex) return a.ex > b.ex;
        if (a.es != b.es) return a.es < b.es;
        return a.eq < b.eq;
    }
};

} // namespace qfib
