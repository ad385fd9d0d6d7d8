#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "qfib/errors.hpp"
#include "qfib/monomial.hpp"

namespace qfib {

enum class QSubst {
    one,     ///< q -> 1
    inverse, ///< q -> 1/q
};

/// Sparse multivariate Laurent polynomial over Z in x, s, q with x-exponents
/// non-negative. Canonical form throughout: no stored zero coefficient, so
/// equality is structural map equality and the zero polynomial is the empty
/// map. Values are immutable in spirit: every operation returns a fresh
/// polynomial and never mutates shared state, so instances can be shared
/// read-only across threads.
class MPoly {
public:
    using TermMap = std::map<Monomial, mpz_class, MonomialDesc>;

    MPoly() = default;
    explicit MPoly(long c) { if (c != 0) terms_[Monomial{}] = c; }
    explicit MPoly(const mpz_class& c) { if (c != 0) terms_[Monomial{}] = c; }

    static MPoly zero() { return MPoly(); }
    static MPoly one() { return MPoly(1); }
    static MPoly monomial(mpz_class c, Monomial m) {
        MPoly p;
        if (c != 0) p.terms_.emplace(m, std::move(c));
        return p;
    }
    static MPoly x(int e = 1) { return monomial(1, {e, 0, 0}); }
    static MPoly s(int e = 1) { return monomial(1, {0, e, 0}); }
    static MPoly q(int e = 1) { return monomial(1, {0, 0, e}); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
               terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading term under the canonical (graded-lex descending) order.
    const std::pair<const Monomial, mpz_class>& leading() const {
        return *terms_.begin();
    }

    friend bool operator==(const MPoly&, const MPoly&) = default;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator-() const;
    /// Adds c * m into this polynomial.
    void add_term(const Monomial& m, const mpz_class& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

private:
    TermMap terms_;
};

/// Reference product: plain accumulation into an ordered map. Kept as the
/// serial oracle for the blocked parallel kernel.
MPoly mul_serial(const MPoly& a, const MPoly& b);

/// Blocked product: one operand's terms are split across workers, partial
/// maps are merged in a fixed order. Bit-identical to mul_serial.
MPoly mul_parallel(const MPoly& a, const MPoly& b, int workers);

/// Dispatching product used by operator*: serial below a size threshold or
/// when max_workers() == 1.
MPoly mul(const MPoly& a, const MPoly& b);

MPoly pow(const MPoly& a, unsigned k);

/// Exact quotient q with q*b == a, coefficients staying in Z. Monomial
/// divisors always succeed through Laurent exponents in s and q; anything
/// that would need fractions or negative x-powers throws NonDivisibleError.
MPoly exact_div(const MPoly& a, const MPoly& b);

/// s -> q^k * s: every term's q-exponent grows by k * (its s-exponent).
MPoly subst_s_scale(const MPoly& a, long k);

MPoly subst_q_value(const MPoly& a, QSubst mode);

/// Exact evaluation. Throws PoleAtZeroError if a negative exponent meets a
/// zero value.
mpq_class eval_rational(const MPoly& a, const mpq_class& x0, const mpq_class& s0,
                        const mpq_class& q0);

/// Deterministic text form, the interchange format of reports and golden
/// files: terms ordered x-degree descending then s,q ascending, factors
/// alphabetical (q, s, x), unit coefficients and zero exponents omitted,
/// zero polynomial rendered "0".
std::string to_canonical_text(const MPoly& a);

/// Inverse of to_canonical_text (also accepts any sum of c*q^a*s^b*x^c
/// terms). Throws std::invalid_argument on malformed input.
MPoly parse_canonical_text(const std::string& text);

/// A +-1 sign with one monomial; the shape of closed-form prefactors.
struct SignedMonomial {
    int sign = 1; // +1 or -1
    Monomial mono;

    MPoly to_poly() const { return MPoly::monomial(sign, mono); }
};

} // namespace qfib
