#pragma once

#include <gmpxx.h>

#include <string>

#include "qfib/errors.hpp"

namespace qfib {

/// Exact binomial coefficient C(n, k) for any integer n (polynomial
/// extension: C(n, k) = n(n-1)...(n-k+1)/k!), k >= 0.
inline mpz_class binom(long n, int k) {
    if (k < 0) return 0;
    mpz_class r = 1;
    for (int i = 0; i < k; ++i) {
        r *= mpz_class(n - i);
        r /= (i + 1); // running product of consecutive integers: exact
    }
    return r;
}

inline long binom_long(long n, int k) {
    mpz_class b = binom(n, k);
    return b.get_si();
}

/// Exact rational accumulator for closed-form exponents that are written
/// with fractional-looking pieces (m(km-2)/4 and the like). Materializing
/// demands an integer value; a leftover denominator is an error, never a
/// rounding.
class ExponentExpr {
public:
    ExponentExpr() : value_(0) {}
    explicit ExponentExpr(long v) : value_(v) {}
    explicit ExponentExpr(const mpz_class& v) : value_(v) {}
    explicit ExponentExpr(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    ExponentExpr& add(const mpz_class& numerator, long denominator = 1) {
        mpq_class t(numerator);
        t /= denominator;
        value_ += t;
        return *this;
    }
    ExponentExpr& add(long numerator, long denominator = 1) {
        return add(mpz_class(numerator), denominator);
    }
    ExponentExpr& operator+=(const ExponentExpr& o) {
        value_ += o.value_;
        return *this;
    }
    ExponentExpr& operator-=(const ExponentExpr& o) {
        value_ -= o.value_;
        return *this;
    }

    const mpq_class& value() const { return value_; }
    bool is_integral() const { return value_.get_den() == 1; }

    /// Integer value, or NonIntegralExponentError.
    long materialize(const char* context = "exponent") const {
        if (!is_integral()) {
            throw NonIntegralExponentError(std::string(context) + " is not integral: " +
                                           value_.get_str());
        }
        return mpz_class(value_.get_num()).get_si();
    }

private:
    mpq_class value_;
};

} // namespace qfib
