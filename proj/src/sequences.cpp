#include "qfib/sequences.hpp"

#include "qfib/exponent.hpp"

namespace qfib {

const char* to_string(ShiftConvention c) {
    return c == ShiftConvention::flat ? "flat" : "staircase";
}

MPoly Sequences::classical_base(long n) {
    if (auto it = classical_.find(n); it != classical_.end()) return it->second;
    MPoly v;
    if (n == 0) {
        v = MPoly::zero();
    } else if (n == 1) {
        v = MPoly::one();
    } else if (n >= 2) {
        v = MPoly::x() * classical_base(n - 1) + MPoly::s() * classical_base(n - 2);
    } else {
        // F_n = (F_{n+2} - x F_{n+1}) / s, exact with a Laurent monomial
        v = (classical_base(n + 2) - MPoly::x() * classical_base(n + 1)) * MPoly::s(-1);
    }
    classical_.emplace(n, v);
    return v;
}

MPoly Sequences::classical_fib(long n) {
    std::lock_guard lock(mu_);
    return classical_base(n);
}

MPoly Sequences::qfib_base(long n) {
    if (auto it = qfib_.find(n); it != qfib_.end()) return it->second;
    MPoly v;
    if (n == 0) {
        v = MPoly::zero();
    } else if (n == 1) {
        v = MPoly::one();
    } else if (n >= 2) {
        v = MPoly::x() * qfib_base(n - 1) +
            MPoly::monomial(1, {0, 1, static_cast<std::int32_t>(n - 2)}) * qfib_base(n - 2);
    } else {
        // f(n) = (f(n+2) - x f(n+1)) / (q^n s)
        v = (qfib_base(n + 2) - MPoly::x() * qfib_base(n + 1)) *
            MPoly::monomial(1, {0, -1, static_cast<std::int32_t>(-n)});
    }
    qfib_.emplace(n, v);
    return v;
}

MPoly Sequences::qfib(long n, long shift) {
    std::lock_guard lock(mu_);
    if (shift == 0) return qfib_base(n);
    const auto key = std::make_pair(n, shift);
    if (auto it = qfib_shifted_.find(key); it != qfib_shifted_.end()) return it->second;
    MPoly v = subst_s_scale(qfib_base(n), shift);
    qfib_shifted_.emplace(key, v);
    return v;
}

MPoly Sequences::qfib_explicit(long n) {
    MPoly total;
    for (long k = 0; 2 * k <= n - 1; ++k) {
        MPoly term = qbinomial(n - 1 - k, k);
        term = term * MPoly::monomial(1, {static_cast<std::int32_t>(n - 1 - 2 * k),
                                          static_cast<std::int32_t>(k),
                                          static_cast<std::int32_t>(k * k)});
        total += term;
    }
    return total;
}

MPoly Sequences::qfib_negative_closed(long n) {
    const SignedMonomial pref{(n - 1) % 2 == 0 ? 1 : -1,
                              {0, static_cast<std::int32_t>(-n),
                               static_cast<std::int32_t>(binom_long(n + 1, 2))}};
    return pref.to_poly() * subst_s_scale(qfib(n, 0), -n);
}

MPoly Sequences::qbinomial(long n, long k) {
    if (k < 0 || k > n) return MPoly::zero();
    if (k == 0 || k == n) return MPoly::one();
    std::lock_guard lock(mu_);
    // iterative Pascal fill: [n,k] = [n-1,k-1] + q^k [n-1,k]
    for (long row = 1; row <= n; ++row) {
        for (long col = 1; col < row; ++col) {
            const auto key = std::make_pair(row, col);
            if (qbinom_.contains(key)) continue;
            MPoly left = (col - 1 == 0 || col - 1 == row - 1)
                             ? MPoly::one()
                             : qbinom_.at(std::make_pair(row - 1, col - 1));
            MPoly right = (col == 0 || col == row - 1)
                              ? MPoly::one()
                              : qbinom_.at(std::make_pair(row - 1, col));
            qbinom_.emplace(key, left + MPoly::q(static_cast<int>(col)) * right);
        }
    }
    return qbinom_.at(std::make_pair(n, k));
}

MPoly Sequences::qbinomial_product_form(long n, long k) {
    if (k < 0 || k > n) return MPoly::zero();
    MPoly num = MPoly::one();
    MPoly den = MPoly::one();
    for (long i = 1; i <= k; ++i) {
        num = num * (MPoly::one() - MPoly::q(static_cast<int>(n - i + 1)));
        den = den * (MPoly::one() - MPoly::q(static_cast<int>(i)));
    }
    return exact_div(num, den);
}

MPoly Sequences::fibonomial(long n, long k) {
    if (k < 0 || k > n) return MPoly::zero();
    MPoly num = MPoly::one();
    MPoly den = MPoly::one();
    for (long i = 0; i < k; ++i) num = num * classical_fib(n - i);
    for (long i = 1; i <= k; ++i) den = den * classical_fib(i);
    return exact_div(num, den);
}

PolyFraction Sequences::qfibonomial(long k, long j, long ell, ShiftConvention mode) {
    if (j < 0 || j > k) return {MPoly::zero(), MPoly::one()};
    MPoly num = MPoly::one();
    for (long i = 1; i <= k; ++i) num = num * qfib(i * ell, 0);
    MPoly den = MPoly::one();
    for (long i = 1; i <= j; ++i) den = den * qfib(i * ell, (j - i) * ell);
    for (long i = 1; i <= k - j; ++i) {
        const long shift = mode == ShiftConvention::flat ? j * ell : i * ell;
        den = den * qfib(i * ell, shift);
    }
    try {
        return {exact_div(num, den), MPoly::one()};
    } catch (const NonDivisibleError&) {
        return {std::move(num), std::move(den)};
    }
}

MPoly Sequences::qfibonomial_poly(long k, long j, long ell, ShiftConvention mode) {
    PolyFraction f = qfibonomial(k, j, ell, mode);
    if (!f.exact()) {
        throw NonDivisibleError("qfibonomial(" + std::to_string(k) + ", " + std::to_string(j) +
                                ", " + std::to_string(ell) +
                                ") is not a polynomial; use the fraction form");
    }
    return f.num;
}

MPoly Sequences::fac(long k, long shift, long m) {
    MPoly r = MPoly::one();
    for (long i = 1; i <= k; ++i) r = r * qfib(i * m, shift);
    return r;
}

SignedMonomial Sequences::v_prefactor(long k) {
    return {k % 2 == 0 ? 1 : -1,
            {0, static_cast<std::int32_t>(k - 1), static_cast<std::int32_t>(binom_long(k, 2))}};
}

} // namespace qfib
