#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qfib/polymatrix.hpp"
#include "qfib/sequences.hpp"

namespace qfib {

enum class IdentityId {
    classical_1_4,
    qbinomial_1_9,
    theorem1,
    corollary1,
    lemma1,
    corollary2,
    theorem2,
    lemma2,
    lemma3,
    d_relations,
    eq_2_26,
    minor_ratio,
    theorem3,
    eq_2_33,
};

const char* to_string(IdentityId id);
IdentityId identity_from_string(const std::string& name);
std::vector<IdentityId> all_identities();

enum class VerifyStatus { zero, residual, error };
const char* to_string(VerifyStatus s);

/// Outcome of one verification instance. status == zero iff the assembled
/// residual polynomial is empty; residual holds its canonical text (or the
/// error message when status == error).
struct IdentityReport {
    IdentityId id{};
    std::vector<std::pair<std::string, long>> params;
    VerifyStatus status = VerifyStatus::zero;
    std::string residual = "0";
    std::int64_t elapsed_ms = 0;

    bool passed() const { return status == VerifyStatus::zero; }
};

// ------------------------------------------------------------------ builders

/// Recurrence coefficient of f(n-j, x, q^j s)^k in the power recurrence:
/// (-1)^{C(j+1,2)} s^{C(j,2)} q^{j(j-1)(2j-1)/6} <k+1 over j>(x,s,q), as a
/// numerator/denominator pair (the quotient is non-polynomial from k = 3 on).
PolyFraction theorem1_coefficient_parts(Sequences& seq, int k, int j,
                                        ShiftConvention mode = ShiftConvention::flat);

/// Same coefficient demanded exact; throws NonDivisibleError otherwise.
MPoly theorem1_coefficient(Sequences& seq, int k, int j);

/// Coefficient of f(n - j ell, x, q^{j ell} s)^k in the step-ell recurrence:
/// (-1)^{j + ell C(j,2)} (q^{((4j+1)ell-3)/6} s)^{ell C(j,2)}
///   <k+1 over j>(x,s,q,ell); q-exponent built in ExponentExpr and checked
/// integral.
PolyFraction theorem3_coefficient_parts(Sequences& seq, int k, int j, int ell,
                                        ShiftConvention mode = ShiftConvention::flat);

MPoly theorem3_coefficient(Sequences& seq, int k, int j, int ell,
                           ShiftConvention mode = ShiftConvention::flat);

/// Closed form of det(f(n + mi - ell j, x, q^{ell j} s)^k)_{i,j=0..k}:
/// prod_j C(k,j) * (-s)^{C(k+1,2)(n-k ell) + C(k+1,3)(ell+m)} * q^{E2}
/// * prod_j fac(k-j, q^{mj+n}, m) * prod_j fac(k-j, q^{ell j}, ell).
MPoly theorem2_rhs(Sequences& seq, long n, int m, int ell, int k);

/// Entry (i, h) = f(n+mi)^h f(n+mi-1, x, qs)^{k-h}, 0 <= i, h <= k.
PolyMatrix lemma2_matrix(Sequences& seq, long n, int m, int k);

/// Entry (i, h) = f(n + m(i + [i>=j]))^h f(n + m(i + [i>=j]) - 1, x, qs)^{k-h}
/// with the Iverson row skip.
PolyMatrix d_matrix(Sequences& seq, long n, int m, int k, int j);

// ----------------------------------------------------------------- verifiers

IdentityReport verify_classical_1_4(Sequences& seq, long n, int k);
IdentityReport verify_qbinomial_theorem(Sequences& seq, long n);
IdentityReport verify_theorem1(Sequences& seq, long n, int k,
                               ShiftConvention mode = ShiftConvention::flat);
IdentityReport verify_corollary1(Sequences& seq, long n, int k,
                                 ShiftConvention mode = ShiftConvention::flat);
IdentityReport verify_lemma1(Sequences& seq, long n, int m, int ell);

/// Corollary-2 decomposition f(n-k, x, q^k s) = c1 f(n) + c2 f(n-1, x, qs),
/// c1 = f(k-1, x, qs)/v(k), c2 = -f(k, x, s)/v(k).
struct Decomposition {
    MPoly c1;
    MPoly c2;
    IdentityReport report;
};
Decomposition decompose_shifted(Sequences& seq, long n, int k);

IdentityReport verify_theorem2(Sequences& seq, long n, int m, int ell, int k);
IdentityReport verify_lemma2(Sequences& seq, long n, int m, int k);
IdentityReport verify_lemma3(Sequences& seq, int ell, int k);

/// j = 0 leg: the row-skip matrix at skip 0 must coincide with the plain
/// matrix shifted by one block, then the order-reduction with fac(k, q^m, m);
/// j >= 1 leg: the order-reduction that divides out f(jm).
IdentityReport verify_d_relations(Sequences& seq, int m, int k, int j);

/// det(f(n+i-j, x, q^j s)^k)_{i,j=0..k+1} == 0.
IdentityReport verify_vanishing(Sequences& seq, long n, int k);

/// Cross-multiplied minor ratio: (-1)^j det(A_j) * den_j == num_j * det(A_0)
/// where num_j/den_j is the theorem-1 coefficient and A_j deletes row 0 and
/// column j of the (k+2)-dimensional power matrix.
IdentityReport verify_minor_ratio(Sequences& seq, long n, int k, int j);

IdentityReport verify_theorem3(Sequences& seq, long n, int k, int ell,
                               ShiftConvention mode = ShiftConvention::flat);

/// Step-ell three-term relation (k = 1), verified cross-multiplied:
/// f(ell, x, q^ell s) f(n) - f(2 ell) f(n-ell, x, q^ell s)
///   + (-1)^ell q^{ell(3 ell - 1)/2} s^ell f(ell) f(n-2 ell, x, q^{2 ell} s).
IdentityReport verify_eq_2_33(Sequences& seq, long n, int ell);

} // namespace qfib
