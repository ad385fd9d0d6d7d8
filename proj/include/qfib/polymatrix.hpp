#pragma once

#include <cstddef>
#include <vector>

#include "qfib/mpoly.hpp"
#include "qfib/sequences.hpp"

namespace qfib {

/// Square matrix of polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    MPoly& at(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
    const MPoly& at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }

    /// Copy with row r and column c removed (dim must be >= 2).
    PolyMatrix minor_matrix(std::size_t r, std::size_t c) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<MPoly> cells_;
};

/// Fraction-free (Bareiss) elimination with row pivoting; every division is
/// exact by construction. Cell updates within one elimination step run in
/// parallel when max_workers() > 1; the result is identical either way.
MPoly det_bareiss(const PolyMatrix& m);

/// Cofactor expansion along the first row; the independent serial oracle.
MPoly det_cofactor(const PolyMatrix& m);

/// Determinant: cofactor expansion up to dim 3, Bareiss above.
MPoly det(const PolyMatrix& m);

/// Entry (i, j) = f(n + m*i - ell*j, x, q^{ell*j} s)^k for 0 <= i, j < dim.
PolyMatrix power_matrix(Sequences& seq, long n, long m, long ell, int k, int dim);

} // namespace qfib
