#include "qfib/polymatrix.hpp"

#include <omp.h>

#include <exception>
#include <utility>

#include "qfib/parallel.hpp"

namespace qfib {

PolyMatrix PolyMatrix::minor_matrix(std::size_t r, std::size_t c) const {
    PolyMatrix out(dim_ - 1);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i == r) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j == c) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

MPoly det_bareiss(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1) return m.at(0, 0);
    PolyMatrix w = m;
    MPoly prev = MPoly::one();
    bool negate = false;
    const int workers = max_workers();

    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return MPoly::zero();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
            }
            negate = !negate;
        }
        const MPoly& piv = w.at(col, col);

        const long cells = static_cast<long>((n - col - 1) * (n - col - 1));
        std::exception_ptr err;
#pragma omp parallel for collapse(2) schedule(dynamic) num_threads(workers) \
    if (workers > 1 && cells > 1)
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                try {
                    MPoly t = mul_serial(w.at(i, j), piv) -
                              mul_serial(w.at(i, col), w.at(col, j));
                    w.at(i, j) = exact_div(t, prev);
                } catch (...) {
#pragma omp critical
                    if (!err) err = std::current_exception();
                }
            }
        }
        if (err) std::rethrow_exception(err);
        for (std::size_t i = col + 1; i < n; ++i) w.at(i, col) = MPoly::zero();
        prev = piv;
    }
    MPoly result = w.at(n - 1, n - 1);
    return negate ? -result : result;
}

MPoly det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 1) return m.at(0, 0);
    if (n == 2) {
        return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    }
    MPoly total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        MPoly cof = m.at(0, j) * det_cofactor(m.minor_matrix(0, j));
        if (j % 2 == 0) total += cof;
        else total -= cof;
    }
    return total;
}

MPoly det(const PolyMatrix& m) {
    return m.dim() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

PolyMatrix power_matrix(Sequences& seq, long n, long m, long ell, int k, int dim) {
    PolyMatrix out(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            out.at(i, j) = pow(seq.qfib(n + m * i - ell * j, ell * j),
                               static_cast<unsigned>(k));
        }
    }
    return out;
}

} // namespace qfib
