#pragma once

#include <cmath>
#include <cstdlib>

#include "crws/dense_matrix.hpp"

namespace crws {

/// Determinant by LU factorization with partial pivoting. Pivot selection is
/// deterministic (first row attaining the maximum magnitude), so repeated runs
/// produce bit-identical results. Permutation matrices come out exact up to
/// the sign bookkeeping of the row swaps.
inline Complex determinant(const DenseMatrix& m) {
    m.require_square("determinant");
    const std::size_t n = m.rows();
    if (n == 0) return 1.0;

    DenseMatrix lu = m;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
            sign = -sign;
        }
        const Complex inv_pivot = 1.0 / lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = lu(i, k) * inv_pivot;
            if (factor == Complex(0.0, 0.0)) continue;
            lu(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
        }
    }

    Complex det = static_cast<double>(sign);
    for (std::size_t k = 0; k < n; ++k) det *= lu(k, k);
    return det;
}

/// z^k for integer k, negative exponents included. Exact repeated
/// multiplication rather than exp/log so small integer powers stay clean.
inline Complex ipow(Complex z, long k) {
    if (k < 0) return 1.0 / ipow(z, -k);
    Complex r = 1.0;
    Complex base = z;
    unsigned long e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1UL) r *= base;
        base *= base;
        e >>= 1UL;
    }
    return r;
}

}  // namespace crws
