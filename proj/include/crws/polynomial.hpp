#pragma once

#include <algorithm>
#include <vector>

#include "crws/dense_matrix.hpp"

namespace crws {

/// Polynomial with complex coefficients in ascending degree order.
struct Polynomial {
    std::vector<Complex> coefficients;

    std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }

    Complex eval(Complex x) const {
        Complex acc = 0.0;
        for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * x + coefficients[k];
        return acc;
    }

    double coefficient_norm() const {
        double s = 0.0;
        for (const Complex& c : coefficients) s += std::abs(c);
        return s;
    }

    /// Strip trailing coefficients of magnitude <= tol * max coefficient
    /// magnitude, keeping at least the constant term.
    void trim(double tol = 1e-12) {
        double top = 0.0;
        for (const Complex& c : coefficients) top = std::max(top, std::abs(c));
        while (coefficients.size() > 1 && std::abs(coefficients.back()) <= tol * top)
            coefficients.pop_back();
    }
};

/// Coefficients of det(lambda I - M) by the Faddeev-LeVerrier recurrence.
/// The result is monic of degree n. O(n^4); intended for desk-scale matrices.
inline Polynomial char_poly(const DenseMatrix& m) {
    m.require_square("char_poly");
    const std::size_t n = m.rows();
    std::vector<Complex> c(n + 1, Complex(0.0, 0.0));
    c[n] = 1.0;
    if (n == 0) return Polynomial{std::move(c)};

    DenseMatrix power = m;
    c[n - 1] = -power.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        DenseMatrix shifted = power;
        const Complex ck = c[n - k + 1];
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += ck;
        power = m * shifted;
        c[n - k] = -power.trace() / static_cast<double>(k);
    }
    return Polynomial{std::move(c)};
}

}  // namespace crws
