#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "crws/dense_matrix.hpp"
#include "crws/graph.hpp"
#include "crws/graph_matrices.hpp"
#include "crws/identity.hpp"
#include "crws/linalg.hpp"
#include "crws/spectrum.hpp"

namespace crws {

/// 2x2 coin [[a, b], [c, d]] of the cycle-graph CRW. Column pairs must be
/// probability distributions: a + c = 1 and b + d = 1 within 1e-14, all
/// entries in [0, 1].
struct CoinParams {
    double a, b, c, d;

    CoinParams(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        for (double x : {a, b, c, d})
            if (x < 0.0 || x > 1.0)
                throw std::invalid_argument("coin parameters must lie in [0, 1]");
        if (std::abs(a + c - 1.0) > 1e-14 || std::abs(b + d - 1.0) > 1e-14)
            throw std::invalid_argument("coin parameters must satisfy a + c = 1 and b + d = 1");
    }

    static CoinParams balanced() { return CoinParams(0.5, 0.5, 0.5, 0.5); }

    double determinant() const { return a * d - b * c; }

    std::string label() const {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "coin(%g,%g,%g,%g)", a, b, c, d);
        return buf;
    }
};

namespace detail {

/// Cyclic permutation matrix Q of 1 -> 2 -> ... -> n -> 1: Q(i, i+1) = 1.
inline DenseMatrix cycle_shift_matrix(int n) {
    DenseMatrix q(n, n);
    for (int i = 0; i < n; ++i) q(i, (i + 1) % n) = 1.0;
    return q;
}

}  // namespace detail

/// Transition matrix of the coin-driven CRW on the cycle C_n, in block form
///   [[d Q^-1, c I_n],
///    [b I_n,  a Q ]]
/// over the canonical arc order (forward arcs, then inverses). Columns sum
/// to 1 (column-stochastic; rows do not sum to 1 in general).
inline DenseMatrix cycle_crw_matrix(int n, const CoinParams& coin) {
    if (n < 3) throw std::invalid_argument("cycle_crw_matrix: n must be >= 3");
    DenseMatrix u(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const int fwd_prev = (i + n - 1) % n;
        u(i, fwd_prev) = coin.d;            // d Q^-1
        u(i, n + i) = coin.c;               // c I
        u(n + i, i) = coin.b;               // b I
        u(n + i, n + (i + 1) % n) = coin.a;  // a Q
    }
    return u;
}

/// Weighted vertex matrix W(C_n) of the coin walk: weight d on the forward
/// cyclic diagonal, a on the backward one. Circulant with eigenvalues
/// d e^{i theta_j} + a e^{-i theta_j}.
inline DenseMatrix cycle_weight_matrix(int n, const CoinParams& coin) {
    if (n < 3) throw std::invalid_argument("cycle_weight_matrix: n must be >= 3");
    DenseMatrix w(n, n);
    for (int i = 0; i < n; ++i) {
        w(i, (i + 1) % n) = coin.d;
        w(i, (i + n - 1) % n) = coin.a;
    }
    return w;
}

/// Characteristic-polynomial identity of the cycle coin walk at one lambda:
///   lhs = det(lambda I_2n - U)
///   rhs = det((lambda^2 + (ad - bc)) I_n - lambda W(C_n)).
inline IdentitySides cycle_crw_charpoly_identity(int n, const CoinParams& coin, Complex lambda) {
    DenseMatrix left = lambda * DenseMatrix::identity(2 * n) - cycle_crw_matrix(n, coin);
    DenseMatrix right = (lambda * lambda + coin.determinant()) * DenseMatrix::identity(n) -
                        lambda * cycle_weight_matrix(n, coin);
    return IdentitySides{determinant(left), determinant(right)};
}

/// Closed-form spectrum of the cycle coin walk: for each circulant eigenvalue
/// mu_j = d e^{i theta_j} + a e^{-i theta_j}, theta_j = 2 pi j / n, both roots
/// of lambda^2 - mu_j lambda + (ad - bc). Both quadratic roots are emitted, so
/// the square-root branch cannot change the multiset.
inline Spectrum cycle_crw_spectrum(int n, const CoinParams& coin) {
    if (n < 3) throw std::invalid_argument("cycle_crw_spectrum: n must be >= 3");
    Spectrum spec;
    spec.provenance = Provenance::closed_form;
    spec.source = "cycle crw spectrum, C" + std::to_string(n) + " " + coin.label();
    spec.values.reserve(2 * n);
    const double det = coin.determinant();
    for (int j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n;
        const Complex mu = coin.d * std::polar(1.0, theta) + coin.a * std::polar(1.0, -theta);
        const Complex disc = std::sqrt(mu * mu - 4.0 * det);
        spec.values.push_back((mu + disc) / 2.0);
        spec.values.push_back((mu - disc) / 2.0);
    }
    return spec;
}

/// Spectrum of the balanced (all-1/2) coin walk on C_n: cos(2 pi j / n) for
/// j = 0..n-1 plus n zeros. Coincides with cycle_crw_spectrum at the balanced
/// coin and with Spec(T(C_n)) union {0^n}.
inline Spectrum cycle_crw_spectrum_balanced(int n) {
    if (n < 3) throw std::invalid_argument("cycle_crw_spectrum_balanced: n must be >= 3");
    Spectrum spec;
    spec.provenance = Provenance::closed_form;
    spec.source = "cycle crw spectrum (balanced coin), C" + std::to_string(n);
    spec.values.reserve(2 * n);
    for (int j = 0; j < n; ++j)
        spec.values.emplace_back(std::cos(2.0 * std::numbers::pi * j / n), 0.0);
    for (int j = 0; j < n; ++j) spec.values.emplace_back(0.0, 0.0);
    return spec;
}

/// Uniform-coin CRW on a d-regular graph: U = (1/d) B. Row-stochastic.
inline DenseMatrix uniform_crw_matrix(const Graph& g) {
    const auto d_opt = g.regular_degree();
    if (!d_opt || *d_opt < 2)
        throw std::invalid_argument("uniform_crw_matrix: graph must be d-regular, d >= 2");
    return Complex(1.0 / *d_opt, 0.0) * arc_adjacency_matrix(g);
}

/// Characteristic-polynomial identity of the uniform-coin CRW at one lambda:
///   lhs = det(lambda I_2m - (1/d) B)
///   rhs = lambda^{2m - n} det(lambda I_n - (1/d) A(G)).
inline IdentitySides uniform_crw_charpoly_identity(const Graph& g, Complex lambda) {
    const auto d_opt = g.regular_degree();
    if (!d_opt || *d_opt < 2)
        throw std::invalid_argument("uniform_crw_charpoly_identity: graph must be d-regular, d >= 2");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    DenseMatrix left = lambda * DenseMatrix::identity(2 * m) - uniform_crw_matrix(g);
    DenseMatrix right =
        lambda * DenseMatrix::identity(n) - Complex(1.0 / *d_opt, 0.0) * adjacency_matrix(g);
    return IdentitySides{determinant(left), ipow(lambda, 2 * m - n) * determinant(right)};
}

/// Closed-form spectrum of the uniform-coin CRW: lambda_A / d over Spec(A(G))
/// plus zero with multiplicity 2m - n (the exponent of the identity, which is
/// what the total cardinality 2m forces).
inline Spectrum uniform_crw_spectrum(const Graph& g) {
    const auto d_opt = g.regular_degree();
    if (!d_opt || *d_opt < 2)
        throw std::invalid_argument("uniform_crw_spectrum: graph must be d-regular, d >= 2");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    Spectrum spec;
    spec.provenance = Provenance::closed_form;
    spec.source = "uniform crw spectrum, " + g.label();
    spec.values.reserve(2 * m);
    for (double la : symmetric_eigenvalues(adjacency_matrix(g)))
        spec.values.emplace_back(la / *d_opt, 0.0);
    for (int k = 0; k < 2 * m - n; ++k) spec.values.emplace_back(0.0, 0.0);
    return spec;
}

}  // namespace crws
