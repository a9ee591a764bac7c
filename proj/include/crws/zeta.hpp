#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crws/dense_matrix.hpp"
#include "crws/errors.hpp"
#include "crws/graph.hpp"
#include "crws/graph_matrices.hpp"
#include "crws/linalg.hpp"
#include "crws/rng.hpp"

namespace crws {

/// Guard distance from the poles of reduced determinant forms.
inline constexpr double kPoleGuard = 1e-12;

/// Per-arc weights tau(e), mu(e) defining the weighted arc matrix. tau is the
/// weight an arc contributes when it continues a path, mu the correction on a
/// backtracking step. Defined on all 2m arcs in canonical order.
struct ArcWeighting {
    std::vector<Complex> tau;
    std::vector<Complex> mu;

    /// tau = mu = 1: specializes the weighted arc matrix to the edge matrix
    /// B - J0 of the Ihara zeta.
    static ArcWeighting ones(const Graph& g) {
        const std::size_t arcs = static_cast<std::size_t>(g.arc_count());
        return ArcWeighting{std::vector<Complex>(arcs, Complex(1.0, 0.0)),
                            std::vector<Complex>(arcs, Complex(1.0, 0.0))};
    }

    /// Seeded complex weights with real and imaginary parts uniform in [-1, 1].
    static ArcWeighting random(const Graph& g, std::uint64_t seed) {
        std::mt19937_64 rng = make_rng(seed, /*stream=*/0x3E7A);
        const std::size_t arcs = static_cast<std::size_t>(g.arc_count());
        ArcWeighting w;
        w.tau.reserve(arcs);
        w.mu.reserve(arcs);
        for (std::size_t e = 0; e < arcs; ++e) {
            const double tr = uniform_real(rng, -1.0, 1.0);
            const double ti = uniform_real(rng, -1.0, 1.0);
            const double mr = uniform_real(rng, -1.0, 1.0);
            const double mi = uniform_real(rng, -1.0, 1.0);
            w.tau.emplace_back(tr, ti);
            w.mu.emplace_back(mr, mi);
        }
        return w;
    }

    /// The weighting whose transposed arc matrix is the Grover-induced CRW
    /// transition matrix: tau(e) = 4/d_{o(e)}^2, mu(e) = 4/d_{o(e)} - 1.
    static ArcWeighting crw_induced(const Graph& g) {
        ArcWeighting w;
        w.tau.reserve(g.arc_count());
        w.mu.reserve(g.arc_count());
        for (const Arc& arc : g.arcs()) {
            const double d = static_cast<double>(g.degree(arc.origin));
            w.tau.emplace_back(4.0 / (d * d), 0.0);
            w.mu.emplace_back(4.0 / d - 1.0, 0.0);
        }
        return w;
    }

    void require_bound_to(const Graph& g) const {
        if (tau.size() != static_cast<std::size_t>(g.arc_count()) || mu.size() != tau.size())
            throw std::invalid_argument("arc weighting size does not match the graph's arc count");
    }
};

/// Weighted arc matrix, 2m x 2m:
///   M_ef = tau(f) [t(e) = o(f)] - mu(f) [f = e^-1].
inline DenseMatrix weighted_arc_matrix(const Graph& g, const ArcWeighting& w) {
    w.require_bound_to(g);
    const int arcs = g.arc_count();
    DenseMatrix m(arcs, arcs);
    for (int e = 0; e < arcs; ++e) {
        for (int f = 0; f < arcs; ++f) {
            Complex value = 0.0;
            if (g.arc(e).terminus == g.arc(f).origin) value += w.tau[f];
            if (g.inverse(e) == f) value -= w.mu[f];
            m(e, f) = value;
        }
    }
    return m;
}

/// det(I_2m - u M), the reciprocal of the weighted zeta evaluated directly on
/// the arc matrix.
inline Complex zeta_recip_direct(const Graph& g, const ArcWeighting& w, Complex u) {
    const DenseMatrix m = weighted_arc_matrix(g, w);
    DenseMatrix a = DenseMatrix::identity(g.arc_count()) - (u * m);
    return determinant(a);
}

/// Smallest |1 - u^2 mu(e_j) mu(e_j^-1)| over the m edges; the reduced form's
/// pole distance for this sample point.
inline double weighted_zeta_pole_distance(const Graph& g, const ArcWeighting& w, Complex u) {
    w.require_bound_to(g);
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.edge_count(); ++j)
        dist = std::min(dist, std::abs(1.0 - u * u * w.mu[j] * w.mu[g.inverse(j)]));
    return dist;
}

/// Reduced n x n evaluation of the weighted zeta reciprocal:
///   prod_j (1 - u^2 mu(e_j) mu(e_j^-1)) * det(I_n - u A(theta) + u^2 D(theta)),
/// with A(theta)_uv = tau(e) / (1 - u^2 mu(e) mu(e^-1)) for the arc e = (u, v)
/// and D(theta)_uu = sum over arcs out of u of tau(e) mu(e^-1) / (same factor).
/// Throws pole_error naming the offending edge when a denominator is within
/// the guard distance.
inline Complex zeta_recip_reduced(const Graph& g, const ArcWeighting& w, Complex u) {
    w.require_bound_to(g);
    const int n = g.vertex_count();
    const int m = g.edge_count();

    Complex prefactor = 1.0;
    for (int j = 0; j < m; ++j) {
        const Complex factor = 1.0 - u * u * w.mu[j] * w.mu[g.inverse(j)];
        if (std::abs(factor) <= kPoleGuard)
            throw pole_error("sample point too close to pole: edge " + std::to_string(j + 1) +
                             " has |1 - u^2 mu(e) mu(e^-1)| <= 1e-12");
        prefactor *= factor;
    }

    DenseMatrix reduced = DenseMatrix::identity(n);
    for (int e = 0; e < g.arc_count(); ++e) {
        const Arc& arc = g.arc(e);
        const Complex denom = 1.0 - u * u * w.mu[e] * w.mu[g.inverse(e)];
        reduced(arc.origin, arc.terminus) -= u * w.tau[e] / denom;
        reduced(arc.origin, arc.origin) += u * u * w.tau[e] * w.mu[g.inverse(e)] / denom;
    }
    return prefactor * determinant(reduced);
}

/// det(I_2m - u (B - J0)): Ihara zeta reciprocal in the edge-matrix form.
inline Complex ihara_recip_edge(const Graph& g, Complex u) {
    const DenseMatrix edge = arc_adjacency_matrix(g) - flip_matrix(g);
    DenseMatrix a = DenseMatrix::identity(g.arc_count()) - (u * edge);
    return determinant(a);
}

/// (1 - u^2)^{m-n} det(I_n - u A + u^2 (D - I)): Ihara zeta reciprocal in the
/// vertex-matrix form. The prefactor is a pole when m < n (trees); guarded.
inline Complex ihara_recip_bass(const Graph& g, Complex u) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const Complex one_minus_u2 = 1.0 - u * u;
    if (m < n && std::abs(one_minus_u2) <= kPoleGuard)
        throw pole_error("sample point too close to pole: |1 - u^2| <= 1e-12 with m < n");

    DenseMatrix a = DenseMatrix::identity(n);
    for (const Arc& arc : g.arcs()) a(arc.origin, arc.terminus) -= u;
    for (int v = 0; v < n; ++v) a(v, v) += u * u * static_cast<double>(g.degree(v) - 1);
    return ipow(one_minus_u2, m - n) * determinant(a);
}

}  // namespace crws
