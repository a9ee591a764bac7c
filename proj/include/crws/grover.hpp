#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "crws/dense_matrix.hpp"
#include "crws/errors.hpp"
#include "crws/graph.hpp"
#include "crws/graph_matrices.hpp"
#include "crws/identity.hpp"
#include "crws/linalg.hpp"
#include "crws/spectrum.hpp"
#include "crws/zeta.hpp"

namespace crws {

/// Grover coin-walk time evolution matrix U, 2m x 2m:
///   U_ef = 2/d_{t(f)}       if t(f) = o(e), f != e^-1
///        = 2/d_{t(f)} - 1   if f = e^-1
///        = 0                otherwise.
/// Real orthogonal; both row and column sums are 1.
inline DenseMatrix grover_matrix(const Graph& g) {
    const int arcs = g.arc_count();
    DenseMatrix u(arcs, arcs);
    for (int e = 0; e < arcs; ++e) {
        for (int f = 0; f < arcs; ++f) {
            if (g.arc(f).terminus != g.arc(e).origin) continue;
            const double d = static_cast<double>(g.degree(g.arc(f).terminus));
            u(e, f) = (f == g.inverse(e)) ? 2.0 / d - 1.0 : 2.0 / d;
        }
    }
    return u;
}

/// Real spectrum of the SRW transition matrix T(G), descending. T is similar
/// to the symmetric D^{-1/2} A D^{-1/2}, which is what gets eigensolved, so no
/// spurious imaginary parts leak into downstream square roots. Values are
/// validated against |lambda| <= 1 + 1e-9 and clamped to [-1, 1].
inline std::vector<double> srw_spectrum(const Graph& g) {
    const int n = g.vertex_count();
    DenseMatrix s(n, n);
    for (const Arc& arc : g.arcs()) {
        const double scale =
            1.0 / std::sqrt(static_cast<double>(g.degree(arc.origin)) * g.degree(arc.terminus));
        s(arc.origin, arc.terminus) = scale;
    }
    std::vector<double> values = symmetric_eigenvalues(s);
    for (double& v : values) {
        if (std::abs(v) > 1.0 + 1e-9)
            throw std::logic_error("srw_spectrum: eigenvalue " + std::to_string(v) +
                                   " outside [-1, 1]");
        v = std::clamp(v, -1.0, 1.0);
    }
    return values;
}

/// Characteristic-polynomial identity for the Grover matrix at one lambda:
///   lhs = det(lambda I_2m - U)
///   rhs = (lambda^2 - 1)^{m-n} det((lambda^2 + 1) I_n - 2 lambda T(G)).
/// Guarded against |lambda^2 - 1| within 1e-12 when m != n (pole for trees,
/// zero power otherwise).
inline IdentitySides grover_charpoly_identity(const Graph& g, Complex lambda) {
    const int n = g.vertex_count();
    const int m = g.edge_count();

    DenseMatrix left = lambda * DenseMatrix::identity(2 * m) - grover_matrix(g);
    const Complex lhs = determinant(left);

    const Complex lam2m1 = lambda * lambda - 1.0;
    if (m != n && std::abs(lam2m1) <= kPoleGuard)
        throw pole_error("sample point too close to pole: |lambda^2 - 1| <= 1e-12 with m != n");
    DenseMatrix right = (lambda * lambda + 1.0) * DenseMatrix::identity(n) -
                        (2.0 * lambda) * srw_transition_matrix(g);
    const Complex rhs = ipow(lam2m1, m - n) * determinant(right);
    return IdentitySides{lhs, rhs};
}

/// Closed-form Grover spectrum: lambda_T +/- i sqrt(1 - lambda_T^2) for each
/// SRW eigenvalue, plus m - n copies each of +1 and -1. Refuses trees, whose
/// m - n is negative.
inline Spectrum grover_spectrum_closed(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m < n)
        throw std::invalid_argument("grover_spectrum_closed: tree input (m < n) has no flat part");

    Spectrum spec;
    spec.provenance = Provenance::closed_form;
    spec.source = "grover spectral map, " + g.label();
    spec.values.reserve(2 * m);
    for (double lt : srw_spectrum(g)) {
        const double s = std::sqrt(std::max(0.0, 1.0 - lt * lt));
        spec.values.emplace_back(lt, s);
        spec.values.emplace_back(lt, -s);
    }
    for (int k = 0; k < m - n; ++k) {
        spec.values.emplace_back(1.0, 0.0);
        spec.values.emplace_back(-1.0, 0.0);
    }
    return spec;
}

}  // namespace crws
