#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "crws/dense_matrix.hpp"
#include "crws/errors.hpp"
#include "crws/graph.hpp"
#include "crws/graph_matrices.hpp"
#include "crws/grover.hpp"
#include "crws/identity.hpp"
#include "crws/linalg.hpp"
#include "crws/spectrum.hpp"

namespace crws {

/// Transition matrix of the Grover-induced correlated random walk:
/// P_ef = |U_ef|^2. Entrywise nonnegative and row-stochastic. The piecewise
/// form (4/d^2 off the reversal, (2/d - 1)^2 on it) is asserted in tests as a
/// cross-check; the squared-modulus definition is the single source of truth.
inline DenseMatrix crw_matrix(const Graph& g) {
    const DenseMatrix u = grover_matrix(g);
    const int arcs = g.arc_count();
    DenseMatrix p(arcs, arcs);
    for (int e = 0; e < arcs; ++e)
        for (int f = 0; f < arcs; ++f) p(e, f) = std::norm(u(e, f));
    return p;
}

/// Local coin-like factor R of the CRW, supported on arc pairs sharing an
/// origin:
///   R_ef = 4/d^2_{o(f)}        if o(e) = o(f), f != e
///        = (2/d_{o(f)} - 1)^2  if f = e
///        = 0                   otherwise.
/// Factorization: crw_matrix = r_matrix * flip_matrix (entrywise exact up to
/// rounding); flip_matrix * r_matrix is its transpose.
inline DenseMatrix r_matrix(const Graph& g) {
    const int arcs = g.arc_count();
    DenseMatrix r(arcs, arcs);
    for (int e = 0; e < arcs; ++e) {
        for (int f = 0; f < arcs; ++f) {
            if (g.arc(e).origin != g.arc(f).origin) continue;
            const double d = static_cast<double>(g.degree(g.arc(f).origin));
            r(e, f) = (e == f) ? (2.0 / d - 1.0) * (2.0 / d - 1.0) : 4.0 / (d * d);
        }
    }
    return r;
}

namespace detail {

inline double crw_edge_mu(const Graph& g, int vertex) {
    return 4.0 / static_cast<double>(g.degree(vertex)) - 1.0;
}

}  // namespace detail

/// Smallest |1 - u^2 (4/d_o - 1)(4/d_t - 1)| over the edges: distance of a
/// sample point from the reduced form's poles.
inline double crw_pole_distance(const Graph& g, Complex u) {
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.edge_count(); ++j) {
        const Arc& arc = g.arc(j);
        const double mm = detail::crw_edge_mu(g, arc.origin) * detail::crw_edge_mu(g, arc.terminus);
        dist = std::min(dist, std::abs(1.0 - u * u * mm));
    }
    return dist;
}

/// Characteristic-polynomial identity for the CRW on an arbitrary connected
/// graph at one u:
///   lhs = det(I_2m - u P)
///   rhs = prod_j (1 - u^2 (4/d_{o(e_j)} - 1)(4/d_{t(e_j)} - 1))
///         * det(I_n - u A_crw(u) + u^2 D_crw(u))
/// with A_crw(u)_xy = (4/d_x^2) / (1 - u^2 (4/d_x - 1)(4/d_y - 1)) on arcs and
/// D_crw(u) the matching diagonal. Throws pole_error with the edge index when
/// a denominator is within the guard distance.
inline IdentitySides crw_charpoly_identity(const Graph& g, Complex u) {
    const int n = g.vertex_count();

    DenseMatrix left = DenseMatrix::identity(g.arc_count()) - (u * crw_matrix(g));
    const Complex lhs = determinant(left);

    Complex prefactor = 1.0;
    for (int j = 0; j < g.edge_count(); ++j) {
        const Arc& arc = g.arc(j);
        const double mm = detail::crw_edge_mu(g, arc.origin) * detail::crw_edge_mu(g, arc.terminus);
        const Complex factor = 1.0 - u * u * mm;
        if (std::abs(factor) <= kPoleGuard)
            throw pole_error("sample point too close to pole: edge " + std::to_string(j + 1));
        prefactor *= factor;
    }

    DenseMatrix reduced = DenseMatrix::identity(n);
    for (const Arc& arc : g.arcs()) {
        const double dx = static_cast<double>(g.degree(arc.origin));
        const double mu_x = detail::crw_edge_mu(g, arc.origin);
        const double mu_y = detail::crw_edge_mu(g, arc.terminus);
        const Complex denom = 1.0 - u * u * mu_x * mu_y;
        reduced(arc.origin, arc.terminus) -= u * (4.0 / (dx * dx)) / denom;
        reduced(arc.origin, arc.origin) += u * u * (4.0 / (dx * dx)) * mu_y / denom;
    }
    return IdentitySides{lhs, prefactor * determinant(reduced)};
}

/// Regular-graph specialization of the CRW identity:
///   rhs = (d^2 - u^2 (4-d)^2)^{m-n} / d^{2m}
///         * det(d (d + (4-d) u^2) I_n - 4u A(G)).
inline IdentitySides crw_charpoly_identity_regular(const Graph& g, Complex u) {
    const auto d_opt = g.regular_degree();
    if (!d_opt || *d_opt < 2)
        throw std::invalid_argument("crw_charpoly_identity_regular: graph must be d-regular, d >= 2");
    const double d = static_cast<double>(*d_opt);
    const int n = g.vertex_count();
    const int m = g.edge_count();

    DenseMatrix left = DenseMatrix::identity(2 * m) - (u * crw_matrix(g));
    const Complex lhs = determinant(left);

    const Complex base = d * d - u * u * (4.0 - d) * (4.0 - d);
    if (m > n && std::abs(base) <= kPoleGuard)
        throw pole_error("sample point too close to pole: |d^2 - u^2 (4-d)^2| <= 1e-12");
    DenseMatrix right = (d * (d + (4.0 - d) * u * u)) * DenseMatrix::identity(n) -
                        (4.0 * u) * adjacency_matrix(g);
    const Complex rhs = ipow(base, m - n) / ipow(Complex(d, 0.0), 2 * m) * determinant(right);
    return IdentitySides{lhs, rhs};
}

/// Closed-form CRW spectrum on a connected d-regular graph (d >= 2):
/// for each adjacency eigenvalue, both roots of
///   d^2 lambda^2 - 4 lambda_A lambda + d (4 - d) = 0,
/// i.e. lambda = (2 lambda_A +/- sqrt(4 lambda_A^2 - d^3 (4-d))) / d^2, plus
/// m - n copies each of +(4-d)/d and -(4-d)/d.
inline Spectrum crw_spectrum_regular(const Graph& g) {
    const auto d_opt = g.regular_degree();
    if (!d_opt || *d_opt < 2)
        throw std::invalid_argument("crw_spectrum_regular: graph must be d-regular, d >= 2");
    const double d = static_cast<double>(*d_opt);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m < n) throw std::invalid_argument("crw_spectrum_regular: tree input (m < n)");

    Spectrum spec;
    spec.provenance = Provenance::closed_form;
    spec.source = "crw spectrum (regular), " + g.label();
    spec.values.reserve(2 * m);
    for (double la : symmetric_eigenvalues(adjacency_matrix(g))) {
        const Complex disc = std::sqrt(Complex(4.0 * la * la - d * d * d * (4.0 - d), 0.0));
        spec.values.push_back((2.0 * la + disc) / (d * d));
        spec.values.push_back((2.0 * la - disc) / (d * d));
    }
    const double flat = (4.0 - d) / d;
    for (int k = 0; k < m - n; ++k) {
        spec.values.emplace_back(flat, 0.0);
        spec.values.emplace_back(-flat, 0.0);
    }
    return spec;
}

/// Structure of a connected (r,s)-semiregular bipartite graph: the part lists
/// (the smaller part first), the side degrees, and the nonnegative adjacency
/// eigenvalues lambda_1 >= ... >= lambda_{m_part} whose +/- reflections plus
/// zeros make up Spec(A).
struct BipartiteProfile {
    explicit BipartiteProfile(Graph g) : graph(std::move(g)) {}

    Graph graph;
    std::vector<int> part_v;  // m_part vertices, common degree r
    std::vector<int> part_w;  // n_part vertices, common degree s
    int r = 0;
    int s = 0;
    int m_part = 0;
    int n_part = 0;
    int edge_total = 0;    // epsilon
    int vertex_total = 0;  // nu
    std::vector<double> lambdas;
};

inline BipartiteProfile bipartite_profile(const Graph& g) {
    auto parts = g.bipartition();
    if (!parts) throw std::invalid_argument("bipartite_profile: graph is not bipartite");
    auto [a, b] = *parts;

    auto common_degree = [&g](const std::vector<int>& part) -> int {
        const int d = g.degree(part.front());
        for (int v : part)
            if (g.degree(v) != d) return -1;
        return d;
    };
    const int da = common_degree(a);
    const int db = common_degree(b);
    if (da < 0 || db < 0)
        throw std::invalid_argument("bipartite_profile: graph is not semiregular (mixed degrees within a part)");

    BipartiteProfile p(g);
    if (a.size() <= b.size()) {
        p.part_v = std::move(a);
        p.part_w = std::move(b);
        p.r = da;
        p.s = db;
    } else {
        p.part_v = std::move(b);
        p.part_w = std::move(a);
        p.r = db;
        p.s = da;
    }
    p.m_part = static_cast<int>(p.part_v.size());
    p.n_part = static_cast<int>(p.part_w.size());
    p.edge_total = g.edge_count();
    p.vertex_total = g.vertex_count();

    const std::vector<double> full = symmetric_eigenvalues(adjacency_matrix(g));
    p.lambdas.assign(full.begin(), full.begin() + p.m_part);

    // validate the +/- symmetry and zero count of a bipartite spectrum
    std::vector<double> reconstructed;
    reconstructed.reserve(full.size());
    for (double l : p.lambdas) reconstructed.push_back(l);
    for (int k = 0; k < p.vertex_total - 2 * p.m_part; ++k) reconstructed.push_back(0.0);
    for (auto it = p.lambdas.rbegin(); it != p.lambdas.rend(); ++it) reconstructed.push_back(-*it);
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (std::abs(full[i] - reconstructed[i]) > 1e-8)
            throw std::logic_error("bipartite_profile: adjacency spectrum fails +/- symmetry check");
    }
    for (double& l : p.lambdas) l = std::max(l, 0.0);
    return p;
}

/// Closed-form CRW spectrum on an (r,s)-semiregular bipartite graph with
/// edge_total >= vertex_total:
///  - per lambda_j, the four roots of
///      lambda^4 + (4/r + 4/s - 2 - 16 lambda_j^2 / (r^2 s^2)) lambda^2
///                + (4/r - 1)(4/s - 1) = 0;
///  - 2 (n_part - m_part) values +/- i sqrt(4/r - 1);
///  - 2 (edge_total - vertex_total) values +/- sqrt((4/r - 1)(4/s - 1)).
inline Spectrum crw_spectrum_semiregular(const BipartiteProfile& p) {
    if (p.edge_total < p.vertex_total)
        throw std::invalid_argument(
            "crw_spectrum_semiregular: tree-like input (edge count < vertex count)");

    const double r = static_cast<double>(p.r);
    const double s = static_cast<double>(p.s);
    Spectrum spec;
    spec.provenance = Provenance::closed_form;
    spec.source = "crw spectrum (semiregular bipartite), " + p.graph.label();
    spec.values.reserve(2 * p.edge_total);

    for (double lj : p.lambdas) {
        const double b = 4.0 / r + 4.0 / s - 2.0 - 16.0 * lj * lj / (r * r * s * s);
        const double c = (4.0 / r - 1.0) * (4.0 / s - 1.0);
        const Complex disc = std::sqrt(Complex(b * b - 4.0 * c, 0.0));
        for (const Complex& lam_sq : {(-b + disc) / 2.0, (-b - disc) / 2.0}) {
            const Complex root = std::sqrt(lam_sq);
            spec.values.push_back(root);
            spec.values.push_back(-root);
        }
    }
    const Complex flat_w = std::sqrt(Complex(-(4.0 / r - 1.0), 0.0));
    for (int k = 0; k < p.n_part - p.m_part; ++k) {
        spec.values.push_back(flat_w);
        spec.values.push_back(-flat_w);
    }
    const Complex flat_c = std::sqrt(Complex((4.0 / r - 1.0) * (4.0 / s - 1.0), 0.0));
    for (int k = 0; k < p.edge_total - p.vertex_total; ++k) {
        spec.values.push_back(flat_c);
        spec.values.push_back(-flat_c);
    }
    return spec;
}

/// The two candidate sign conventions for the semiregular rhs. The inner and
/// middle factors appear in print both as (1 - u^2 (4/r - 1)) and as
/// (1 + u^2 (4/r - 1)); only one can match det(I - uP).
enum class SemiregularSign { minus_form, plus_form };

/// Parameterized rhs of the semiregular CRW identity:
///   (1 - u^2 (4/r-1)(4/s-1))^{eps - nu} (1 +/- u^2 (4/r-1))^{n-m}
///   * prod_j ((1 +/- u^2 (4/s-1))(1 +/- u^2 (4/r-1)) - 16 lambda_j^2 u^2 / (r^2 s^2)).
inline Complex crw_semiregular_rhs(const BipartiteProfile& p, Complex u, SemiregularSign sign) {
    const double r = static_cast<double>(p.r);
    const double s = static_cast<double>(p.s);
    const double sgn = (sign == SemiregularSign::plus_form) ? 1.0 : -1.0;

    const Complex cross = 1.0 - u * u * (4.0 / r - 1.0) * (4.0 / s - 1.0);
    if (p.edge_total < p.vertex_total && std::abs(cross) <= kPoleGuard)
        throw pole_error("sample point too close to pole: |1 - u^2 (4/r-1)(4/s-1)| <= 1e-12");
    const Complex middle = 1.0 + sgn * u * u * (4.0 / r - 1.0);

    Complex product = 1.0;
    for (double lj : p.lambdas) {
        const Complex fs = 1.0 + sgn * u * u * (4.0 / s - 1.0);
        const Complex fr = 1.0 + sgn * u * u * (4.0 / r - 1.0);
        product *= fs * fr - 16.0 * lj * lj * u * u / (r * r * s * s);
    }
    return ipow(cross, p.edge_total - p.vertex_total) * ipow(middle, p.n_part - p.m_part) * product;
}

/// Semiregular-bipartite CRW identity. The rhs uses the plus_form convention:
/// the two printed variants of this formula disagree on those inner signs, and
/// plus_form is the one that matches det(I - uP) numerically (see
/// resolve_semiregular_sign, exercised in CI on K2,3).
inline IdentitySides crw_charpoly_identity_semiregular(const BipartiteProfile& p, Complex u) {
    DenseMatrix left = DenseMatrix::identity(2 * p.edge_total) - (u * crw_matrix(p.graph));
    return IdentitySides{determinant(left), crw_semiregular_rhs(p, u, SemiregularSign::plus_form)};
}

struct SemiregularSignResolution {
    SemiregularSign resolved;
    double max_dev_plus = 0.0;
    double max_dev_minus = 0.0;
};

/// Decide the semiregular sign convention empirically: evaluate both rhs
/// variants against det(I - uP) at the given sample points. Exactly one
/// convention must pass at the given tolerance; anything else is an error.
inline SemiregularSignResolution resolve_semiregular_sign(const BipartiteProfile& p,
                                                          std::span<const Complex> points,
                                                          double tol) {
    SemiregularSignResolution res{SemiregularSign::plus_form};
    for (const Complex& u : points) {
        DenseMatrix left = DenseMatrix::identity(2 * p.edge_total) - (u * crw_matrix(p.graph));
        const Complex lhs = determinant(left);
        res.max_dev_plus = std::max(
            res.max_dev_plus,
            relative_deviation(lhs, crw_semiregular_rhs(p, u, SemiregularSign::plus_form)));
        res.max_dev_minus = std::max(
            res.max_dev_minus,
            relative_deviation(lhs, crw_semiregular_rhs(p, u, SemiregularSign::minus_form)));
    }
    const bool plus_ok = res.max_dev_plus <= tol;
    const bool minus_ok = res.max_dev_minus <= tol;
    if (plus_ok == minus_ok)
        throw std::runtime_error("resolve_semiregular_sign: conventions are not separable (plus dev " +
                                 std::to_string(res.max_dev_plus) + ", minus dev " +
                                 std::to_string(res.max_dev_minus) + ")");
    res.resolved = plus_ok ? SemiregularSign::plus_form : SemiregularSign::minus_form;
    return res;
}

}  // namespace crws
