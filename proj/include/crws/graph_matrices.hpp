#pragma once

#include "crws/dense_matrix.hpp"
#include "crws/graph.hpp"

namespace crws {

/// Symmetric 0/1 adjacency matrix A(G), n x n.
inline DenseMatrix adjacency_matrix(const Graph& g) {
    DenseMatrix a(g.vertex_count(), g.vertex_count());
    for (const Arc& arc : g.arcs()) a(arc.origin, arc.terminus) = 1.0;
    return a;
}

/// Diagonal degree matrix D_G.
inline DenseMatrix degree_matrix(const Graph& g) {
    DenseMatrix d(g.vertex_count(), g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d(v, v) = static_cast<double>(g.degree(v));
    return d;
}

/// Simple-random-walk transition matrix T(G): T_uv = 1/deg(u) on arcs.
inline DenseMatrix srw_transition_matrix(const Graph& g) {
    DenseMatrix t(g.vertex_count(), g.vertex_count());
    for (const Arc& arc : g.arcs()) t(arc.origin, arc.terminus) = 1.0 / g.degree(arc.origin);
    return t;
}

/// Arc adjacency matrix B, 2m x 2m: B_ef = 1 iff t(e) = o(f).
inline DenseMatrix arc_adjacency_matrix(const Graph& g) {
    const int arcs = g.arc_count();
    DenseMatrix b(arcs, arcs);
    for (int e = 0; e < arcs; ++e)
        for (int f = 0; f < arcs; ++f)
            if (g.arc(e).terminus == g.arc(f).origin) b(e, f) = 1.0;
    return b;
}

/// Permutation matrix J0 of the arc involution e -> e^-1. J0^2 = I and the
/// diagonal is zero (the involution is fixed-point-free).
inline DenseMatrix flip_matrix(const Graph& g) {
    const int arcs = g.arc_count();
    DenseMatrix j(arcs, arcs);
    for (int e = 0; e < arcs; ++e) j(e, g.inverse(e)) = 1.0;
    return j;
}

}  // namespace crws
