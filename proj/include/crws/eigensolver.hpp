#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "crws/dense_matrix.hpp"
#include "crws/errors.hpp"

namespace crws {

struct EigenOptions {
    std::size_t dimension_cap = 512;
    std::size_t max_iterations_per_eigenvalue = 60;
    /// Residual certificate: every returned (lambda, v) pair must satisfy
    /// ||A v - lambda v|| <= residual_tol * ||A||_F for some unit v.
    double residual_tol = 1e-8;
};

struct SchurDecomposition {
    DenseMatrix t;  // upper triangular, A = Z T Z*
    DenseMatrix z;  // unitary
};

namespace detail {

// The QR pipeline is templated on the real type: the certified eigenvalue
// oracle runs it in long double so that defective eigenvalues (whose error
// scales as sqrt(machine epsilon) for any backward-stable method) still come
// out well below the 1e-8 comparison tolerance.

template <typename Real>
using Cx = std::complex<Real>;

// Unitary Givens rotation G = [[c, s], [-conj(s), c]] with real c >= 0 such
// that G [f; g] = [r; 0].
template <typename Real>
void make_givens(Cx<Real> f, Cx<Real> g, Real& c, Cx<Real>& s) {
    const Real af = std::abs(f);
    const Real ag = std::abs(g);
    if (ag == Real(0)) {
        c = Real(1);
        s = Cx<Real>(0);
        return;
    }
    if (af == Real(0)) {
        c = Real(0);
        s = std::conj(g) / ag;
        return;
    }
    const Real rho = std::hypot(af, ag);
    c = af / rho;
    s = (f / af) * std::conj(g) / rho;
}

// Householder reduction of the flat row-major matrix h (n x n) to upper
// Hessenberg form, accumulating the similarity into z.
template <typename Real>
void hessenberg_reduce(std::vector<Cx<Real>>& h, std::vector<Cx<Real>>& z, std::size_t n) {
    auto at = [n](std::vector<Cx<Real>>& m, std::size_t i, std::size_t j) -> Cx<Real>& {
        return m[i * n + j];
    };
    std::vector<Cx<Real>> v;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        Real col_norm_sq = 0;
        for (std::size_t i = k + 1; i < n; ++i) col_norm_sq += std::norm(at(h, i, k));
        const Real col_norm = std::sqrt(col_norm_sq);
        if (col_norm == Real(0)) continue;

        const Cx<Real> x0 = at(h, k + 1, k);
        const Real ax0 = std::abs(x0);
        // alpha chosen so v = x - alpha e1 avoids cancellation
        const Cx<Real> alpha = (ax0 != Real(0)) ? -(x0 / ax0) * col_norm : Cx<Real>(-col_norm);

        v.assign(n - k - 1, Cx<Real>(0));
        v[0] = x0 - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i - k - 1] = at(h, i, k);
        Real vv = 0;
        for (const Cx<Real>& vi : v) vv += std::norm(vi);
        if (vv == Real(0)) continue;
        const Real beta = Real(2) / vv;

        for (std::size_t j = k; j < n; ++j) {
            Cx<Real> dot(0);
            for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(v[i]) * at(h, k + 1 + i, j);
            dot *= beta;
            for (std::size_t i = 0; i < v.size(); ++i) at(h, k + 1 + i, j) -= dot * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            Cx<Real> dot(0);
            for (std::size_t j = 0; j < v.size(); ++j) dot += at(h, i, k + 1 + j) * v[j];
            dot *= beta;
            for (std::size_t j = 0; j < v.size(); ++j) at(h, i, k + 1 + j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            Cx<Real> dot(0);
            for (std::size_t j = 0; j < v.size(); ++j) dot += at(z, i, k + 1 + j) * v[j];
            dot *= beta;
            for (std::size_t j = 0; j < v.size(); ++j) at(z, i, k + 1 + j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) at(h, i, k) = Cx<Real>(0);
        at(h, k + 1, k) = alpha;
    }
}

// Eigenvalue of [[a, b], [c, d]] closest to d (Wilkinson shift).
template <typename Real>
Cx<Real> wilkinson_shift(Cx<Real> a, Cx<Real> b, Cx<Real> c, Cx<Real> d) {
    const Cx<Real> tr2 = Real(0.5) * (a + d);
    const Cx<Real> det = a * d - b * c;
    const Cx<Real> disc = std::sqrt(tr2 * tr2 - det);
    const Cx<Real> lam1 = tr2 + disc;
    const Cx<Real> lam2 = tr2 - disc;
    return (std::abs(lam1 - d) < std::abs(lam2 - d)) ? lam1 : lam2;
}

// Schur form in place: h becomes upper triangular, z accumulates the unitary
// similarity. Hessenberg reduction, then explicit single-shift QR with
// Wilkinson shifts, deflation, and an exceptional shift every tenth stalled
// sweep. Throws convergence_error at the iteration cap.
template <typename Real>
void schur_core(std::vector<Cx<Real>>& h, std::vector<Cx<Real>>& z, std::size_t n,
                const EigenOptions& opt) {
    auto at = [n](std::vector<Cx<Real>>& m, std::size_t i, std::size_t j) -> Cx<Real>& {
        return m[i * n + j];
    };
    if (n <= 1) return;
    hessenberg_reduce(h, z, n);

    const Real eps = std::numeric_limits<Real>::epsilon();
    Real fro = 0;
    for (const Cx<Real>& v : h) fro += std::norm(v);
    const Real norm_floor = eps * std::max(std::sqrt(fro), Real(1));

    std::size_t hi = n - 1;
    std::size_t iters_at_hi = 0;
    std::size_t total_iters = 0;
    const std::size_t total_cap = opt.max_iterations_per_eigenvalue * n;

    std::vector<Real> cs(n);
    std::vector<Cx<Real>> sn(n);

    while (true) {
        std::size_t lo = hi;
        while (lo > 0) {
            const Real sub = std::abs(at(h, lo, lo - 1));
            const Real local = std::abs(at(h, lo - 1, lo - 1)) + std::abs(at(h, lo, lo));
            if (sub <= eps * local || sub <= norm_floor) {
                at(h, lo, lo - 1) = Cx<Real>(0);
                break;
            }
            --lo;
        }
        if (lo == hi) {
            if (hi == 0) break;
            --hi;
            iters_at_hi = 0;
            continue;
        }

        ++iters_at_hi;
        ++total_iters;
        if (iters_at_hi > opt.max_iterations_per_eigenvalue || total_iters > total_cap)
            throw convergence_error("schur_core: QR iteration did not converge at block [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");

        Cx<Real> shift;
        if (iters_at_hi % 10 == 0) {
            // exceptional shift to break symmetric limit cycles
            shift = at(h, hi, hi) + Real(0.75) * std::abs(at(h, hi, hi - 1));
        } else {
            shift = wilkinson_shift(at(h, hi - 1, hi - 1), at(h, hi - 1, hi), at(h, hi, hi - 1),
                                    at(h, hi, hi));
        }

        // explicit single-shift QR step on the active block:
        // H - sigma I = Q R, then H <- R Q + sigma I
        for (std::size_t i = lo; i <= hi; ++i) at(h, i, i) -= shift;

        for (std::size_t i = lo; i < hi; ++i) {
            Real c;
            Cx<Real> s;
            make_givens(at(h, i, i), at(h, i + 1, i), c, s);
            cs[i] = c;
            sn[i] = s;
            for (std::size_t j = i; j < n; ++j) {
                const Cx<Real> t1 = at(h, i, j);
                const Cx<Real> t2 = at(h, i + 1, j);
                at(h, i, j) = c * t1 + s * t2;
                at(h, i + 1, j) = -std::conj(s) * t1 + c * t2;
            }
            at(h, i + 1, i) = Cx<Real>(0);
        }
        for (std::size_t i = lo; i < hi; ++i) {
            const Real c = cs[i];
            const Cx<Real> s = sn[i];
            for (std::size_t r = 0; r <= i + 1; ++r) {
                const Cx<Real> t1 = at(h, r, i);
                const Cx<Real> t2 = at(h, r, i + 1);
                at(h, r, i) = c * t1 + std::conj(s) * t2;
                at(h, r, i + 1) = -s * t1 + c * t2;
            }
            for (std::size_t r = 0; r < n; ++r) {
                const Cx<Real> t1 = at(z, r, i);
                const Cx<Real> t2 = at(z, r, i + 1);
                at(z, r, i) = c * t1 + std::conj(s) * t2;
                at(z, r, i + 1) = -s * t1 + c * t2;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) at(h, i, i) += shift;
    }

    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) at(h, i, j) = Cx<Real>(0);
}

// Right eigenvector for t(k,k) by guarded back-substitution on the triangular
// factor, mapped through z; writes the unit vector into out.
template <typename Real>
void eigenvector_from_triangular(const std::vector<Cx<Real>>& t, const std::vector<Cx<Real>>& z,
                                 std::size_t n, std::size_t k, Real tiny,
                                 std::vector<Cx<Real>>& y, std::vector<Cx<Real>>& out) {
    auto at = [n](const std::vector<Cx<Real>>& m, std::size_t i, std::size_t j) -> const Cx<Real>& {
        return m[i * n + j];
    };
    const Cx<Real> lambda = at(t, k, k);
    std::fill(y.begin(), y.end(), Cx<Real>(0));
    y[k] = Cx<Real>(1);
    for (std::size_t ii = k; ii-- > 0;) {
        Cx<Real> acc(0);
        for (std::size_t j = ii + 1; j <= k; ++j) acc += at(t, ii, j) * y[j];
        Cx<Real> diag = at(t, ii, ii) - lambda;
        if (std::abs(diag) < tiny) diag = Cx<Real>(tiny);
        y[ii] = -acc / diag;
    }
    Real norm_sq = 0;
    for (std::size_t i = 0; i <= k; ++i) norm_sq += std::norm(y[i]);
    const Real inv_norm = Real(1) / std::sqrt(norm_sq);
    for (std::size_t r = 0; r < n; ++r) {
        Cx<Real> acc(0);
        for (std::size_t i = 0; i <= k; ++i) acc += at(z, r, i) * y[i];
        out[r] = acc * inv_norm;
    }
}

template <typename Real>
std::vector<Cx<Real>> flatten(const DenseMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Cx<Real>> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = Cx<Real>(static_cast<Real>(a(i, j).real()),
                                      static_cast<Real>(a(i, j).imag()));
    return out;
}

template <typename Real>
std::vector<Cx<Real>> flat_identity(std::size_t n) {
    std::vector<Cx<Real>> out(n * n, Cx<Real>(0));
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = Cx<Real>(1);
    return out;
}

}  // namespace detail

/// Complex Schur decomposition A = Z T Z* in working (double) precision.
inline SchurDecomposition schur_decompose(const DenseMatrix& a, const EigenOptions& opt = {}) {
    a.require_square("schur_decompose");
    const std::size_t n = a.rows();
    if (n > opt.dimension_cap)
        throw std::invalid_argument("schur_decompose: dimension " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(opt.dimension_cap));

    std::vector<std::complex<double>> h = detail::flatten<double>(a);
    std::vector<std::complex<double>> z = detail::flat_identity<double>(n);
    detail::schur_core<double>(h, z, n, opt);

    SchurDecomposition s{DenseMatrix(n, n), DenseMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s.t(i, j) = h[i * n + j];
            s.z(i, j) = z[i * n + j];
        }
    }
    return s;
}

/// Right eigenvectors from a Schur decomposition by guarded back-substitution.
/// Column k corresponds to T(k,k). Repeated or defective eigenvalues still
/// yield unit vectors with small residuals; the columns are not guaranteed
/// independent in that case.
inline DenseMatrix eigenvectors_from_schur(const SchurDecomposition& s) {
    const std::size_t n = s.t.rows();
    const double tiny = std::numeric_limits<double>::epsilon() * std::max(s.t.frobenius_norm(), 1.0);
    const std::vector<std::complex<double>> t = detail::flatten<double>(s.t);
    const std::vector<std::complex<double>> z = detail::flatten<double>(s.z);
    std::vector<std::complex<double>> y(n), col(n);
    DenseMatrix vecs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        detail::eigenvector_from_triangular<double>(t, z, n, k, tiny, y, col);
        for (std::size_t r = 0; r < n; ++r) vecs(r, k) = col[r];
    }
    return vecs;
}

/// All eigenvalues of a square complex matrix, residual-certified: for each
/// returned lambda there is a unit vector v with ||Av - lambda v|| <=
/// residual_tol * ||A||_F, or a convergence_error is thrown.
///
/// The pipeline (Schur form, eigenvectors, residuals) runs in long double so
/// that even defective eigenvalues — where any backward-stable solver loses
/// half the significand — come back with error far below the library's 1e-8
/// spectrum tolerance. Results are returned in double, sorted by descending
/// real then imaginary part.
inline std::vector<Complex> eigenvalues_certified(const DenseMatrix& a, const EigenOptions& opt = {}) {
    a.require_square("eigenvalues_certified");
    const std::size_t n = a.rows();
    if (n > opt.dimension_cap)
        throw std::invalid_argument("eigenvalues_certified: dimension " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(opt.dimension_cap));
    using LD = long double;
    using CLD = std::complex<long double>;

    const std::vector<CLD> a_flat = detail::flatten<LD>(a);
    std::vector<CLD> t = a_flat;
    std::vector<CLD> z = detail::flat_identity<LD>(n);
    detail::schur_core<LD>(t, z, n, opt);

    LD fro = 0;
    for (const CLD& v : a_flat) fro += std::norm(v);
    const LD scale = std::max(std::sqrt(fro), LD(1));
    const LD tiny = std::numeric_limits<LD>::epsilon() * scale;

    std::vector<CLD> y(n), vec(n);
    std::vector<Complex> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        detail::eigenvector_from_triangular<LD>(t, z, n, k, tiny, y, vec);
        const CLD lambda = t[k * n + k];
        LD resid_sq = 0;
        for (std::size_t i = 0; i < n; ++i) {
            CLD acc = -lambda * vec[i];
            for (std::size_t j = 0; j < n; ++j) acc += a_flat[i * n + j] * vec[j];
            resid_sq += std::norm(acc);
        }
        if (std::sqrt(resid_sq) > static_cast<LD>(opt.residual_tol) * scale)
            throw convergence_error("eigenvalues_certified: residual " +
                                    std::to_string(static_cast<double>(std::sqrt(resid_sq))) +
                                    " exceeds tolerance for eigenvalue index " + std::to_string(k));
        values[k] = Complex(static_cast<double>(lambda.real()), static_cast<double>(lambda.imag()));
    }

    std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y2) {
        if (x.real() != y2.real()) return x.real() > y2.real();
        return x.imag() > y2.imag();
    });
    return values;
}

/// Cyclic Jacobi eigensolver for real symmetric input stored as a complex
/// matrix. Rejects matrices that are not (numerically) real symmetric.
/// Returns eigenvalues sorted descending.
inline std::vector<double> symmetric_eigenvalues(const DenseMatrix& a) {
    a.require_square("symmetric_eigenvalues");
    const std::size_t n = a.rows();
    const double scale = std::max(a.max_abs(), 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(a(i, j).imag()) > 1e-12 * scale)
                throw std::invalid_argument("symmetric_eigenvalues: matrix has imaginary entries");
            if (std::abs(a(i, j) - a(j, i)) > 1e-12 * scale)
                throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric");
        }
    }

    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = a(i, j).real();

    const double stop = 1e-15 * scale * static_cast<double>(n);
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::abs(w[p * n + q]);
        if (off <= stop) break;
        if (sweep == 63)
            throw convergence_error("symmetric_eigenvalues: Jacobi sweeps did not converge");

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = w[p * n + q];
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (w[q * n + q] - w[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double wkp = w[k * n + p];
                    const double wkq = w[k * n + q];
                    w[k * n + p] = c * wkp - s * wkq;
                    w[k * n + q] = s * wkp + c * wkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double wpk = w[p * n + k];
                    const double wqk = w[q * n + k];
                    w[p * n + k] = c * wpk - s * wqk;
                    w[q * n + k] = s * wpk + c * wqk;
                }
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = w[i * n + i];
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

}  // namespace crws
