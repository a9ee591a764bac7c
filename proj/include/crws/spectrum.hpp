#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "crws/dense_matrix.hpp"
#include "crws/eigensolver.hpp"

namespace crws {

enum class Provenance { closed_form, numeric_oracle };

inline const char* to_string(Provenance p) {
    return p == Provenance::closed_form ? "closed_form" : "numeric_oracle";
}

/// Multiset of complex eigenvalues with a provenance tag and a free-text
/// source label ("crw spectrum (regular), K4", ...).
struct Spectrum {
    std::vector<Complex> values;
    Provenance provenance = Provenance::numeric_oracle;
    std::string source;

    std::size_t cardinality() const { return values.size(); }
};

/// Numeric-oracle spectrum of a square matrix (residual-certified eigensolve).
inline Spectrum oracle_spectrum(const DenseMatrix& m, std::string source, const EigenOptions& opt = {}) {
    return Spectrum{eigenvalues_certified(m, opt), Provenance::numeric_oracle, std::move(source)};
}

/// Result of a tolerant multiset comparison: the pairing found, the largest
/// paired distance, and the verdict.
struct MatchReport {
    std::vector<std::pair<Complex, Complex>> pairs;
    double max_distance = 0.0;
    bool pass = false;
    std::string note;
};

/// Pair two eigenvalue multisets and test max pair distance <= tol.
/// Deterministic pairing: both sides are sorted lexicographically by
/// (real, imag) and paired index-wise, then refined by pairwise partner swaps
/// whenever a swap lowers the local max distance. Optimal assignment is
/// unnecessary at this scale; the refinement repairs sort-order flips between
/// nearly equal values.
inline MatchReport multiset_match(const Spectrum& a, const Spectrum& b, double tol) {
    MatchReport report;
    if (a.values.size() != b.values.size()) {
        report.pass = false;
        report.max_distance = std::numeric_limits<double>::infinity();
        report.note = "cardinality mismatch: " + std::to_string(a.values.size()) + " vs " +
                      std::to_string(b.values.size());
        return report;
    }

    auto lex_less = [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::vector<Complex> lhs = a.values;
    std::vector<Complex> rhs = b.values;
    std::sort(lhs.begin(), lhs.end(), lex_less);
    std::sort(rhs.begin(), rhs.end(), lex_less);

    const std::size_t n = lhs.size();
    bool improved = true;
    for (int pass = 0; pass < 64 && improved; ++pass) {
        improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double keep = std::max(std::abs(lhs[i] - rhs[i]), std::abs(lhs[j] - rhs[j]));
                const double swap = std::max(std::abs(lhs[i] - rhs[j]), std::abs(lhs[j] - rhs[i]));
                if (swap < keep) {
                    std::swap(rhs[i], rhs[j]);
                    improved = true;
                }
            }
        }
    }

    report.pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.pairs.emplace_back(lhs[i], rhs[i]);
        report.max_distance = std::max(report.max_distance, std::abs(lhs[i] - rhs[i]));
    }
    report.pass = report.max_distance <= tol;
    return report;
}

}  // namespace crws
