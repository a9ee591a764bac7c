#pragma once

#include <algorithm>
#include <cmath>

#include "crws/dense_matrix.hpp"

namespace crws {

/// Both sides of a determinant identity evaluated at one sample point.
struct IdentitySides {
    Complex lhs;
    Complex rhs;
};

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-30).
inline double relative_deviation(Complex lhs, Complex rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    return std::abs(lhs - rhs) / scale;
}

inline double relative_deviation(const IdentitySides& s) { return relative_deviation(s.lhs, s.rhs); }

}  // namespace crws
