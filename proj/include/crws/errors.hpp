#pragma once

#include <stdexcept>

namespace crws {

/// A sample point landed within the guard distance of a pole of a closed-form
/// expression (e.g. a 1 - u^2 mu(e) mu(e^-1) factor). The message names the
/// offending edge where one exists.
class pole_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative eigensolver exceeded its iteration cap or failed its residual
/// certificate. Never silently truncated: callers either get a full certified
/// spectrum or this exception.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace crws
