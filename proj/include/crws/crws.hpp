#pragma once

// Umbrella header: arc-level matrices of finite graphs (Grover, correlated
// random walks, weighted zetas), their determinant identities, closed-form
// spectra, and the verification harness that checks everything against a
// dense eigenvalue oracle.

#include "crws/crw.hpp"
#include "crws/crw2.hpp"
#include "crws/dense_matrix.hpp"
#include "crws/eigensolver.hpp"
#include "crws/errors.hpp"
#include "crws/graph.hpp"
#include "crws/graph_matrices.hpp"
#include "crws/grover.hpp"
#include "crws/identity.hpp"
#include "crws/linalg.hpp"
#include "crws/polynomial.hpp"
#include "crws/report.hpp"
#include "crws/rng.hpp"
#include "crws/sampling.hpp"
#include "crws/spectrum.hpp"
#include "crws/verify.hpp"
#include "crws/zeta.hpp"
