#pragma once

#include "qnk/rmatrix.hpp"

namespace qnk::ref {

/// Fixed-window theta series, no truncation logic; the high-precision oracle
/// the adaptive evaluator is tested against.
cplx vartheta(cplx z, cplx tau, int terms = 2000);

/// Basis element of the space {f(z+1) = f(z), f(z+tau) = -e(-nz) f(z)},
/// realised as theta_{alpha/n, -(n tau+1)/2}(n z | n tau); exactly n-periodic
/// in alpha.
cplx theta_basis(int alpha, int n, cplx z, cplx tau, const ThetaParams& p = {});

/// Straightforward serial assembly of T_k from explicitly built matrices and
/// a generic Kronecker product; kept as the reference the optimized
/// column-wise kernel is compared against.
Mat t_operator(const RParams& par, cplx z);

/// The operator written directly in components against the theta basis:
///   R(x_i (x) x_j) = [prod_a th_a(-z) / prod_{a>=1} th_a(0)] *
///     sum_r th_{j-i+r(k-1)}(-z+eta) / (th_{j-i-r}(-z) th_{kr}(eta)) x_{j-r} (x) x_{i+r}.
/// An independent route to the same operator as r_matrix.
Mat r_matrix_direct(const RParams& par, cplx z);

} // namespace qnk::ref
