#pragma once

#include <complex>
#include <Eigen/Dense>

namespace qnk {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// e(w) = exp(2*pi*i*w), the exponential convention used throughout.
inline cplx e2pi(cplx w) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::exp(cplx(0.0, two_pi) * w);
}

/// Kronecker product with the first factor varying slowest:
/// (A (x) B)(i1*rB+i2, j1*cB+j2) = A(i1,j1) * B(i2,j2).
Mat kron(const Mat& a, const Mat& b);

/// The swap x (x) y -> y (x) x on C^n (x) C^n.
Mat swap_op(int n);

/// Number of singular values above rel_cutoff * sigma_max.
int numerical_rank(const Mat& a, double rel_cutoff = 1e-9);

/// Orthonormal basis (columns) of the column space of `a`, rank detected with
/// the same relative cutoff.  If `rank_out` is non-null the rank is stored.
Mat orthonormal_image(const Mat& a, double rel_cutoff = 1e-9, int* rank_out = nullptr);

/// Largest principal angle between the column spaces of A and B, both with
/// orthonormal columns.  Small angles are computed from the sine
/// ||(I - B B^H) A|| rather than from arccos of a singular value, which
/// bottoms out near sqrt(machine eps).
double largest_principal_angle(const Mat& a, const Mat& b);

} // namespace qnk
