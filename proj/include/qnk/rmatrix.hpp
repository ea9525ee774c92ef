#pragma once

#include <cstddef>
#include <vector>

#include "qnk/heisenberg.hpp"
#include "qnk/linalg.hpp"
#include "qnk/sl2.hpp"
#include "qnk/theta.hpp"

namespace qnk {

/// Parameters of one operator family: coprime n > k >= 1 with k k' = 1 mod n,
/// a generic eta, and tau in the upper half plane.
struct RParams {
    int n, k, k_prime;
    cplx eta, tau;
    ThetaParams theta;

    RParams(int n, int k, cplx eta, cplx tau, ThetaParams tp = {});

    RParams with_eta_tau(cplx eta2, cplx tau2) const {
        return RParams(n, k, eta2, tau2, theta);
    }
};

/// The monomial operator h^a g^b on C^n (g diagonal w^i, h the down-shift
/// x_i -> x_{i-1}) and its inverse, both written entrywise.
Mat monomial_op(long long a, long long b, int n);
Mat monomial_op_inv(long long a, long long b, int n);

/// w_{(u,v)}(-n z, eta | tau) for all (u,v), flat index u*n + v.  Each entry
/// is independent, so the parallel path reproduces the serial one exactly.
std::vector<cplx> w_values(const RParams& par, cplx z, bool parallel = true);

/// T_k(z) = sum_{(u,v)} w_{(u,v)}(-n z) I_{-k'u, v} (x) I_{-k'u, v}^{-1} on
/// C^n (x) C^n, first tensor leg varying slowest.
Mat t_operator(const RParams& par, cplx z, bool parallel = true);

/// R_{n,k}(z) = (1/n) e(-n(n+1)z/2) P T_k(z).
Mat r_matrix(const RParams& par, cplx z, bool parallel = true);

/// Relative Frobenius residual of
/// R(u)_12 R(u+v)_23 R(v)_12 = R(v)_23 R(u+v)_12 R(u)_23 on C^n tensor cubed.
double qybe_residual(const RParams& par, cplx u, cplx v, bool parallel = true);

struct ProportionalityResult {
    cplx scalar;              // median ratio
    double max_deviation;     // max |ratio - scalar| / |scalar| over compared entries
    std::ptrdiff_t compared;  // entries above the cutoff
    std::ptrdiff_t total;     // all matrix entries
};

/// Entrywise scalar-proportionality test A = lambda B restricted to entries
/// with |B| > 1e-10 max|B|;  DegenerateOverlap when fewer than 10% of the
/// nonzero entries survive the cutoff.
ProportionalityResult scalar_proportionality(const Mat& a, const Mat& b);

/// Matrix form of the equivariance law: compares R at M(z,eta|tau) with
/// psi(M')^{(x)2} R(z,eta|tau) psi(M')^{-(x)2}, psi solved in the
/// rmatrix_action convention for the dual matrix of M.
ProportionalityResult equivariance_check(const RParams& par, const Sl2& m, cplx z);

/// Genericity filter for eta: keeps a margin from (1/n)Lambda_tau, demands
/// every w-denominator clear 1e-10, and (optionally, for Hilbert-series
/// checks) stays 1e-3 away from (1/N)Lambda_tau for N <= 12.
bool eta_is_generic(cplx eta, cplx tau, int n, bool avoid_low_torsion = false,
                    const ThetaParams& p = {});

} // namespace qnk
