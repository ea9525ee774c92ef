#pragma once

#include <complex>

#include "qnk/errors.hpp"
#include "qnk/linalg.hpp"
#include "qnk/sl2.hpp"

namespace qnk {

/// Truncation control for the theta series.
struct ThetaParams {
    double trunc_tol = 1e-14;
    int max_terms = 512;
};

/// vartheta(z | tau) = sum_m e(m z + m^2 tau / 2).
///
/// The window |m| <= N is chosen as the smallest N past the term-magnitude
/// peak with exp(-pi Im(tau) N^2 + 2 pi N |Im z|) < trunc_tol, capped at
/// max_terms.  Inputs with Im(tau) < 0.05 are rejected outright; a modular
/// transformation can always move tau to moderate height first.
cplx vartheta(cplx z, cplx tau, const ThetaParams& p = {});

/// Real characteristics (u, v); indices coming from Z_n x Z_n are reduced
/// mod n before the single division by n, so no drift accumulates.
struct Characteristic {
    double u = 0.0, v = 0.0;
};

/// theta_{u,v}(z | tau) = e(u(z+v) + u^2 tau/2) vartheta(z + u tau + v | tau).
cplx theta_uv(const Characteristic& ch, cplx z, cplx tau, const ThetaParams& p = {});

/// Same formula for arbitrary complex characteristics (needed by the basis of
/// the space {f(z+1) = f(z), f(z+tau) = -e(-nz) f(z)}).
cplx theta_uv_c(cplx u, cplx v, cplx z, cplx tau, const ThetaParams& p = {});

/// Index pair for w_{(u,v)}, stored reduced mod n.
struct WIndex {
    int u = 0, v = 0;
};

WIndex reduce_windex(long long u, long long v, int n);

/// Denominator theta_{u/n,v/n}(eta + (tau+1)/2 | tau) of w_{(u,v)}; exposed so
/// callers can test eta for genericity before building operators.
cplx w_denominator(const WIndex& idx, int n, cplx eta, cplx tau, const ThetaParams& p = {});

/// w_{(u,v)}(z) = theta_{u/n,v/n}(z + zeta | tau) / theta_{u/n,v/n}(zeta | tau)
/// with zeta = eta + (tau+1)/2.  Throws SingularEta when the denominator is
/// numerically zero (eta in the excluded set).
cplx w_uv(const WIndex& idx, int n, cplx z, cplx eta, cplx tau, const ThetaParams& p = {});

/// Relative residual of vartheta(z/tau | -1/tau) = sqrt(-i tau) e(z^2/2tau) vartheta(z|tau),
/// square root taken with non-negative real part.
double jacobi_residual(cplx z, cplx tau, const ThetaParams& p = {});

/// The unimodular ratio vartheta(z/(c tau+d) | M.tau) /
/// [sqrt(c tau+d) e(c z^2 / 2(c tau+d)) vartheta(z|tau)].  Requires ab and cd
/// even (ParityViolation otherwise); callers verify it is an 8th root of
/// unity independent of z.
cplx modular_root(const Sl2& m, cplx z, cplx tau, const ThetaParams& p = {});

/// The function f_M(z) in the transformation law
///   w_{(u,v)M}(z, eta | tau) = f_M(z) w_{(u,v)}(M (z, eta | tau)),
/// built by decomposing M into the inversion/translation pair and composing
///   f_{MN}(p) = f_M(N p) f_N(p),
/// with f_T = 1 and f_S(z) = e(-z^2/2tau + (1/2tau - 1/2 - eta/tau) z).
cplx w_cocycle(const Sl2& m, cplx z, cplx eta, cplx tau);

/// Same value, but checked a posteriori against the measured ratio across all
/// n^2 indices (the check is authoritative; CocycleMismatch on disagreement).
cplx w_cocycle_verified(const Sl2& m, cplx z, cplx eta, cplx tau, int n,
                        double tol = 1e-9, const ThetaParams& p = {});

} // namespace qnk
