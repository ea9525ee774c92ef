#include "qnk/reference.hpp"

namespace qnk::ref {
namespace {

int imod(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

cplx vartheta(cplx z, cplx tau, int terms) {
    cplx acc = 1.0;
    for (int m = terms; m >= 1; --m) {
        const double md = m;
        const cplx quad = 0.5 * md * md * tau;
        acc += e2pi(md * z + quad) + e2pi(-md * z + quad);
    }
    return acc;
}

cplx theta_basis(int alpha, int n, cplx z, cplx tau, const ThetaParams& p) {
    const cplx u = cplx(static_cast<double>(imod(alpha, n)) / n, 0.0);
    const cplx v = -0.5 * (static_cast<double>(n) * tau + 1.0);
    return theta_uv_c(u, v, static_cast<double>(n) * z, static_cast<double>(n) * tau, p);
}

Mat t_operator(const RParams& par, cplx z) {
    const int n = par.n;
    Mat t = Mat::Zero(n * n, n * n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const cplx w = w_uv(WIndex{u, v}, n, -static_cast<double>(n) * z,
                                par.eta, par.tau, par.theta);
            const Mat op = monomial_op(-static_cast<long long>(par.k_prime) * u, v, n);
            t += w * kron(op, op.inverse());
        }
    }
    return t;
}

Mat r_matrix_direct(const RParams& par, cplx z) {
    const int n = par.n, k = par.k;
    const cplx eta = par.eta;
    auto th = [&](long long alpha, cplx x) { return theta_basis(imod(alpha, n), n, x, par.tau, par.theta); };
    cplx pref = 1.0;
    for (int a = 0; a < n; ++a) pref *= th(a, -z);
    for (int a = 1; a < n; ++a) pref /= th(a, cplx(0.0));
    Mat out = Mat::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int col = i * n + j;
            for (int r = 0; r < n; ++r) {
                const cplx num = th(j - i + static_cast<long long>(r) * (k - 1), -z + eta);
                const cplx den = th(j - i - r, -z) * th(static_cast<long long>(k) * r, eta);
                const int row = imod(j - r, n) * n + imod(i + r, n);
                out(row, col) += pref * num / den;
            }
        }
    }
    return out;
}

} // namespace qnk::ref
