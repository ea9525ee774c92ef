#include "qnk/rmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include "qnk/parallel.hpp"

namespace qnk {
namespace {

int imod(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

RParams::RParams(int n_, int k_, cplx eta_, cplx tau_, ThetaParams tp)
    : n(n_), k(k_), k_prime(0), eta(eta_), tau(tau_), theta(tp) {
    if (!(n > k && k >= 1))
        throw Error("RParams: need n > k >= 1");
    if (std::gcd(n, k) != 1)
        throw Error("RParams: n and k must be coprime");
    if (!(tau.imag() > 0.0))
        throw Error("RParams: tau must lie in the upper half plane");
    k_prime = static_cast<int>(mod_inverse(k, n));
}

Mat monomial_op(long long a, long long b, int n) {
    Mat out = Mat::Zero(n, n);
    const int ar = imod(a, n), br = imod(b, n);
    for (int q = 0; q < n; ++q)
        out(imod(q - ar, n), q) = e2pi(cplx(static_cast<double>(br) * q / n, 0.0));
    return out;
}

Mat monomial_op_inv(long long a, long long b, int n) {
    Mat out = Mat::Zero(n, n);
    const int ar = imod(a, n), br = imod(b, n);
    for (int q = 0; q < n; ++q)
        out(imod(q + ar, n), q) = e2pi(cplx(-static_cast<double>(br) * (q + ar) / n, 0.0));
    return out;
}

std::vector<cplx> w_values(const RParams& par, cplx z, bool parallel) {
    const int n = par.n;
    std::vector<cplx> w(static_cast<std::size_t>(n) * n);
    const cplx arg = -static_cast<double>(n) * z;
    std::exception_ptr err;
    std::mutex err_mutex;
    parallel_for(static_cast<std::int64_t>(w.size()), [&](std::int64_t idx) {
        try {
            const int u = static_cast<int>(idx) / n, v = static_cast<int>(idx) % n;
            w[idx] = w_uv(WIndex{u, v}, n, arg, par.eta, par.tau, par.theta);
        } catch (...) {
            const std::scoped_lock lock(err_mutex);
            if (!err) err = std::current_exception();
        }
    }, parallel);
    if (err) std::rethrow_exception(err);
    return w;
}

Mat t_operator(const RParams& par, cplx z, bool parallel) {
    const int n = par.n;
    const std::vector<cplx> w = w_values(par, z, parallel);
    // per-term data: shift a = -k'u mod n, twist b = v
    std::vector<cplx> omega(n);
    for (int j = 0; j < n; ++j) omega[j] = e2pi(cplx(static_cast<double>(j) / n, 0.0));
    Mat t = Mat::Zero(n * n, n * n);
    // accumulate one output column at a time, in a fixed term order, so the
    // parallel result matches the serial one bit for bit
    parallel_for(static_cast<std::int64_t>(n) * n, [&](std::int64_t col) {
        const int q1 = static_cast<int>(col) / n, q2 = static_cast<int>(col) % n;
        for (int u = 0; u < n; ++u) {
            const int a = imod(-static_cast<long long>(par.k_prime) * u, n);
            for (int v = 0; v < n; ++v) {
                // I_{a,v} (x) I_{a,v}^{-1} has one entry per column:
                // row ((q1-a), (q2+a));  value w^{v q1} * w^{-v (q2+a)}
                const int r1 = imod(q1 - a, n), r2 = imod(q2 + a, n);
                const cplx phase = omega[imod(static_cast<long long>(v) * q1 -
                                              static_cast<long long>(v) * (q2 + a), n)];
                t(r1 * n + r2, col) += w[static_cast<std::size_t>(u) * n + v] * phase;
            }
        }
    }, parallel);
    return t;
}

Mat r_matrix(const RParams& par, cplx z, bool parallel) {
    const int n = par.n;
    const Mat t = t_operator(par, z, parallel);
    const cplx pref = e2pi(-0.5 * n * (n + 1.0) * z) / static_cast<double>(n);
    Mat out(n * n, n * n);
    // P T swaps the row pair (i,j) -> (j,i)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.row(i * n + j) = pref * t.row(j * n + i);
    return out;
}

double qybe_residual(const RParams& par, cplx u, cplx v, bool parallel) {
    const int n = par.n;
    const Mat ru = r_matrix(par, u, parallel);
    const Mat ruv = r_matrix(par, u + v, parallel);
    const Mat rv = r_matrix(par, v, parallel);
    const Mat id = Mat::Identity(n, n);
    auto leg12 = [&](const Mat& r) { return kron(r, id); };
    auto leg23 = [&](const Mat& r) { return kron(id, r); };
    const Mat lhs = leg12(ru) * leg23(ruv) * leg12(rv);
    const Mat rhs = leg23(rv) * leg12(ruv) * leg23(ru);
    return (lhs - rhs).norm() / lhs.norm();
}

ProportionalityResult scalar_proportionality(const Mat& a, const Mat& b) {
    const double peak = b.cwiseAbs().maxCoeff();
    const double cutoff = 1e-10 * peak;
    std::vector<cplx> ratios;
    ratios.reserve(static_cast<std::size_t>(b.size()));
    std::ptrdiff_t nonzero = 0;
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
        for (Eigen::Index i = 0; i < b.rows(); ++i) {
            if (std::abs(b(i, j)) > 0.0) ++nonzero;
            if (std::abs(b(i, j)) > cutoff)
                ratios.push_back(a(i, j) / b(i, j));
        }
    }
    if (ratios.size() * 10 < static_cast<std::size_t>(nonzero))
        throw DegenerateOverlap("scalar_proportionality: fewer than 10% of nonzero entries "
                                "exceed the cutoff");
    auto median_of = [](std::vector<double> xs) {
        std::nth_element(xs.begin(), xs.begin() + xs.size() / 2, xs.end());
        return xs[xs.size() / 2];
    };
    std::vector<double> re, im;
    re.reserve(ratios.size());
    im.reserve(ratios.size());
    for (const cplx& r : ratios) {
        re.push_back(r.real());
        im.push_back(r.imag());
    }
    const cplx med(median_of(re), median_of(im));
    double dev = 0.0;
    for (const cplx& r : ratios)
        dev = std::max(dev, std::abs(r - med));
    return ProportionalityResult{med, dev / std::abs(med), static_cast<std::ptrdiff_t>(ratios.size()),
                                 static_cast<std::ptrdiff_t>(b.size())};
}

ProportionalityResult equivariance_check(const RParams& par, const Sl2& m, cplx z) {
    const ModularTriple moved = act(m, ModularTriple{z, par.eta, par.tau});
    const Mat a = r_matrix(par.with_eta_tau(moved.eta, moved.tau), moved.z);
    const Sl2 dual = lift_sl2(dual_mod_n(m, par.n, par.k));
    const Intertwiner iw = intertwiner(dual, heis_rep(par.n).rmatrix_action);
    const Mat pp = kron(iw.psi, iw.psi);
    const Mat b = pp * r_matrix(par, z) * pp.inverse();
    return scalar_proportionality(a, b);
}

bool eta_is_generic(cplx eta, cplx tau, int n, bool avoid_low_torsion, const ThetaParams& p) {
    // margin from (1/n)Lambda_tau, measured against the cell scale
    const double it = tau.imag();
    auto lattice_dist = [&](int denom) {
        const double y = eta.imag() / it * denom;
        const double x = (eta.real() - eta.imag() / it * tau.real()) * denom;
        const double fx = x - std::round(x), fy = y - std::round(y);
        return std::abs(cplx(fx + fy * tau.real(), fy * it)) / denom;
    };
    if (lattice_dist(n) < 0.02 * std::sqrt(it) / n) return false;
    if (avoid_low_torsion)
        for (int den = 1; den <= 12; ++den)
            if (lattice_dist(den) < 1e-3) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (std::abs(w_denominator(WIndex{u, v}, n, eta, tau, p)) < 1e-10) return false;
    return true;
}

} // namespace qnk
