#include "qnk/theta.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qnk {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kMinImTau = 0.05;

void require_tau(cplx tau) {
    if (!(tau.imag() > 0.0))
        throw Error("vartheta: tau must lie in the upper half plane");
    if (tau.imag() < kMinImTau)
        throw Error("vartheta: Im tau below " + std::to_string(kMinImTau) +
                    "; transform tau to moderate height first");
}

} // namespace

cplx vartheta(cplx z, cplx tau, const ThetaParams& p) {
    require_tau(tau);
    if (!(p.trunc_tol > 0.0) || p.max_terms < 8)
        throw Error("vartheta: need trunc_tol > 0 and max_terms >= 8");
    const double it = tau.imag();
    const double bz = std::abs(z.imag());
    // first window edge past the term-magnitude peak whose bound clears the tolerance
    int n_cut = -1;
    for (int m = 1; m <= p.max_terms; ++m) {
        const double log_bound = -kPi * it * static_cast<double>(m) * m + 2.0 * kPi * m * bz;
        if (static_cast<double>(m) * it >= bz && log_bound < std::log(p.trunc_tol)) {
            n_cut = m;
            break;
        }
    }
    if (n_cut < 0)
        throw TruncationOverflow("vartheta: term cap " + std::to_string(p.max_terms) +
                                 " reached before the tail bound was met");
    cplx acc = 0.0;
    for (int m = n_cut; m >= 1; --m) {  // small terms first
        const double md = static_cast<double>(m);
        const cplx quad = 0.5 * md * md * tau;
        acc += e2pi(md * z + quad) + e2pi(-md * z + quad);
    }
    return acc + 1.0;
}

cplx theta_uv(const Characteristic& ch, cplx z, cplx tau, const ThetaParams& p) {
    return theta_uv_c(ch.u, ch.v, z, tau, p);
}

cplx theta_uv_c(cplx u, cplx v, cplx z, cplx tau, const ThetaParams& p) {
    return e2pi(u * (z + v) + 0.5 * u * u * tau) * vartheta(z + u * tau + v, tau, p);
}

WIndex reduce_windex(long long u, long long v, int n) {
    auto red = [n](long long x) {
        long long r = x % n;
        return static_cast<int>(r < 0 ? r + n : r);
    };
    return {red(u), red(v)};
}

cplx w_denominator(const WIndex& idx, int n, cplx eta, cplx tau, const ThetaParams& p) {
    const cplx zeta = eta + 0.5 * (tau + 1.0);
    const Characteristic ch{static_cast<double>(idx.u) / n, static_cast<double>(idx.v) / n};
    return theta_uv(ch, zeta, tau, p);
}

cplx w_uv(const WIndex& idx, int n, cplx z, cplx eta, cplx tau, const ThetaParams& p) {
    const cplx zeta = eta + 0.5 * (tau + 1.0);
    const Characteristic ch{static_cast<double>(idx.u) / n, static_cast<double>(idx.v) / n};
    const cplx den = theta_uv(ch, zeta, tau, p);
    // compare against the value half a period away; the zeros are simple and
    // isolated, so both cannot be small at once
    const double scale = 1.0 + std::abs(theta_uv(ch, zeta + 0.5, tau, p));
    if (std::abs(den) < 1e-13 * scale)
        throw SingularEta("w_uv: denominator vanishes at index (" + std::to_string(idx.u) +
                          "," + std::to_string(idx.v) + ")");
    return theta_uv(ch, z + zeta, tau, p) / den;
}

double jacobi_residual(cplx z, cplx tau, const ThetaParams& p) {
    const cplx lhs = vartheta(z / tau, -1.0 / tau, p);
    const cplx root = std::sqrt(cplx(0.0, -1.0) * tau);  // principal: Re >= 0
    const cplx rhs = root * e2pi(z * z / (2.0 * tau)) * vartheta(z, tau, p);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs));
}

cplx modular_root(const Sl2& m, cplx z, cplx tau, const ThetaParams& p) {
    const long long ab = m.a * m.b, cd = m.c * m.d;
    if ((ab % 2) != 0 || (cd % 2) != 0)
        throw ParityViolation("modular_root: requires ab and cd even");
    const cplx den = static_cast<double>(m.c) * tau + static_cast<double>(m.d);
    const cplx lhs = vartheta(z / den, act_tau(m, tau), p);
    const cplx rhs = std::sqrt(den) * e2pi(static_cast<double>(m.c) * z * z / (2.0 * den)) *
                     vartheta(z, tau, p);
    return lhs / rhs;
}

namespace {

// f for the inversion S = [[0,-1],[1,0]]; f for the translation T is 1
cplx f_inversion(cplx z, cplx eta, cplx tau) {
    return e2pi(-z * z / (2.0 * tau) + (0.5 / tau - 0.5 - eta / tau) * z);
}

} // namespace

cplx w_cocycle(const Sl2& m, cplx z, cplx eta, cplx tau) {
    const Sl2 s{0, -1, 1, 0};
    const Sl2 s_inv = s.inverse();
    const auto word = decompose_st(m);
    // f_{GH}(p) = f_G(H p) f_H(p): walk the word right to left, tracking the
    // partially transformed point
    ModularTriple q{z, eta, tau};
    cplx f = 1.0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const auto [g, e] = *it;
        if (g == STGen::T) {
            q = act(Sl2{1, e, 0, 1}, q);
            continue;
        }
        const long long steps = e >= 0 ? e : -e;
        for (long long i = 0; i < steps; ++i) {
            if (e > 0) {
                f *= f_inversion(q.z, q.eta, q.tau);
                q = act(s, q);
            } else {
                q = act(s_inv, q);
                f /= f_inversion(q.z, q.eta, q.tau);
            }
        }
    }
    return f;
}

cplx w_cocycle_verified(const Sl2& m, cplx z, cplx eta, cplx tau, int n,
                        double tol, const ThetaParams& p) {
    const cplx f = w_cocycle(m, z, eta, tau);
    const ModularTriple q = act(m, ModularTriple{z, eta, tau});
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const WIndex moved = reduce_windex(u * m.a + v * m.c, u * m.b + v * m.d, n);
            const cplx lhs = w_uv(moved, n, z, eta, tau, p);
            const cplx rhs = f * w_uv(WIndex{u, v}, n, q.z, q.eta, q.tau, p);
            if (std::abs(lhs - rhs) > tol * (std::abs(lhs) + std::abs(rhs)))
                throw CocycleMismatch("w_cocycle_verified: composed cocycle disagrees with the "
                                      "measured ratio at index (" + std::to_string(u) + "," +
                                      std::to_string(v) + ")");
        }
    }
    return f;
}

} // namespace qnk
