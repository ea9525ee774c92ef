#include "qnk/heisenberg.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace qnk {
namespace {

long long imod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

void require_same_n(const HeisElt& x, const HeisElt& y) {
    if (x.n != y.n) throw MixedN("Heisenberg elements with different n");
}

} // namespace

HeisElt HeisElt::make(int n, long long t, long long s, long long nu) {
    return {n, imod(t, n), imod(s, n), imod(nu, 2 * n)};
}

HeisElt mul(const HeisElt& x, const HeisElt& y) {
    require_same_n(x, y);
    const int n = x.n;
    // S^{s1} T^{t2} = T^{t2} S^{s1} eps^{s1 t2} and eps = nu^2
    return HeisElt::make(n, x.t + y.t, x.s + y.s, x.nu + y.nu + 2 * x.s * y.t);
}

HeisElt inverse(const HeisElt& x) {
    return HeisElt::make(x.n, -x.t, -x.s, 2 * x.t * x.s - x.nu);
}

HeisElt power(const HeisElt& x, long long m) {
    if (m < 0) return power(inverse(x), -m);
    // (T^t S^s)^m = T^{tm} S^{sm} eps^{m(m-1)ts/2}
    return HeisElt::make(x.n, x.t * m, x.s * m, x.nu * m + m * (m - 1) * x.t * x.s);
}

bool equal(const HeisElt& x, const HeisElt& y) {
    require_same_n(x, y);
    const long long nu_order = (x.n % 2 == 0) ? 2 * x.n : x.n;
    return x.t == y.t && x.s == y.s && imod(x.nu - y.nu, nu_order) == 0;
}

HeisElt HeisAut::operator()(const HeisElt& x) const {
    const long long z = m.a * m.c * x.t * x.t + m.b * m.d * x.s * x.s +
                        2 * m.b * m.c * x.t * x.s;
    return HeisElt::make(n, m.a * x.t + m.b * x.s, m.c * x.t + m.d * x.s, x.nu + z);
}

HeisAut heis_automorphism(const Sl2& m, int n) {
    return HeisAut{m, n};
}

Mat rep_monomial(const RepMatrices& rep, long long t, long long s, long long nu) {
    const int n = rep.n;
    Mat out = Mat::Identity(n, n);
    const long long tr = imod(t, n), sr = imod(s, n);
    for (long long i = 0; i < tr; ++i) out = rep.t * out;
    Mat gs = Mat::Identity(n, n);
    for (long long i = 0; i < sr; ++i) gs = rep.s * gs;
    out = out * gs;
    cplx phase = 1.0;
    const long long nr = imod(nu, 2 * n);
    for (long long i = 0; i < nr; ++i) phase *= rep.nu;
    return out * phase;
}

Mat rep_of(const RepMatrices& rep, const HeisElt& x) {
    return rep_monomial(rep, x.t, x.s, x.nu);
}

HeisRep heis_rep(int n) {
    if (n < 2) throw Error("heis_rep: n must be at least 2");
    Mat diag = Mat::Zero(n, n);
    Mat up = Mat::Zero(n, n);    // x_i -> x_{i+1}
    Mat down = Mat::Zero(n, n);  // x_i -> x_{i-1}
    for (int i = 0; i < n; ++i) {
        diag(i, i) = e2pi(cplx(static_cast<double>(i) / n, 0.0));
        up((i + 1) % n, i) = 1.0;
        down((i - 1 + n) % n, i) = 1.0;
    }
    HeisRep rep;
    rep.n = n;
    rep.algebra_action = RepMatrices{n, up, diag, -e2pi(cplx(0.5 / n, 0.0))};
    rep.rmatrix_action = RepMatrices{n, down, diag, -e2pi(cplx(-0.5 / n, 0.0))};
    for (const auto* rm : {&rep.algebra_action, &rep.rmatrix_action}) {
        const Mat lhs = rm->s * rm->t;
        const Mat rhs = rm->t * rm->s * (rm->nu * rm->nu);
        if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-14)
            throw Error("heis_rep: commutation relation violated");
    }
    return rep;
}

Intertwiner intertwiner(const Sl2& m, const RepMatrices& rep) {
    const int n = rep.n;
    const HeisAut aut = heis_automorphism(m, n);
    const Mat tgt_t = rep_of(rep, aut(HeisElt::gen_t(n)));
    const Mat tgt_s = rep_of(rep, aut(HeisElt::gen_s(n)));
    const Mat id = Mat::Identity(n, n);
    // column-major vec: vec(A X - X B) = (I (x) A - B^T (x) I) vec(X)
    Mat sys(2 * n * n, n * n);
    sys.topRows(n * n) = kron(id, tgt_t) - kron(rep.t.transpose(), id);
    sys.bottomRows(n * n) = kron(id, tgt_s) - kron(rep.s.transpose(), id);
    Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    const double second = sv(sv.size() - 2);
    const double gap = second / std::max(smallest, 1e-300);
    if (smallest > 1e-9 * sv(0) || gap < 1e6)
        throw NoIntertwiner("intertwiner: Schur system nullity is not 1 (gap " +
                            std::to_string(gap) + ")");
    Mat psi(n, n);
    const Vec null_vec = svd.matrixV().col(n * n - 1);
    for (int j = 0; j < n; ++j)
        psi.col(j) = null_vec.segment(j * n, n);
    psi *= std::sqrt(static_cast<double>(n)) / psi.norm();
    const double peak = psi.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
        if (std::abs(psi(i, 0)) > 1e-8 * peak) {
            psi *= std::conj(psi(i, 0)) / std::abs(psi(i, 0));
            break;
        }
    }
    const double denom = psi.norm();
    const double resid = std::max((tgt_t * psi - psi * rep.t).norm(),
                                  (tgt_s * psi - psi * rep.s).norm()) / denom;
    return Intertwiner{m, psi, resid, gap};
}

} // namespace qnk
