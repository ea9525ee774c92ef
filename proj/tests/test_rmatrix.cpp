#include <doctest.h>

#include <cmath>

#include "qnk/reference.hpp"
#include "qnk/rmatrix.hpp"
#include "qnk/rng.hpp"

using namespace qnk;

namespace {
const cplx kEta(0.11, 0.06);
const cplx kTau(0.2, 1.1);
}

TEST_CASE("monomial operators: identity, inverse, commutation scalar") {
    for (const int n : {2, 3, 5}) {
        CHECK((monomial_op(0, 0, n) - Mat::Identity(n, n)).cwiseAbs().maxCoeff() == 0.0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Mat prod = monomial_op(a, b, n) * monomial_op_inv(a, b, n);
                CHECK((prod - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);
            }
    }
    // I_{1,1} I_{1,0} and I_{1,0} I_{1,1} differ by the commutation scalar w^{+-1}
    const int n = 3;
    const Mat lhs = monomial_op(1, 1, n) * monomial_op(1, 0, n);
    const Mat rhs = monomial_op(1, 0, n) * monomial_op(1, 1, n);
    const cplx omega = e2pi(cplx(1.0 / n, 0));
    const bool plus = (lhs - omega * rhs).cwiseAbs().maxCoeff() < 1e-13;
    const bool minus = (lhs - rhs / omega).cwiseAbs().maxCoeff() < 1e-13;
    CHECK((plus || minus));
}

TEST_CASE("t operator at n=2 against a hand-expanded four-term sum") {
    const RParams par(2, 1, kEta, kTau);
    const cplx z(0.07, 0.13);
    const Mat got = t_operator(par, z);

    // k' = 1; the four terms are w_{(u,v)} I_{-u,v} (x) I_{-u,v}^{-1}
    Mat g(2, 2), h(2, 2);
    g << 1, 0, 0, -1;
    h << 0, 1, 1, 0;
    Mat want = Mat::Zero(4, 4);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
            const cplx w = w_uv(WIndex{u, v}, 2, -2.0 * z, kEta, kTau);
            Mat op = Mat::Identity(2, 2);
            for (int i = 0; i < (2 - u) % 2; ++i) op = h * op;  // h^{-u} = h^{2-u}
            Mat gs = Mat::Identity(2, 2);
            for (int i = 0; i < v; ++i) gs = g * gs;
            op = op * gs;
            want += w * kron(op, op.inverse());
        }
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-13 * want.cwiseAbs().maxCoeff());
}

TEST_CASE("t operator matches the serial reference assembly") {
    for (const auto& [n, k] : {std::pair{3, 1}, {3, 2}, {5, 2}}) {
        const RParams par(n, k, kEta, kTau);
        const cplx z(0.09, -0.04);
        const Mat fast = t_operator(par, z);
        const Mat slow = ref::t_operator(par, z);
        CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-12 * slow.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("parallel and serial kernels produce identical bits") {
    const RParams par(5, 2, kEta, kTau);
    const cplx z(0.21, 0.02);
    const auto wp = w_values(par, z, true);
    const auto ws = w_values(par, z, false);
    for (std::size_t i = 0; i < wp.size(); ++i) CHECK(wp[i] == ws[i]);
    const Mat tp = t_operator(par, z, true);
    const Mat ts = t_operator(par, z, false);
    CHECK((tp - ts).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("norm bound and degree-zero consistency") {
    const RParams par(4, 1, kEta, kTau);
    const cplx z(0.12, 0.07);
    const auto w = w_values(par, z);
    double wsum = 0.0;
    for (const cplx v : w) wsum += std::abs(v);
    CHECK(t_operator(par, z).operatorNorm() <= wsum * (1.0 + 1e-12));

    // at z = 0 every w is exactly 1, so T is the plain sum of the monomial terms
    const Mat t0 = t_operator(par, 0.0);
    Mat resum = Mat::Zero(16, 16);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            const Mat op = monomial_op(-static_cast<long long>(par.k_prime) * u, v, 4);
            resum += kron(op, monomial_op_inv(-static_cast<long long>(par.k_prime) * u, v, 4));
        }
    CHECK((t0 - resum).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("image of R equals the image of P T") {
    const RParams par(3, 1, kEta, kTau);
    const Mat r = r_matrix(par, kEta);
    const Mat pt = swap_op(3) * t_operator(par, kEta);
    const double angle = largest_principal_angle(orthonormal_image(r), orthonormal_image(pt));
    CHECK(angle < 1e-10);
}

TEST_CASE("quantum Yang-Baxter residual at (3,1) over random spectral points") {
    const RParams par(3, 1, cplx(0.13, 0.21), cplx(0, 1));
    Rng rng(61);
    for (int i = 0; i < 5; ++i) {
        const cplx u(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
        const cplx v(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
        CHECK(qybe_residual(par, u, v) < 1e-8);
    }
}

TEST_CASE("R is holomorphic: finite-difference dbar residual is tiny") {
    const RParams par(3, 2, kEta, kTau);
    const cplx z0(0.17, 0.09);
    const double h = 1e-4;
    // fourth-order central differences along both axes
    auto deriv = [&](cplx dir) {
        const Mat f2p = r_matrix(par, z0 + 2.0 * h * dir), f1p = r_matrix(par, z0 + h * dir);
        const Mat f1m = r_matrix(par, z0 - h * dir), f2m = r_matrix(par, z0 - 2.0 * h * dir);
        return Mat(((-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * h)));
    };
    const Mat dx = deriv(1.0), dy = deriv(cplx(0, 1));
    const Mat dbar = 0.5 * (dx + cplx(0, 1) * dy);
    CHECK(dbar.cwiseAbs().maxCoeff() / dx.cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("t operator commutes with the diagonal Heisenberg action") {
    const RParams par(3, 1, kEta, kTau);
    const HeisRep rep = heis_rep(3);
    const Mat t = t_operator(par, cplx(0.05, 0.11));
    for (const Mat* x : {&rep.rmatrix_action.s, &rep.rmatrix_action.t}) {
        const Mat xx = kron(*x, *x);
        CHECK((xx * t - t * xx).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("direct component formula agrees with the composed construction") {
    // two independent routes to the same operator: theta-quotient components
    // versus the w-weighted monomial sum
    for (const auto& [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}}) {
        const RParams par(n, k, kEta, kTau);
        const cplx z(0.07, 0.19);
        const Mat direct = ref::r_matrix_direct(par, z);
        const Mat composed = r_matrix(par, z);
        CHECK((direct - composed).cwiseAbs().maxCoeff() <
              1e-11 * composed.cwiseAbs().maxCoeff());
        // and the relation spaces at z = eta coincide
        const double angle = largest_principal_angle(
            orthonormal_image(ref::r_matrix_direct(par, kEta)),
            orthonormal_image(r_matrix(par, kEta)));
        CHECK(angle < 1e-7);
    }
}

TEST_CASE("equivariance: identity, unipotent, and inversion matrices") {
    const RParams par(3, 1, kEta, kTau);

    const ProportionalityResult id = equivariance_check(par, Sl2::identity(), 0.8 * kEta);
    CHECK(std::abs(id.scalar - 1.0) < 1e-10);
    CHECK(id.max_deviation < 1e-10);

    const ProportionalityResult uni = equivariance_check(par, Sl2{1, 0, 3, 1}, 0.8 * kEta);
    CHECK(uni.max_deviation < 1e-7);

    const ProportionalityResult inv = equivariance_check(par, Sl2{0, 1, -1, 0}, kEta);
    CHECK(inv.max_deviation < 1e-7);
    CHECK(std::abs(inv.scalar) > 0.0);
}

TEST_CASE("proportionality test refuses a degenerate overlap") {
    Mat a = Mat::Zero(6, 6), b = Mat::Zero(6, 6);
    b.setConstant(1e-30);
    b(0, 0) = 1.0;  // one entry above the cutoff, 36 nonzero
    a = b;
    CHECK_THROWS_AS(scalar_proportionality(a, b), DegenerateOverlap);
}

TEST_CASE("eta genericity filter rejects the excluded set and low torsion") {
    const cplx tau(0.2, 1.1);
    CHECK(eta_is_generic(kEta, tau, 3));
    CHECK(!eta_is_generic((tau + 1.0) / 3.0, tau, 3));          // in (1/3)Lambda
    CHECK(!eta_is_generic(cplx(0.5, 0) + 1e-5, tau, 3, true));  // 2-torsion adjacent
    CHECK(eta_is_generic(kEta, tau, 3, true));
}
