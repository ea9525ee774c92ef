#include "qnk/algebra.hpp"

#include <cmath>
#include <string>

namespace qnk {

RelationSpace relation_space(const RParams& par) {
    const Mat r = r_matrix(par, par.eta);
    int rank = 0;
    Mat basis = orthonormal_image(r, 1e-9, &rank);
    return RelationSpace{par.n, par.k, par.eta, par.tau, std::move(basis), rank};
}

std::array<long long, 4> graded_dims(const RelationSpace& rel) {
    const int n = rel.n, r = rel.rank;
    const Mat id = Mat::Identity(n, n);
    Mat stacked(static_cast<Eigen::Index>(n) * n * n, 2LL * n * r);
    stacked.leftCols(static_cast<Eigen::Index>(n) * r) = kron(rel.basis, id);
    stacked.rightCols(static_cast<Eigen::Index>(n) * r) = kron(id, rel.basis);
    const long long deg3_span = numerical_rank(stacked);
    return {1, n, static_cast<long long>(n) * n - r,
            static_cast<long long>(n) * n * n - deg3_span};
}

IsomResult modular_isom_check(const RParams& par, const Sl2& m) {
    const RelationSpace src = relation_space(par);
    const ModularTriple moved = act(m, ModularTriple{par.eta, par.eta, par.tau});
    const RelationSpace dst = relation_space(par.with_eta_tau(moved.eta, moved.tau));
    if (src.rank != dst.rank)
        throw RankMismatch("modular_isom_check: relation ranks differ (" +
                           std::to_string(src.rank) + " vs " + std::to_string(dst.rank) + ")");
    const Sl2ModN dual = dual_mod_n(m, par.n, par.k);
    const Intertwiner iw = intertwiner(lift_sl2(dual), heis_rep(par.n).rmatrix_action);
    const Mat transported = orthonormal_image(kron(iw.psi, iw.psi) * src.basis);
    const double angle = largest_principal_angle(transported, dst.basis);
    return IsomResult{dual, src.rank, dst.rank, angle};
}

IsomResult isom_from_lattice_iso(cplx tau1, cplx eta1, cplx tau2, cplx eta2, cplx u,
                                 int n, int k, const ThetaParams& p) {
    const Sl2 m = recover_sl2(tau1, tau2, u);
    // u eta1 - eta2 must be a point of Z + Z tau2
    const cplx gap = u * eta1 - eta2;
    const double y = gap.imag() / tau2.imag();
    const double x = gap.real() - y * tau2.real();
    if (std::abs(x - std::round(x)) > 1e-8 || std::abs(y - std::round(y)) > 1e-8)
        throw EtaMismatch("isom_from_lattice_iso: u*eta1 - eta2 is not a lattice point");
    const RParams par(n, k, eta1, tau1, p);
    const RelationSpace src = relation_space(par);
    const RelationSpace dst = relation_space(par.with_eta_tau(eta2, tau2));
    if (src.rank != dst.rank)
        throw RankMismatch("isom_from_lattice_iso: relation ranks differ");
    const Sl2ModN dual = dual_mod_n(m, n, k);
    const Intertwiner iw = intertwiner(lift_sl2(dual), heis_rep(n).rmatrix_action);
    const Mat transported = orthonormal_image(kron(iw.psi, iw.psi) * src.basis);
    const double angle = largest_principal_angle(transported, dst.basis);
    return IsomResult{dual, src.rank, dst.rank, angle};
}

} // namespace qnk
