#include <doctest.h>

#include <cmath>

#include "qnk/algebra.hpp"
#include "qnk/heisenberg.hpp"
#include "qnk/rng.hpp"

using namespace qnk;

namespace {
const cplx kEta(0.11, 0.06);
const cplx kTau(0.2, 1.1);
const std::pair<int, int> kPairs[] = {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}};
}

TEST_CASE("relation spaces have rank n(n-1)/2 with orthonormal bases") {
    for (const auto& [n, k] : kPairs) {
        const RelationSpace rel = relation_space(RParams(n, k, kEta, kTau));
        CHECK(rel.rank == n * (n - 1) / 2);
        const Mat gram = rel.basis.adjoint() * rel.basis;
        CHECK((gram - Mat::Identity(rel.rank, rel.rank)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("relation space does not move under eta -> eta + 1") {
    const RParams par(3, 2, kEta, kTau);
    const RelationSpace a = relation_space(par);
    const RelationSpace b = relation_space(par.with_eta_tau(kEta + 1.0, kTau));
    CHECK(largest_principal_angle(a.basis, b.basis) < 1e-8);
}

TEST_CASE("relation space is invariant under the Heisenberg action") {
    for (const auto& [n, k] : {std::pair{3, 1}, {4, 1}}) {
        const RelationSpace rel = relation_space(RParams(n, k, kEta, kTau));
        const HeisRep rep = heis_rep(n);
        for (const Mat* x : {&rep.algebra_action.s, &rep.algebra_action.t}) {
            const Mat moved = orthonormal_image(kron(*x, *x) * rel.basis);
            CHECK(largest_principal_angle(moved, rel.basis) < 1e-8);
        }
    }
}

TEST_CASE("graded dimensions match the polynomial-ring pattern") {
    {
        const auto dims = graded_dims(relation_space(RParams(3, 1, kEta, kTau)));
        CHECK(dims == std::array<long long, 4>{1, 3, 6, 10});
    }
    {
        const auto dims = graded_dims(relation_space(RParams(5, 2, kEta, kTau)));
        CHECK(dims[2] == 15);
        CHECK(dims[3] == 35);
    }
}

TEST_CASE("modular isomorphism: identity is exact, inversion passes at 1e-7") {
    const RParams par(3, 2, kEta, kTau);
    const IsomResult id = modular_isom_check(par, Sl2::identity());
    CHECK(id.angle < 1e-14);

    const IsomResult inv = modular_isom_check(par, Sl2{0, 1, -1, 0});
    CHECK(inv.rank_src == 3);
    CHECK(inv.rank_dst == 3);
    CHECK(inv.angle < 1e-7);
}

TEST_CASE("modular isomorphism across the coprime test set and matrix set") {
    Rng rng(71);
    const Sl2 x{0, 1, -1, 0}, y{1, 1, -1, 0};
    for (const auto& [n, k] : kPairs) {
        std::vector<Sl2> ms = {x, y, x * y};
        ms.push_back(random_sl2(rng, 5));
        for (const Sl2& m : ms) {
            const cplx tau2 = act_tau(m, kTau);
            if (tau2.imag() < 0.055) continue;
            const cplx den = static_cast<double>(m.c) * kTau + static_cast<double>(m.d);
            if (!eta_is_generic(kEta / den, tau2, n)) continue;
            const IsomResult res = modular_isom_check(RParams(n, k, kEta, kTau), m);
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(m.a);
            CAPTURE(m.b);
            CHECK(res.rank_src == n * (n - 1) / 2);
            CHECK(res.angle < 1e-7);
        }
    }
}

TEST_CASE("rank is preserved by the modular action") {
    const RParams par(4, 1, kEta, kTau);
    for (const Sl2& m : {Sl2{0, 1, -1, 0}, Sl2{1, 1, 0, 1}}) {
        const IsomResult res = modular_isom_check(par, m);
        CHECK(res.rank_src == res.rank_dst);
    }
}

TEST_CASE("angle test is symmetric between the two directions") {
    const RParams par(3, 1, kEta, kTau);
    const Sl2 m{0, 1, -1, 0};
    const RelationSpace w1 = relation_space(par);
    const ModularTriple moved = act(m, ModularTriple{kEta, kEta, kTau});
    const RelationSpace w2 = relation_space(par.with_eta_tau(moved.eta, moved.tau));
    const Intertwiner iw = intertwiner(lift_sl2(dual_mod_n(m, 3, 1)),
                                       heis_rep(3).rmatrix_action);
    const Mat pp = kron(iw.psi, iw.psi);
    const double fwd = largest_principal_angle(orthonormal_image(pp * w1.basis), w2.basis);
    const double bwd = largest_principal_angle(orthonormal_image(pp.inverse() * w2.basis),
                                               w1.basis);
    CHECK(std::abs(fwd - bwd) < 1e-9);
}

TEST_CASE("conjugated Heisenberg copy preserves the target relation space") {
    // the transported symmetry psi rho(x) psi^{-1} acts on the target space
    const int n = 3, k = 1;
    const RParams par(n, k, kEta, kTau);
    const Sl2 m{0, 1, -1, 0};
    const ModularTriple moved = act(m, ModularTriple{kEta, kEta, kTau});
    const RelationSpace w2 = relation_space(par.with_eta_tau(moved.eta, moved.tau));
    const Intertwiner iw = intertwiner(lift_sl2(dual_mod_n(m, n, k)),
                                       heis_rep(n).rmatrix_action);
    const HeisRep rep = heis_rep(n);
    for (const Mat* x : {&rep.rmatrix_action.s, &rep.rmatrix_action.t}) {
        const Mat conj = iw.psi * (*x) * iw.psi.inverse();
        const Mat mapped = orthonormal_image(kron(conj, conj) * w2.basis);
        CHECK(largest_principal_angle(mapped, w2.basis) < 1e-8);
    }
}

TEST_CASE("cor-style equality: unipotent lower matrix needs no transport") {
    // small |tau| keeps tau/(n tau + 1) at workable height for every test n
    const cplx eta(0.05, 0.035), tau(0.0, 0.15);
    for (const auto& [n, k] : kPairs) {
        const RParams par(n, k, eta, tau);
        const Sl2 m{1, 0, n, 1};
        const RelationSpace w1 = relation_space(par);
        const ModularTriple moved = act(m, ModularTriple{eta, eta, tau});
        const RelationSpace w2 = relation_space(par.with_eta_tau(moved.eta, moved.tau));
        CHECK(largest_principal_angle(w1.basis, w2.basis) < 1e-8);
    }
}

TEST_CASE("lattice-isomorphism pathway: the three canonical cases") {
    const cplx tau1(0.3, 1.1);
    const cplx eta1(0.12, 0.08);
    const int n = 3, k = 1;

    const IsomResult shift = isom_from_lattice_iso(tau1, eta1, tau1 + 1.0, eta1, 1.0, n, k);
    CHECK(shift.angle < 1e-8);

    const IsomResult inv =
        isom_from_lattice_iso(tau1, eta1, -1.0 / tau1, eta1 / tau1, 1.0 / tau1, n, k);
    CHECK(inv.angle < 1e-7);

    const IsomResult eta_shift = isom_from_lattice_iso(tau1, eta1, tau1, eta1 + 1.0, 1.0, n, k);
    CHECK(eta_shift.angle < 1e-8);
}

TEST_CASE("lattice pathway rejects bad scalings and mismatched eta") {
    const cplx tau1(0.3, 1.1);
    const cplx eta1(0.12, 0.08);
    CHECK_THROWS_AS(isom_from_lattice_iso(tau1, eta1, tau1, eta1, cplx(0.5), 3, 1),
                    NotALatticeIso);
    CHECK_THROWS_AS(isom_from_lattice_iso(tau1, eta1, tau1, eta1 + cplx(0.37, 0.0), 1.0, 3, 1),
                    EtaMismatch);
}
