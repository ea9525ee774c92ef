#pragma once

#include "qnk/linalg.hpp"
#include "qnk/sl2.hpp"

namespace qnk {

/// Normal form T^t S^s nu^e of an element of the extended Heisenberg group of
/// order n: t, s mod n; e mod 2n.  nu is the central square root of the
/// commutator epsilon = [S,T]; for odd n it coincides with epsilon^{(n+1)/2},
/// so there nu has order n and equality reduces e mod n.
struct HeisElt {
    int n;
    long long t, s, nu;

    static HeisElt identity(int n) { return {n, 0, 0, 0}; }
    static HeisElt gen_t(int n) { return {n, 1, 0, 0}; }
    static HeisElt gen_s(int n) { return {n, 0, 1, 0}; }
    static HeisElt gen_nu(int n) { return {n, 0, 0, 1}; }
    static HeisElt gen_eps(int n) { return {n, 0, 0, 2}; }
    static HeisElt make(int n, long long t, long long s, long long nu);
};

/// Normal-form product via S^a T^b = T^b S^a eps^{ab}; exact integers.
HeisElt mul(const HeisElt& x, const HeisElt& y);
HeisElt inverse(const HeisElt& x);
HeisElt power(const HeisElt& x, long long m);
/// Parity-aware equality: nu exponents compare mod 2n for even n, mod n for odd n.
bool equal(const HeisElt& x, const HeisElt& y);

/// The automorphism T^t S^s |-> T^{at+bs} S^{ct+ds} nu^Z with
/// Z = a c t^2 + b d s^2 + 2 b c t s, fixing nu.  Group homomorphism in m.
struct HeisAut {
    Sl2 m;
    int n;
    HeisElt operator()(const HeisElt& x) const;
};

HeisAut heis_automorphism(const Sl2& m, int n);

/// One convention's representing matrices on C^n plus the scalar for nu.
struct RepMatrices {
    int n;
    Mat t, s;
    cplx nu;
};

Mat rep_monomial(const RepMatrices& rep, long long t, long long s, long long nu);
Mat rep_of(const RepMatrices& rep, const HeisElt& x);

/// The two matrix conventions the construction needs, exposed side by side:
///  - algebra_action: S x_i = w^i x_i, T x_i = x_{i+1}; the commutator scalar
///    is w (this is the action by algebra automorphisms).
///  - rmatrix_action: S |-> g with g x_i = w^i x_i, T |-> h with h x_i = x_{i-1};
///    the commutator scalar is w^{-1} (the convention the operator T_k and the
///    monomials h^a g^b are written in).
struct HeisRep {
    int n;
    RepMatrices algebra_action;
    RepMatrices rmatrix_action;
};

HeisRep heis_rep(int n);

/// psi with rep(aut(x)) = psi rep(x) psi^{-1}, found as the null space of the
/// stacked Schur system over the generators; the solution space must be
/// one-dimensional (NoIntertwiner otherwise).  Normalised to ||psi||_F =
/// sqrt(n) with the first nonzero entry of the first column real positive.
struct Intertwiner {
    Sl2 m;
    Mat psi;
    double residual;     // max_{x in {T,S}} ||rep(aut x) psi - psi rep(x)||_F / ||psi||_F
    double nullity_gap;  // second-smallest / smallest singular value of the system
};

Intertwiner intertwiner(const Sl2& m, const RepMatrices& rep);

} // namespace qnk
