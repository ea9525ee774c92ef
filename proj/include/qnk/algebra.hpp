#pragma once

#include <array>

#include "qnk/rmatrix.hpp"

namespace qnk {

/// Orthonormal basis of the relation space image R_{n,k}(eta, eta | tau)
/// inside C^n (x) C^n.
struct RelationSpace {
    int n, k;
    cplx eta, tau;
    Mat basis;  // n^2 x rank, orthonormal columns
    int rank;
};

RelationSpace relation_space(const RParams& par);

/// Graded dimensions of T(V)/(relations) in degrees 0..3:
/// dims[2] = n^2 - rank and dims[3] = n^3 - rank[ rel (x) V | V (x) rel ].
std::array<long long, 4> graded_dims(const RelationSpace& rel);

struct IsomResult {
    Sl2ModN dual;
    int rank_src, rank_dst;
    double angle;  // largest principal angle between the transported and target spaces
};

/// The modular isomorphism test: transports the relation space at (eta|tau)
/// with psi(M')^{(x)2} and measures the principal angle against the relation
/// space at M(eta|tau).  RankMismatch when the two ranks differ.
IsomResult modular_isom_check(const RParams& par, const Sl2& m);

/// End-to-end pathway from a lattice isomorphism: recovers the matrix from
/// (tau1, tau2, u), checks u eta1 = eta2 modulo the target lattice
/// (EtaMismatch otherwise, tolerance 1e-8), then compares the transported
/// relation space against the one computed at (eta2 | tau2).
IsomResult isom_from_lattice_iso(cplx tau1, cplx eta1, cplx tau2, cplx eta2, cplx u,
                                 int n, int k, const ThetaParams& p = {});

} // namespace qnk
