#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qnk/errors.hpp"
#include "qnk/rng.hpp"

namespace qnk {

using cplx = std::complex<double>;

/// Integer 2x2 matrix with determinant +1, checked at construction.
/// All arithmetic goes through 128-bit intermediates and throws on overflow.
struct Sl2 {
    long long a, b, c, d;

    Sl2(long long a_, long long b_, long long c_, long long d_);

    static Sl2 identity() { return {1, 0, 0, 1}; }
    Sl2 inverse() const { return {d, -b, -c, a}; }
    bool operator==(const Sl2&) const = default;
};

Sl2 operator*(const Sl2& x, const Sl2& y);

/// The point (z, eta | tau) the modular group acts on; Im(tau) > 0 enforced.
struct ModularTriple {
    cplx z, eta, tau;
    ModularTriple(cplx z_, cplx eta_, cplx tau_);
};

/// (z, eta | tau) -> (z/(c tau+d), eta/(c tau+d) | (a tau+b)/(c tau+d)).
ModularTriple act(const Sl2& m, const ModularTriple& p);
cplx act_tau(const Sl2& m, cplx tau);

enum class Gen { X, Y };

/// Word in the order-4/order-6 generator pair
///   X = [[0,1],[-1,0]],  Y = [[1,1],[-1,0]],
/// stored as runs gen^exp applied left to right, with an optional extra -I.
struct GenWord {
    bool negate = false;
    std::vector<std::pair<Gen, long long>> factors;

    Sl2 eval() const;
    std::size_t token_count() const;
};

/// Decomposes m into a GenWord whose eval() reproduces m exactly.  Words are
/// deterministic but not minimal.
GenWord decompose(const Sl2& m);

enum class STGen { S, T };

/// Word over the inversion/translation pair S = [[0,-1],[1,0]],
/// T = [[1,1],[0,1]] via Euclidean reduction of the first column.
std::vector<std::pair<STGen, long long>> decompose_st(const Sl2& m);
Sl2 eval_st(const std::vector<std::pair<STGen, long long>>& word);

/// Element of SL(2, Z_n); entries stored in [0, n).
struct Sl2ModN {
    int n;
    long long a, b, c, d;
    bool operator==(const Sl2ModN&) const = default;
};

Sl2ModN operator*(const Sl2ModN& x, const Sl2ModN& y);
Sl2ModN reduce_mod_n(const Sl2& m, int n);

long long mod_inverse(long long k, long long n);

/// The partner matrix controlling which Heisenberg automorphism matches the
/// modular parameter change: diag(-k,1)^{-1} M^{-t} diag(-k,1), which reduces
/// to [[d, c k'],[b k, a]] mod n with k k' = 1 mod n.  Multiplicative, and
/// applying it twice returns M mod n.
Sl2ModN dual_mod_n(const Sl2& m, int n, int k);
Sl2ModN dual_mod_n(const Sl2ModN& m, int k);

/// Deterministic lift of an SL(2, Z_n) element to SL(2, Z) with det exactly 1.
Sl2 lift_sl2(const Sl2ModN& m);

/// Recovers the unique M in SL(2,Z) with 1 = u(c tau1 + d) and
/// tau2 = u(a tau1 + b); throws NotALatticeIso when u does not carry
/// Z + Z tau1 onto Z + Z tau2.  Integers are accepted when the continuous
/// solve is within 1e-6 of an integer and the rounded residual stays below
/// 1e-9 * (1 + |tau2|).
Sl2 recover_sl2(cplx tau1, cplx tau2, cplx u);

/// Random element sampled as a short word in S and T, rejected until all
/// entries are bounded by entry_bound.
Sl2 random_sl2(Rng& rng, long long entry_bound, int max_word_len = 10);

} // namespace qnk
