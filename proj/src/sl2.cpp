#include "qnk/sl2.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace qnk {
namespace {

long long mul_ll(long long x, long long y) {
    const __int128 p = static_cast<__int128>(x) * y;
    if (p > INT64_MAX || p < INT64_MIN)
        throw Error("integer overflow in SL2 arithmetic");
    return static_cast<long long>(p);
}

long long add_ll(long long x, long long y) {
    const __int128 s = static_cast<__int128>(x) + y;
    if (s > INT64_MAX || s < INT64_MIN)
        throw Error("integer overflow in SL2 arithmetic");
    return static_cast<long long>(s);
}

long long imod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

// quotient with remainder in [0, |b|)
long long euclid_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

Sl2::Sl2(long long a_, long long b_, long long c_, long long d_) : a(a_), b(b_), c(c_), d(d_) {
    const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det != 1)
        throw Error("SL2 entries must have determinant 1");
}

Sl2 operator*(const Sl2& x, const Sl2& y) {
    return {add_ll(mul_ll(x.a, y.a), mul_ll(x.b, y.c)),
            add_ll(mul_ll(x.a, y.b), mul_ll(x.b, y.d)),
            add_ll(mul_ll(x.c, y.a), mul_ll(x.d, y.c)),
            add_ll(mul_ll(x.c, y.b), mul_ll(x.d, y.d))};
}

ModularTriple::ModularTriple(cplx z_, cplx eta_, cplx tau_) : z(z_), eta(eta_), tau(tau_) {
    if (!(tau.imag() > 0.0))
        throw Error("tau must lie in the upper half plane");
}

ModularTriple act(const Sl2& m, const ModularTriple& p) {
    const cplx den = static_cast<double>(m.c) * p.tau + static_cast<double>(m.d);
    const cplx num = static_cast<double>(m.a) * p.tau + static_cast<double>(m.b);
    return {p.z / den, p.eta / den, num / den};
}

cplx act_tau(const Sl2& m, cplx tau) {
    return (static_cast<double>(m.a) * tau + static_cast<double>(m.b)) /
           (static_cast<double>(m.c) * tau + static_cast<double>(m.d));
}

namespace {

Sl2 gen_matrix(Gen g) {
    return g == Gen::X ? Sl2{0, 1, -1, 0} : Sl2{1, 1, -1, 0};
}

Sl2 int_power(Sl2 base, long long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Sl2 acc = Sl2::identity();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace

Sl2 GenWord::eval() const {
    Sl2 acc = Sl2::identity();
    for (const auto& [g, e] : factors)
        acc = acc * int_power(gen_matrix(g), e);
    if (negate) acc = Sl2{-1, 0, 0, -1} * acc;
    return acc;
}

std::size_t GenWord::token_count() const {
    std::size_t count = negate ? 2 : 0; // -I = X^2
    for (const auto& [g, e] : factors) count += static_cast<std::size_t>(std::llabs(e));
    return count;
}

std::vector<std::pair<STGen, long long>> decompose_st(const Sl2& m) {
    std::vector<std::pair<STGen, long long>> word;
    long long a = m.a, b = m.b, c = m.c, d = m.d;
    // peel generators off the left; the recorded factors multiply to m
    while (c != 0) {
        const long long q = euclid_div(a, c);
        if (q != 0) {
            // T^{-q} on the left subtracts q times the bottom row
            a = add_ll(a, -mul_ll(q, c));
            b = add_ll(b, -mul_ll(q, d));
            word.emplace_back(STGen::T, q);
        }
        // S^{-1} = [[0,1],[-1,0]] swaps rows with a sign
        const long long na = c, nb = d, nc = -a, nd = -b;
        a = na; b = nb; c = nc; d = nd;
        word.emplace_back(STGen::S, 1);
    }
    // now a*d = 1
    if (a == 1) {
        if (b != 0) word.emplace_back(STGen::T, b);
    } else {
        // [[-1, b],[0,-1]] = S^2 T^{-b}
        word.emplace_back(STGen::S, 2);
        if (b != 0) word.emplace_back(STGen::T, -b);
    }
    return word;
}

Sl2 eval_st(const std::vector<std::pair<STGen, long long>>& word) {
    const Sl2 s{0, -1, 1, 0}, t{1, 1, 0, 1};
    Sl2 acc = Sl2::identity();
    for (const auto& [g, e] : word)
        acc = acc * int_power(g == STGen::S ? s : t, e);
    return acc;
}

GenWord decompose(const Sl2& m) {
    // S = X^{-1} and T = X Y^{-1} translate an S/T word into the X/Y pair
    GenWord out;
    auto push = [&out](Gen g, long long e) {
        if (e == 0) return;
        if (!out.factors.empty() && out.factors.back().first == g) {
            out.factors.back().second += e;
            if (out.factors.back().second == 0) out.factors.pop_back();
            return;
        }
        out.factors.emplace_back(g, e);
    };
    for (const auto& [g, e] : decompose_st(m)) {
        if (g == STGen::S) {
            push(Gen::X, -e);
        } else {
            if (e > 0)
                for (long long i = 0; i < e; ++i) { push(Gen::X, 1); push(Gen::Y, -1); }
            else
                for (long long i = 0; i < -e; ++i) { push(Gen::Y, 1); push(Gen::X, -1); }
        }
    }
    return out;
}

Sl2ModN operator*(const Sl2ModN& x, const Sl2ModN& y) {
    if (x.n != y.n) throw Error("SL2 mod-n product with mismatched moduli");
    const long long n = x.n;
    return {x.n,
            imod(x.a * y.a + x.b * y.c, n), imod(x.a * y.b + x.b * y.d, n),
            imod(x.c * y.a + x.d * y.c, n), imod(x.c * y.b + x.d * y.d, n)};
}

Sl2ModN reduce_mod_n(const Sl2& m, int n) {
    return {n, imod(m.a, n), imod(m.b, n), imod(m.c, n), imod(m.d, n)};
}

long long mod_inverse(long long k, long long n) {
    long long r0 = n, r1 = imod(k, n), t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        t0 -= q * t1; std::swap(t0, t1);
    }
    if (r0 != 1) throw Error("mod_inverse: arguments not coprime");
    return imod(t0, n);
}

Sl2ModN dual_mod_n(const Sl2& m, int n, int k) {
    return dual_mod_n(reduce_mod_n(m, n), k);
}

Sl2ModN dual_mod_n(const Sl2ModN& m, int k) {
    const long long n = m.n;
    if (n <= k || k < 1 || std::gcd(n, static_cast<long long>(k)) != 1)
        throw Error("dual_mod_n needs coprime n > k >= 1");
    const long long kp = mod_inverse(k, n);
    Sl2ModN out{m.n, imod(m.d, n), imod(m.c * kp, n), imod(m.b * k, n), imod(m.a, n)};
    if (imod(out.a * out.d - out.b * out.c, n) != 1)
        throw Error("dual_mod_n: determinant not 1 mod n");
    return out;
}

Sl2 lift_sl2(const Sl2ModN& m) {
    const long long n = m.n;
    long long c = m.c, d = m.d;
    if (c == 0 && d == 0) throw Error("lift_sl2: bottom row is zero mod n");
    if (c == 0 && d != 1) c = n;     // make the row reducible to a coprime pair
    long long guard = 0;
    while (std::gcd(c, d) != 1) {
        d += n;
        if (++guard > 4 * n * n) throw Error("lift_sl2: no coprime lift found");
    }
    // x c + y d = 1
    long long x = 0, y = 0;
    {
        long long r0 = c, r1 = d, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (r1 != 0) {
            const long long q = r0 / r1;
            r0 -= q * r1; std::swap(r0, r1);
            x0 -= q * x1; std::swap(x0, x1);
            y0 -= q * y1; std::swap(y0, y1);
        }
        if (r0 == -1) { x0 = -x0; y0 = -y0; }
        x = x0; y = y0;
    }
    const long long det0 = mul_ll(m.a, d) - mul_ll(m.b, c);
    const long long t = (det0 - 1) / n;    // divisible: det = 1 mod n
    const long long a = add_ll(m.a, mul_ll(-t * n, y));
    const long long b = add_ll(m.b, mul_ll(t * n, x));
    return Sl2{a, b, c, d};                // ctor re-checks det == 1
}

Sl2 recover_sl2(cplx tau1, cplx tau2, cplx u) {
    if (!(tau1.imag() > 0.0) || !(tau2.imag() > 0.0))
        throw Error("recover_sl2: both tau arguments must be in the upper half plane");
    if (std::abs(u) == 0.0) throw NotALatticeIso("recover_sl2: u = 0");
    const cplx top = tau2 / u;  // a*tau1 + b
    const cplx bot = 1.0 / u;   // c*tau1 + d
    const double it = tau1.imag();
    const double ar = top.imag() / it, cr = bot.imag() / it;
    const double br = top.real() - ar * tau1.real();
    const double dr = bot.real() - cr * tau1.real();
    const double vals[4] = {ar, br, cr, dr};
    long long ints[4];
    for (int i = 0; i < 4; ++i) {
        ints[i] = std::llround(vals[i]);
        if (std::abs(vals[i] - static_cast<double>(ints[i])) > 1e-6)
            throw NotALatticeIso("recover_sl2: solve is not integral");
    }
    const cplx a = static_cast<double>(ints[0]), b = static_cast<double>(ints[1]);
    const cplx c = static_cast<double>(ints[2]), d = static_cast<double>(ints[3]);
    const double tol = 1e-9 * (1.0 + std::abs(tau2));
    if (std::abs(u * (c * tau1 + d) - 1.0) > tol || std::abs(u * (a * tau1 + b) - tau2) > tol)
        throw NotALatticeIso("recover_sl2: rounded matrix does not reproduce the map");
    if (ints[0] * ints[3] - ints[1] * ints[2] != 1)
        throw NotALatticeIso("recover_sl2: rounded matrix is not in SL(2,Z)");
    return Sl2{ints[0], ints[1], ints[2], ints[3]};
}

Sl2 random_sl2(Rng& rng, long long entry_bound, int max_word_len) {
    const Sl2 s{0, -1, 1, 0};
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Sl2 m = Sl2::identity();
        const int len = static_cast<int>(rng.uniform_int(1, max_word_len));
        for (int i = 0; i < len; ++i) {
            if (rng.uniform_int(0, 1) == 0) {
                m = m * s;
            } else {
                const long long j = rng.uniform_int(-3, 3);
                m = m * Sl2{1, j, 0, 1};
            }
        }
        const long long mx = std::max({std::llabs(m.a), std::llabs(m.b), std::llabs(m.c), std::llabs(m.d)});
        if (mx <= entry_bound && !(m == Sl2::identity())) return m;
    }
    throw Error("random_sl2: sampling failed");
}

} // namespace qnk
