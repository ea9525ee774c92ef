// Timing comparison between the serial reference paths and the OpenMP
// kernels.  The parallel paths are bit-identical to the serial ones; this
// binary only reports wall time.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qnk/parallel.hpp"
#include "qnk/reference.hpp"
#include "qnk/rmatrix.hpp"
#include "qnk/rng.hpp"
#include "qnk/suites.hpp"

using namespace qnk;

namespace {

template <typename F>
double time_ms(F&& fn, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
    std::printf("threads: %d (OpenMP %s)\n\n", parallel_threads(),
                parallel_enabled() ? "on" : "off");
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        // large synthetic order: n^2 independent theta evaluations
        const RParams par(48, 7, cplx(0.11, 0.06), cplx(0.2, 1.1));
        const cplx z(0.05, 0.02);
        volatile double sink = 0;
        const double s = time_ms([&] {
            for (const cplx w : w_values(par, z, false)) sink = sink + std::abs(w);
        });
        const double p = time_ms([&] {
            for (const cplx w : w_values(par, z, true)) sink = sink + std::abs(w);
        });
        row("w table, n=48", s, p);
    }

    {
        const RParams par(24, 5, cplx(0.11, 0.06), cplx(0.2, 1.1));
        const cplx z(0.05, 0.02);
        const double s = time_ms([&] { t_operator(par, z, false); });
        const double p = time_ms([&] { t_operator(par, z, true); });
        row("t operator assembly, n=24", s, p);
    }

    {
        // optimized column assembly vs. the naive matrix-product reference
        const RParams par(12, 5, cplx(0.11, 0.06), cplx(0.2, 1.1));
        const cplx z(0.05, 0.02);
        const double s = time_ms([&] { ref::t_operator(par, z); });
        const double p = time_ms([&] { t_operator(par, z, true); });
        row("t operator vs reference, n=12", s, p);
    }

    {
        // QYBE scan parallelised over draws
        const int draws = 16;
        std::vector<double> out(draws);
        auto scan = [&](bool par_flag) {
            parallel_for(draws, [&](std::int64_t i) {
                Rng rng = Rng(7).fork(i);
                const cplx tau = sample_tau(rng);
                const cplx eta = sample_eta_generic(rng, tau, 5);
                const RParams par(5, 2, eta, tau);
                const cplx u(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
                const cplx v(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
                out[i] = qybe_residual(par, u, v, false);
            }, par_flag);
        };
        const double s = time_ms([&] { scan(false); });
        const double p = time_ms([&] { scan(true); });
        row("qybe scan, 16 draws at (5,2)", s, p);
    }

    return 0;
}
