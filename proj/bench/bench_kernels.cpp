// Serial-vs-OpenMP kernel comparison on realistic workloads: a Hadamard
// layer, a CNOT ladder, anticontrolled Toffolis, and the full reference
// tile circuit. Run manually; not part of the test suite.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "qimp/circuit/run.hpp"
#include "qimp/neqr/neqr.hpp"
#include "qimp/simcore/kernels.hpp"
#include "qimp/simcore/state_vector.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qimp;

namespace {

double run_layers(StateVector& psi, kernels::Policy policy, int reps) {
    psi.set_policy(policy);
    const int n = psi.n_qubits();
    const GateMatrix h = gates::hadamard();
    const GateMatrix x = gates::pauli_x();

    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
        for (int q = 0; q < n; ++q) psi.apply(h, {q});
        for (int q = 0; q + 1 < n; ++q) psi.apply(x, {q + 1}, {q});
        for (int q = 0; q + 2 < n; ++q) psi.apply(x, {q + 2}, {q}, {q + 1});
    }
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel numbers fall back to serial\n");
#endif
    std::printf("%-8s %-6s %12s %12s %8s\n", "qubits", "reps", "serial ms", "parallel ms",
                "speedup");

    for (int n : {12, 16, 18, 20}) {
        const int reps = n >= 18 ? 2 : 8;
        StateVector a(n), b(n);
        const double serial = run_layers(a, kernels::Policy::Serial, reps);
        const double parallel = run_layers(b, kernels::Policy::Parallel, reps);
        std::printf("%-8d %-6d %12.2f %12.2f %7.2fx\n", n, reps, serial, parallel,
                    serial / parallel);
    }

    // end-to-end tile preparation, both policies
    const Circuit tile = neqr_build({{0, 100, 200, 255}});
    for (auto policy : {kernels::Policy::Serial, kernels::Policy::Parallel}) {
        const auto t0 = std::chrono::steady_clock::now();
        for (int r = 0; r < 2000; ++r) {
            StateVector psi(10);
            psi.set_policy(policy);
            for (const Instruction& in : tile.instructions)
                psi.apply(tile.resolve_gate(in.gate, in.param), std::span<const int>(in.targets),
                          std::span<const int>(in.controls),
                          std::span<const int>(in.anticontrols));
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        std::printf("tile prep x2000 (%s): %.2f ms\n",
                    policy == kernels::Policy::Serial ? "serial" : "parallel", ms);
    }
    return 0;
}
