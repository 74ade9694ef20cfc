#include <doctest.h>

#include <random>

#include "qimp/simcore/kernels.hpp"
#include "qimp/simcore/state_vector.hpp"
#include "test_util.hpp"

using namespace qimp;

// The OpenMP kernels must agree with the serial reference bit for bit on
// the same inputs; the reference is the ground truth.
TEST_CASE("parallel kernels match the serial reference") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 5);  // 6..10 qubits
        const Circuit c = testutil::random_circuit(n, 25, rng);

        StateVector serial = testutil::random_state(n, rng);
        StateVector parallel = serial;
        serial.set_policy(kernels::Policy::Serial);
        parallel.set_policy(kernels::Policy::Parallel);

        for (const Instruction& in : c.instructions) {
            const GateMatrix g = c.resolve_gate(in.gate, in.param);
            serial.apply(g, std::span<const int>(in.targets), std::span<const int>(in.controls),
                         std::span<const int>(in.anticontrols));
            parallel.apply(g, std::span<const int>(in.targets), std::span<const int>(in.controls),
                           std::span<const int>(in.anticontrols));
        }
        CHECK(testutil::state_distance(serial, parallel) < 1e-13);

        for (int q = 0; q < n; ++q) {
            const double ps = kernels::prob_one_serial(serial.amps(), q);
            const double pp = kernels::prob_one_omp(parallel.amps(), q);
            CHECK(ps == doctest::Approx(pp).epsilon(1e-12));
        }
        CHECK(kernels::norm_sq_serial(serial.amps()) ==
              doctest::Approx(kernels::norm_sq_omp(parallel.amps())).epsilon(1e-12));
    }
}

TEST_CASE("collapse kernels agree") {
    std::mt19937_64 rng(123);
    StateVector psi = testutil::random_state(8, rng);
    std::vector<cdouble> a(psi.amps().begin(), psi.amps().end());
    std::vector<cdouble> b = a;
    kernels::collapse_serial(a, 3, 1, 2.0);
    kernels::collapse_omp(b, 3, 1, 2.0);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
