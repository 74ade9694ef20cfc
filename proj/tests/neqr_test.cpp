#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qimp/circuit/passes.hpp"
#include "qimp/circuit/run.hpp"
#include "qimp/imagepipe/image.hpp"
#include "qimp/neqr/neqr.hpp"
#include "qimp/simcore/density_matrix.hpp"
#include "test_util.hpp"

using namespace qimp;

namespace {
const NeqrTile kReferenceTile{{0, 100, 200, 255}};
}

TEST_CASE("reference tile: four 0.5 amplitudes at the golden indices") {
    const StateVector psi = run_deferred(neqr_build(kReferenceTile));
    // q9..q0: 0000000000, 0100100110, 1000010011, 1111111111
    const std::size_t want[4] = {0, 294, 531, 1023};
    for (std::size_t idx : want) CHECK(std::abs(psi.amp(idx) - cdouble{0.5, 0}) < 1e-9);
    int nonzero = 0;
    for (std::size_t i = 0; i < psi.dim(); ++i)
        if (std::abs(psi.amp(i)) > 1e-9) ++nonzero;
    CHECK(nonzero == 4);
}

TEST_CASE("reference tile circuit: 2 Hadamards plus 14 doubly-controlled X") {
    const Circuit c = neqr_build(kReferenceTile);
    int h = 0, ccx = 0;
    for (const Instruction& in : c.instructions) {
        if (in.gate == "H") ++h;
        if (in.gate == "X" && in.controls.size() + in.anticontrols.size() == 2) ++ccx;
    }
    CHECK(h == 2);
    CHECK(ccx == 14);
    CHECK(c.instructions.size() == 16);
}

TEST_CASE("all-zero tile leaves value qubits in |0>") {
    const StateVector psi = run_deferred(neqr_build({{0, 0, 0, 0}}));
    const auto m = neqr_marginals(psi);
    for (int q = 0; q < 8; ++q) CHECK(m[q] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m[8] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m[9] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("all-255 tile sets every value qubit in every branch") {
    const StateVector psi = run_deferred(neqr_build({{255, 255, 255, 255}}));
    const auto m = neqr_marginals(psi);
    for (int q = 0; q < 8; ++q) CHECK(m[q] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reference tile marginals match the tabulated values") {
    const StateVector psi = run_deferred(neqr_build(kReferenceTile));
    const auto m = neqr_marginals(psi);
    const double want[10] = {0.5, 0.75, 0.5, 0.25, 0.5, 0.5, 0.25, 0.25, 0.5, 0.5};
    for (int q = 0; q < 10; ++q) CHECK(m[q] == doctest::Approx(want[q]).epsilon(1e-10));
}

TEST_CASE("constructed state equals the analytic superposition for random tiles") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> gray(0, 255);
    for (int trial = 0; trial < 200; ++trial) {
        const NeqrTile tile{{gray(rng), gray(rng), gray(rng), gray(rng)}};
        const StateVector psi = run_deferred(neqr_build(tile));
        std::vector<cdouble> want(1 << 10, cdouble{0, 0});
        for (int y = 0; y < 2; ++y)
            for (int x = 0; x < 2; ++x) want[neqr_branch_index(tile, y, x)] += 0.5;
        for (std::size_t i = 0; i < psi.dim(); ++i) CHECK(std::abs(psi.amp(i) - want[i]) < 1e-10);
    }
}

TEST_CASE("position register mixedness tracks value collisions") {
    const int keep[] = {8, 9};
    const StateVector distinct = run_deferred(neqr_build(kReferenceTile));
    const DensityMatrix rho_distinct = partial_trace(distinct, keep);
    CHECK(rho_distinct.purity() == doctest::Approx(0.25).epsilon(1e-10));

    const StateVector equal = run_deferred(neqr_build({{7, 7, 7, 7}}));
    const DensityMatrix rho_equal = partial_trace(equal, keep);
    CHECK(rho_equal.purity() == doctest::Approx(1.0).epsilon(1e-10));

    const StateVector two = run_deferred(neqr_build({{7, 7, 9, 9}}));
    CHECK(partial_trace(two, keep).purity() > 0.25);

    // against the dense oracle
    const Eigen::MatrixXcd expect =
        oracle::partial_trace_dense(oracle::to_eigen(distinct), 10, {8, 9});
    CHECK((rho_distinct.mat() - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("reduced state of q3 of the reference tile") {
    const StateVector psi = run_deferred(neqr_build(kReferenceTile));
    const int keep[] = {3};
    const DensityMatrix rho = partial_trace(psi, keep);
    CHECK(std::abs(rho.mat()(0, 0) - cdouble{0.75, 0}) < 1e-10);
    CHECK(std::abs(rho.mat()(1, 1) - cdouble{0.25, 0}) < 1e-10);
}

TEST_CASE("marginals reproduce the tabulated display angles") {
    // The tabulated per-qubit angles render each marginal as the polar
    // angle of an equivalent pure state: theta = 2 asin(sqrt(P(1))).
    const StateVector psi = run_deferred(neqr_build(kReferenceTile));
    const auto m = neqr_marginals(psi);
    const double want_deg[10] = {90, 120, 90, 60, 90, 90, 60, 60, 90, 90};
    for (int q = 0; q < 10; ++q) {
        const double deg = 2.0 * std::asin(std::sqrt(m[q])) * 180.0 / M_PI;
        CHECK(deg == doctest::Approx(want_deg[q]).epsilon(1e-9));
    }
}

TEST_CASE("entanglement grid matches the brute-force oracle") {
    const StateVector psi = run_deferred(neqr_build(kReferenceTile));
    const auto grid = neqr_entanglement_matrix(psi);
    const Eigen::VectorXcd dense = oracle::to_eigen(psi);
    for (int i = 0; i < 10; ++i) {
        CHECK(grid[i][i] == -1.0);
        for (int j = i + 1; j < 10; ++j) {
            const double want =
                oracle::concurrence_dense(oracle::partial_trace_dense(dense, 10, {i, j}));
            CHECK(grid[i][j] == doctest::Approx(want).epsilon(1e-8));
            CHECK(grid[j][i] == grid[i][j]);
        }
    }
}

TEST_CASE("entanglement grid of the all-zero tile vanishes") {
    const StateVector psi = run_deferred(neqr_build({{0, 0, 0, 0}}));
    const auto grid = neqr_entanglement_matrix(psi);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 10; ++j) CHECK(grid[i][j] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("anticontrol lowering leaves the tile state untouched") {
    const Circuit c = neqr_build(kReferenceTile);
    const StateVector a = run_deferred(c);
    const StateVector b = run_deferred(lower_anticontrols(c));
    CHECK(testutil::state_distance(a, b) < 1e-10);
}

TEST_CASE("teleport test reproduces the appendix record") {
    const TeleportReport r = neqr_teleport_test(kReferenceTile);
    CHECK(r.golden_pass);
    REQUIRE(r.amplitudes.size() == 4);
    CHECK(r.amplitudes[0].bitstring == "0000000000000");
    CHECK(r.amplitudes[1].bitstring == "0000100100110");
    CHECK(r.amplitudes[2].bitstring == "1000000010010");
    CHECK(r.amplitudes[3].bitstring == "1000111111110");
    CHECK(std::abs(r.amplitudes[0].amp - cdouble{0.6035533906, 0.25}) < 1e-8);
    CHECK(std::abs(r.amplitudes[2].amp - cdouble{0.25, -0.1035533906}) < 1e-8);
    CHECK(r.amplitudes[0].probability == doctest::Approx(0.4267766953).epsilon(1e-8));
    CHECK(r.amplitudes[2].probability == doctest::Approx(0.0732233047).epsilon(1e-8));
    CHECK(r.destination_p1 == doctest::Approx(0.1464466094).epsilon(1e-8));
    CHECK(r.destination_p0 == doctest::Approx(0.8535533906).epsilon(1e-8));

    // negative control: an uncorrelated channel pair misses the payload
    CHECK(r.negative_control_deviates);
    CHECK(r.negative_control_p1 == doctest::Approx(0.5).epsilon(1e-8));

    // determinism of the serialized report
    CHECK(r.to_json() == neqr_teleport_test(kReferenceTile).to_json());
}

TEST_CASE("tile recovery samples are value-consistent and sparse") {
    const GrayImage img = gen_noise(64, 64, 42);  // 1024 tiles
    const NeqrRecovery rec = neqr_measure_recover(img, 7);
    REQUIRE(rec.log.samples.size() == 1024);

    long zeros = 0;
    for (auto p : rec.image.pixels)
        if (p == 0) ++zeros;
    CHECK(zeros >= rec.image.pixels.size() * 3 / 4);

    for (const NeqrSample& s : rec.log.samples) {
        CHECK(s.value == img.at(s.tile_row + s.y, s.tile_col + s.x));
        CHECK(rec.image.at(s.tile_row + s.y, s.tile_col + s.x) == s.value);
    }
}

TEST_CASE("sampled positions are uniform over 4096 tiles") {
    const GrayImage img = gen_noise(128, 128, 5);  // 4096 tiles
    const NeqrRecovery rec = neqr_measure_recover(img, 11);
    REQUIRE(rec.log.samples.size() == 4096);
    double y1 = 0, x1 = 0;
    for (const NeqrSample& s : rec.log.samples) {
        y1 += s.y;
        x1 += s.x;
    }
    CHECK(std::abs(y1 / 4096.0 - 0.5) < 0.03);
    CHECK(std::abs(x1 / 4096.0 - 0.5) < 0.03);
}

TEST_CASE("tile values outside range are rejected") {
    CHECK_THROWS_AS(neqr_build({{0, 0, 0, 256}}), ParameterError);
    CHECK_THROWS_AS(neqr_build({{-1, 0, 0, 0}}), ParameterError);
}
