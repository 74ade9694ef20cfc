#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "qimp/circuit/capability.hpp"
#include "qimp/circuit/passes.hpp"
#include "qimp/circuit/run.hpp"
#include "qimp/circuit/serialize.hpp"
#include "qimp/neqr/neqr.hpp"
#include "test_util.hpp"

using namespace qimp;

TEST_CASE("validate flags a non-unitary custom gate") {
    Circuit c(1, 0);
    c.extra_gates["P0"] = GateMatrix{1, {1, 0, 0, 0}, "P0"};  // (I+Z)/2
    c.gate("P0", {0});
    const auto diags = validate(c);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("non-unitary") != std::string::npos);

    CHECK_THROWS_AS(run_deferred(c), ValidationError);
}

TEST_CASE("validate accepts a plain H/X/CNOT circuit and is idempotent") {
    Circuit c(2, 0);
    c.h(0).x(1).cx(0, 1);
    CHECK(validate(c).empty());
    const Circuit copy = c;
    CHECK(validate(c).empty());
    CHECK(c.instructions == copy.instructions);
}

TEST_CASE("validate flags a conditional on an unwritten classical bit") {
    Circuit c(2, 1);
    c.cond_gate(0, "X", {1});
    const auto diags = validate(c);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("before any measure") != std::string::npos);
}

TEST_CASE("validate flags range and overlap errors") {
    Circuit c(2, 1);
    c.gate("X", {0}, {0});
    c.gate("X", {5});
    c.measure(0, 3);
    CHECK(validate(c).size() == 3);
}

TEST_CASE("lower_anticontrols produces the X sandwich") {
    Circuit c(3, 0);
    c.gate("X", {0}, {1}, {2});
    const Circuit low = lower_anticontrols(c);
    REQUIRE(low.instructions.size() == 3);
    CHECK(low.instructions[0].gate == "X");
    CHECK(low.instructions[0].targets == std::vector<int>{2});
    CHECK(low.instructions[1].controls == std::vector<int>{2, 1});
    CHECK(low.instructions[1].anticontrols.empty());
    CHECK(low.instructions[2].targets == std::vector<int>{2});

    Circuit plain(2, 0);
    plain.h(0).cx(0, 1);
    CHECK(lower_anticontrols(plain).instructions == plain.instructions);
}

TEST_CASE("lowering preserves semantics on random circuits") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit c = testutil::random_circuit(5, 15, rng);
        const StateVector a = run_deferred(c);
        const StateVector b = run_deferred(lower_anticontrols(c));
        CHECK(testutil::state_distance(a, b) < 1e-10);
    }
}

TEST_CASE("defer_measurements basics") {
    // no measures: unchanged
    Circuit plain(2, 0);
    plain.h(0).cx(0, 1);
    CHECK(defer_measurements(plain).instructions == plain.instructions);

    // measure + conditional X fed by |+>: destination marginal 1/2
    Circuit c(2, 1);
    c.h(0).measure(0, 0).cond_gate(0, "X", {1});
    const StateVector psi = run_deferred(c);
    CHECK(marginal_prob_one(psi, 1) == doctest::Approx(0.5).epsilon(1e-12));
    const auto oracle_marginals = oracle::enumerate_marginals(c);
    CHECK(oracle_marginals[1] == doctest::Approx(0.5).epsilon(1e-12));

    // a classical bit written twice cannot be deferred
    Circuit twice(2, 1);
    twice.h(0).measure(0, 0).measure(1, 0).cond_gate(0, "X", {1});
    CHECK_THROWS_AS(defer_measurements(twice), StructuralError);

    // gating a measured qubit afterwards cannot be deferred
    Circuit regate(2, 1);
    regate.h(0).measure(0, 0).h(0).cond_gate(0, "X", {1});
    CHECK_THROWS_AS(defer_measurements(regate), StructuralError);
}

TEST_CASE("defer_measurements drops only leading resets") {
    Circuit c(2, 1);
    c.reset().h(0).measure(0, 0).cond_gate(0, "X", {1});
    CHECK_NOTHROW(run_deferred(c));

    Circuit mid(2, 1);
    mid.h(0).reset({0}).measure(0, 0);
    CHECK_THROWS_AS(defer_measurements(mid), StructuralError);
}

TEST_CASE("deferred marginals equal enumerated outcome statistics") {
    std::mt19937_64 rng(456);
    std::uniform_int_distribution<int> qubit(0, 3);
    for (int trial = 0; trial < 15; ++trial) {
        Circuit c = testutil::random_circuit(4, 10, rng);
        c.n_clbits = 2;
        // a measure + conditional block in the middle, gate tail on other qubits
        const int mq = qubit(rng);
        c.measure(mq, 0);
        int tq = qubit(rng);
        while (tq == mq) tq = qubit(rng);
        c.cond_gate(0, "X", {tq});
        const int mq2 = tq;  // reuse as second measured qubit
        c.measure(mq2, 1);
        int tq2 = qubit(rng);
        while (tq2 == mq2 || tq2 == mq) tq2 = qubit(rng);
        c.cond_gate(1, "Z", {tq2});

        const StateVector deferred = run_deferred(c);
        const auto enumerated = oracle::enumerate_marginals(c);
        for (int q = 0; q < 4; ++q)
            CHECK(marginal_prob_one(deferred, q) == doctest::Approx(enumerated[q]).epsilon(1e-9));
    }
}

TEST_CASE("deferred teleportation reproduces the destination marginal") {
    const TeleportReport r = neqr_teleport_test({{0, 100, 200, 255}});
    CHECK(r.destination_p1 == doctest::Approx(0.1464466094).epsilon(1e-8));
}

TEST_CASE("runs accept an explicit initial state") {
    Circuit c(1, 0);
    c.x(0);
    StateVector one(1);
    one.apply(gates::pauli_x(), {0});
    const StateVector back = run_deferred(c, &one);
    CHECK(std::abs(back.amp(0) - cdouble{1, 0}) < 1e-12);  // X|1> = |0>

    const auto counts = run_sampled(c, 10, 3, &one);
    CHECK(counts.at("0") == 10);

    StateVector wide(2);
    CHECK_THROWS_AS(run_deferred(c, &wide), StructuralError);
}

TEST_CASE("sampled run of the empty circuit") {
    Circuit c(3, 0);
    const auto counts = run_sampled(c, 50, 9);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("000") == 50);
}

TEST_CASE("sampled Bell pair: only 00 and 11, near-even split") {
    Circuit c(2, 0);
    c.h(0).cx(0, 1);
    const long shots = 8192;
    const auto counts = run_sampled(c, shots, 7);
    long seen = 0;
    for (const auto& [key, n] : counts) {
        CHECK((key == "00" || key == "11"));
        seen += n;
    }
    CHECK(seen == shots);
    CHECK(std::abs(counts.at("00") / double(shots) - 0.5) < 0.02);
    CHECK(std::abs(counts.at("11") / double(shots) - 0.5) < 0.02);
}

TEST_CASE("sampled frequencies converge to analytic amplitudes") {
    std::mt19937_64 rng(88);
    const Circuit c = testutil::random_circuit(4, 12, rng);
    const StateVector psi = run_deferred(c);
    const long shots = 16384;
    const auto counts = run_sampled(c, shots, 5);
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        const double want = std::norm(psi.amp(idx));
        const auto it = counts.find(StateVector::bitstring(idx, 4));
        const double got = it == counts.end() ? 0.0 : it->second / double(shots);
        CHECK(std::abs(got - want) < 0.02);
    }
}

TEST_CASE("sampled run executes reset as measure plus conditional X") {
    Circuit c(1, 1);
    c.h(0).reset({0}).measure(0, 0);
    const auto counts = run_sampled(c, 200, 17);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("0") == 200);
}

TEST_CASE("capability checks against the shipped profiles") {
    const CapabilityProfile a = profiles::dialect_a();
    const CapabilityProfile b = profiles::dialect_b();

    Circuit mid_reset(2, 1);
    mid_reset.h(0).reset({0});
    CHECK(capability_check(mid_reset, a).size() == 1);
    CHECK(capability_check(mid_reset, b).size() == 1);  // start-only

    Circuit start_reset(2, 1);
    start_reset.reset().h(0);
    CHECK(capability_check(start_reset, b).empty());
    CHECK(capability_check(start_reset, a).size() == 1);  // no reset at all

    Circuit barriered(2, 0);
    barriered.h(0).barrier().x(1);
    CHECK(capability_check(barriered, a).empty());
    CHECK(capability_check(barriered, b).size() == 1);

    Circuit conditional(2, 1);
    conditional.h(0).measure(0, 0).cond_gate(0, "X", {1});
    CHECK(!capability_check(conditional, a).empty());
    CHECK(!capability_check(conditional, b).empty());
    CHECK(capability_check(conditional, profiles::dialect_b_sim()).empty());
}

TEST_CASE("profiles load from JSON") {
    const std::string path = "profile_test.json";
    {
        std::ofstream out(path);
        out << R"({"name":"custom","allows_barrier":false,"allows_reset":"start-only",)"
            << R"("allows_conditional":"simulator-only","allows_mid_circuit_measure":true})";
    }
    const CapabilityProfile p = profiles::from_json_file(path);
    CHECK(p.name == "custom");
    CHECK_FALSE(p.allows_barrier);
    CHECK(p.allows_reset == ResetPolicy::StartOnly);
    CHECK(p.allows_conditional == ConditionalPolicy::SimulatorOnly);
    std::remove(path.c_str());
}

TEST_CASE("circuit JSON round trip") {
    Circuit c(3, 2);
    c.h(0).ry(0.75, 1).gate("X", {2}, {0}, {1}).measure(0, 0).cond_gate(0, "Z", {1}).barrier();
    const Circuit back = circuit_from_json(circuit_to_json(c));
    CHECK(back.n_qubits == c.n_qubits);
    CHECK(back.n_clbits == c.n_clbits);
    CHECK(back.instructions == c.instructions);
}
