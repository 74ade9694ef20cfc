#include <doctest.h>

#include <random>

#include "qimp/circuit/run.hpp"
#include "qimp/emit/emit.hpp"
#include "qimp/neqr/neqr.hpp"
#include "test_util.hpp"

using namespace qimp;

namespace {
const CapabilityProfile kSim = profiles::dialect_b_sim();
}

TEST_CASE("anticontrolled CCNOT emits the X sandwich") {
    Circuit c(10, 0);
    c.gate("X", {5}, {8}, {9});
    const DialectText text = emit(c, Dialect::Quil, kSim);
    REQUIRE(text.lines.size() == 4);  // RESET + 3 instruction lines
    CHECK(text.lines[0] == "RESET");
    CHECK(text.lines[1] == "X 9");
    CHECK(text.lines[2] == "CCNOT 9 8 5");
    CHECK(text.lines[3] == "X 9");
}

TEST_CASE("empty circuit emits headers only") {
    Circuit c(1, 0);
    const DialectText quil = emit(c, Dialect::Quil, kSim);
    CHECK(quil.lines == std::vector<std::string>{"RESET"});

    const DialectText qasm = emit(c, Dialect::Qasm, kSim);
    CHECK(qasm.lines == std::vector<std::string>{"OPENQASM 2.0;", "include \"qelib1.inc\";",
                                                 "qreg q[1];"});
}

TEST_CASE("emission is deterministic") {
    const Circuit c = neqr_teleport_circuit({{0, 100, 200, 255}});
    CHECK(emit(c, Dialect::Quil, kSim).str() == emit(c, Dialect::Quil, kSim).str());
    CHECK(emit(c, Dialect::Qasm, kSim).str() == emit(c, Dialect::Qasm, kSim).str());
}

TEST_CASE("parse accepts CCNOT and rejects unknown mnemonics") {
    const Circuit c = parse(Dialect::Quil, "CCNOT 9 8 5\n");
    REQUIRE(c.instructions.size() == 1);
    CHECK(c.instructions[0].gate == "X");
    CHECK(c.instructions[0].controls == std::vector<int>{9, 8});
    CHECK(c.instructions[0].targets == std::vector<int>{5});
    CHECK(c.n_qubits == 10);

    try {
        parse(Dialect::Quil, "CNOT 1 2\nCNOTT 1 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("round trip: 50 random circuits, both dialects") {
    std::mt19937_64 rng(7070);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c = testutil::random_circuit(5, 14, rng);
        // anchor the top qubit so the quil width inference cannot shrink it
        c.gate("I", {4});
        const StateVector want = run_deferred(c);
        for (Dialect d : {Dialect::Quil, Dialect::Qasm}) {
            const Circuit back = parse(emit(c, d, kSim));
            const StateVector got = run_deferred(back);
            CHECK(testutil::state_distance_padded(want, got) < 1e-9);
        }
    }
}

TEST_CASE("RY survives the round trip at 12 digits") {
    Circuit c(1, 0);
    c.ry(1.2345678901234567, 0);
    for (Dialect d : {Dialect::Quil, Dialect::Qasm}) {
        const Circuit back = parse(emit(c, d, kSim));
        REQUIRE(back.instructions.size() == 1);
        CHECK(back.instructions[0].param == doctest::Approx(1.2345678901234567).epsilon(1e-11));
    }
}

TEST_CASE("measure and conditional round trip through both dialects") {
    Circuit c(2, 2);
    c.h(0).measure(0, 0).cond_gate(0, "X", {1}).measure(1, 1);
    for (Dialect d : {Dialect::Quil, Dialect::Qasm}) {
        const Circuit back = parse(emit(c, d, kSim));
        CHECK(back.n_clbits == 2);
        const StateVector a = run_deferred(c);
        const StateVector b = run_deferred(back);
        CHECK(testutil::state_distance_padded(a, b) < 1e-10);
    }
}

TEST_CASE("quil conditional uses the JUMP-WHEN block structure") {
    Circuit c(2, 1);
    c.measure(1, 0).cond_gate(0, "X", {0});
    const DialectText text = emit(c, Dialect::Quil, kSim);
    const std::vector<std::string> want = {
        "RESET",      "DECLARE r0 BIT[1]", "MEASURE 1 r0[0]", "JUMP-WHEN @THEN1 r0[0]",
        "JUMP @END2", "LABEL @THEN1",      "X 0",             "LABEL @END2",
    };
    CHECK(text.lines == want);
}

TEST_CASE("the tile-transform circuit round-trips through qasm") {
    Circuit c(4, 0);
    c.x(0).x(2).x(3);
    c.cx(0, 1).cx(0, 2).cx(0, 3);
    const DialectText text = emit(c, Dialect::Qasm, kSim);
    const Circuit back = parse(text);
    CHECK(testutil::state_distance(run_deferred(c), run_deferred(back)) < 1e-12);
    // outputs q0..q3 = 1,1,0,0 for the [1 0; 1 1] mosaic
    const StateVector psi = run_deferred(back);
    CHECK(std::abs(psi.amp(0b0011) - cdouble{1, 0}) < 1e-12);
}

TEST_CASE("emit refuses capability violations unless forced") {
    Circuit c(2, 1);
    c.h(0).measure(0, 0).cond_gate(0, "X", {1});
    CHECK_THROWS_AS(emit(c, Dialect::Qasm, profiles::dialect_a()), EmitError);

    const DialectText forced = emit(c, Dialect::Qasm, profiles::dialect_a(), true);
    bool has_comment = false;
    for (const std::string& l : forced.lines)
        if (l.rfind("// capability:", 0) == 0) has_comment = true;
    CHECK(has_comment);
}

TEST_CASE("unsupported control patterns raise EmitError") {
    Circuit c(3, 0);
    c.gate("H", {0}, {1, 2});
    CHECK_THROWS_AS(emit(c, Dialect::Quil, kSim), EmitError);
    CHECK_THROWS_AS(emit(c, Dialect::Qasm, kSim), EmitError);
}
