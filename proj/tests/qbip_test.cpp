#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qimp/circuit/run.hpp"
#include "qimp/imagepipe/image.hpp"
#include "qimp/qbip/qbip.hpp"
#include "test_util.hpp"

using namespace qimp;

TEST_CASE("cl2qu_simple produces exact basis states") {
    const StateVector zero = cl2qu_simple(0);
    CHECK(zero.amp(0) == cdouble{1, 0});
    const StateVector one = cl2qu_simple(1);
    CHECK(one.amp(1) == cdouble{1, 0});
    CHECK_THROWS_AS(cl2qu_simple(2), ParameterError);
}

TEST_CASE("cl2qu / qu2cl round trip over a 128x128 MSB plane") {
    const GrayImage img = gen_noise(128, 128, 31);
    const BitPlane msb = msb_plane(img);
    std::vector<int> bits(msb.bits.begin(), msb.bits.end());
    const std::vector<int> back = qu2cl(cl2qu_word(bits));
    CHECK(back == bits);
}

TEST_CASE("superdense interface lands on |b1 b2> with the printed stages") {
    const double r = 1.0 / std::sqrt(2.0);

    for (int b1 = 0; b1 < 2; ++b1) {
        for (int b2 = 0; b2 < 2; ++b2) {
            std::vector<StateVector> stages;
            const StateVector out = cl2qu_superdense(b1, b2, &stages);
            REQUIRE(stages.size() == 4);

            // after the conditional X
            const std::vector<cdouble> after_x =
                b2 ? std::vector<cdouble>{0, r, r, 0} : std::vector<cdouble>{r, 0, 0, r};
            // after the conditional Z
            std::vector<cdouble> after_z = after_x;
            if (b1) {
                after_z[2] = -after_z[2];
                after_z[3] = -after_z[3];
            }
            // after CNOT and after H, from the worked columns
            std::vector<cdouble> after_cnot, after_h;
            if (!b1 && !b2) {
                after_cnot = {r, 0, r, 0};
                after_h = {1, 0, 0, 0};
            } else if (b1 && !b2) {
                after_cnot = {r, 0, -r, 0};
                after_h = {0, 0, 1, 0};
            } else if (!b1 && b2) {
                after_cnot = {0, r, 0, r};
                after_h = {0, 1, 0, 0};
            } else {
                after_cnot = {0, r, 0, -r};
                after_h = {0, 0, 0, 1};
            }

            const std::vector<std::vector<cdouble>> want = {after_x, after_z, after_cnot, after_h};
            for (int s = 0; s < 4; ++s)
                for (int i = 0; i < 4; ++i)
                    CHECK(std::abs(stages[s].amp(i) - want[s][i]) < 1e-10);

            // outcome is exactly |b1 b2>: qubit1 = b1, qubit0 = b2
            const std::size_t idx = (static_cast<std::size_t>(b1) << 1) | b2;
            CHECK(std::abs(out.amp(idx) - cdouble{1, 0}) < 1e-10);
        }
    }
}

TEST_CASE("qu2cl reads basis words and rejects anything else") {
    CbsWord word = cl2qu_word({1, 0, 1});
    CHECK(qu2cl(word) == std::vector<int>{1, 0, 1});

    for (int b = 0; b < 2; ++b) {
        const std::vector<int> bits = qu2cl(CbsWord{cl2qu_simple(b)});
        CHECK(bits == std::vector<int>{b});
    }

    StateVector plus(1);
    plus.apply(gates::hadamard(), {0});
    CHECK_THROWS_AS(qu2cl(CbsWord{plus}), ContractViolation);
}

TEST_CASE("qbwt transforms the reference mosaic") {
    CHECK(qbwt({1, 0, 1, 1}) == BoolTile{1, 1, 0, 0});
    CHECK(qbwt({0, 0, 0, 0}) == BoolTile{0, 0, 0, 0});
    CHECK(iqbwt({1, 1, 0, 0}) == BoolTile{1, 0, 1, 1});
}

TEST_CASE("qbwt is a bijection and iqbwt its inverse on all 16 tiles") {
    std::set<BoolTile> images;
    for (int v = 0; v < 16; ++v) {
        const BoolTile t{(v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1};
        const BoolTile j = qbwt(t);
        images.insert(j);
        CHECK(iqbwt(j) == t);
        CHECK(j == oracle::qbwt_classical(t));
    }
    CHECK(images.size() == 16);
}

TEST_CASE("qbwt word level rejects non-basis inputs") {
    StateVector plus(1);
    plus.apply(gates::hadamard(), {0});
    CbsWord word{plus, cl2qu_simple(0), cl2qu_simple(0), cl2qu_simple(0)};
    CHECK_THROWS_AS(qbwt_word(word), ContractViolation);
}

TEST_CASE("qbwt planes") {
    BitPlane ones(8, 8);
    for (auto& b : ones.bits) b = 1;
    const BitPlane j = qbwt_plane(ones);
    for (const Tile2x2& t : tiles_2x2(j)) {
        CHECK(t.v[0] == 1);
        CHECK(t.v[1] == 0);
        CHECK(t.v[2] == 0);
        CHECK(t.v[3] == 0);
    }

    BitPlane zeros(8, 8);
    CHECK(qbwt_plane(zeros) == zeros);

    const GrayImage img = gen_noise(64, 64, 17);
    const BitPlane plane = msb_plane(img);
    CHECK(iqbwt_plane(qbwt_plane(plane)) == plane);
}

TEST_CASE("qbop of the worked example column") {
    const QbopResult r = qbop({1, 0, 1, 0});
    CHECK(r.j == BitColumn{1, 0, 0, 0});
    CHECK(r.k == BitColumn{1, 0, 1, 0});
    CHECK(qbop_reconstruct(r.j, r.k) == BitColumn{1, 0, 1, 0});

    CHECK(qbop({0, 0, 0, 0}).j == BitColumn{0, 0, 0, 0});
    CHECK(qbop({1, 1, 1, 1}).j == BitColumn{1, 0, 0, 0});
}

TEST_CASE("qbop exhaustive over all 256 columns") {
    for (int v = 0; v < 256; ++v) {
        BitColumn column(8);
        for (int d = 0; d < 8; ++d) column[d] = (v >> (7 - d)) & 1;
        const QbopResult r = qbop(column);

        // pairwise orthogonality of J
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b) CHECK((r.j[a] & r.j[b]) == 0);

        // J or K recovers the input
        CHECK(qbop_reconstruct(r.j, r.k) == column);

        // J is the indicator of the most significant set bit
        BitColumn onehot(8, 0);
        for (int d = 0; d < 8; ++d)
            if (column[d]) {
                onehot[d] = 1;
                break;
            }
        CHECK(r.j == onehot);

        // gate-level result equals the plain-integer evaluation
        std::vector<int> oj, ok;
        oracle::qbop_classical(column, oj, ok);
        CHECK(r.j == oj);
        CHECK(r.k == ok);
    }
}

TEST_CASE("per-gate execution agrees with a monolithic 12-qubit register") {
    // I on qubits 0..3, J on 4..7, K on 8..11
    for (int v : {0b1010, 0b1111, 0b0001, 0b0110}) {
        BitColumn column(4);
        for (int d = 0; d < 4; ++d) column[d] = (v >> (3 - d)) & 1;

        Circuit c(12, 0);
        for (int d = 0; d < 4; ++d)
            if (column[d]) c.x(d);
        c.cx(0, 4);
        c.cx(4, 8);
        for (int i = 1; i < 4; ++i) {
            for (int p = 0; p < i; ++p) c.ccx(i, 4 + p, 8 + i);
            c.cx(i, 4 + i);
            c.cx(8 + i, 4 + i);
        }
        const StateVector psi = run_deferred(c);
        std::size_t basis = 0;
        for (std::size_t i = 0; i < psi.dim(); ++i)
            if (std::norm(psi.amp(i)) > 0.5) basis = i;

        const QbopResult r = qbop(column);
        for (int d = 0; d < 4; ++d) {
            CHECK(static_cast<int>((basis >> (4 + d)) & 1) == r.j[d]);
            CHECK(static_cast<int>((basis >> (8 + d)) & 1) == r.k[d]);
        }
    }
}

TEST_CASE("qbop planes: one-hot columns and mid-gray dithering") {
    const GrayImage img = gen_noise(16, 16, 23);
    auto sliced = bit_slice(img);
    std::vector<BitPlane> msb_first(sliced.rbegin(), sliced.rend());
    const QbopPlanes out = qbop_planes(msb_first);
    REQUIRE(out.j.size() == 8);

    for (int r = 0; r < 16; ++r)
        for (int cidx = 0; cidx < 16; ++cidx) {
            int set = 0;
            for (int d = 0; d < 8; ++d) set += out.j[d].at(r, cidx);
            CHECK(set <= 1);
        }

    // zero image
    const GrayImage black(4, 4, 0);
    auto zsliced = bit_slice(black);
    std::vector<BitPlane> zplanes(zsliced.rbegin(), zsliced.rend());
    const QbopPlanes zout = qbop_planes(zplanes);
    for (const BitPlane& p : zout.j)
        for (auto b : p.bits) CHECK(b == 0);
    for (const BitPlane& p : zout.k)
        for (auto b : p.bits) CHECK(b == 0);

    // constant 128: J reassembles to the same constant (MSB only)
    const GrayImage gray(4, 4, 128);
    auto gsliced = bit_slice(gray);
    std::vector<BitPlane> gplanes(gsliced.rbegin(), gsliced.rend());
    const QbopPlanes gout = qbop_planes(gplanes);
    std::array<BitPlane, 8> j_by_bit;
    for (int d = 0; d < 8; ++d) {
        j_by_bit[7 - d] = gout.j[d];
        j_by_bit[7 - d].plane_index = 7 - d;
    }
    CHECK(bit_reassemble(j_by_bit) == gray);
}
