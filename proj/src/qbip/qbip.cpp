#include "qimp/qbip/qbip.hpp"

#include <cmath>

#include "qimp/simcore/errors.hpp"
#include "qimp/simcore/measurement.hpp"

namespace qimp {

bool is_cbs(const StateVector& qubit, double tol) {
    if (qubit.n_qubits() != 1) return false;
    const double off = std::min(std::abs(qubit.amp(0)), std::abs(qubit.amp(1)));
    return off <= tol;
}

StateVector cl2qu_simple(int bit) {
    if (bit != 0 && bit != 1) throw ParameterError("bit must be 0 or 1");
    StateVector q(1);
    if (bit) q.apply(gates::pauli_x(), {0});
    return q;
}

CbsWord cl2qu_word(const std::vector<int>& bits) {
    CbsWord word;
    word.reserve(bits.size());
    for (int b : bits) word.push_back(cl2qu_simple(b));
    return word;
}

namespace {

int cbs_bit(const StateVector& qubit) {
    if (!is_cbs(qubit)) throw ContractViolation("qubit is not a computational basis state");
    return std::abs(qubit.amp(1)) > std::abs(qubit.amp(0)) ? 1 : 0;
}

// Join the slots into one register (slot i becomes qubit i), run the gate,
// verify the register is still a single basis state, split back. Permutation
// gates on CBS inputs keep this exact; anything else trips the contract.
void run_cbs_gate(std::vector<StateVector*> slots, const GateMatrix& g,
                  const std::vector<int>& targets, const std::vector<int>& controls = {}) {
    StateVector joined = *slots[0];
    for (std::size_t i = 1; i < slots.size(); ++i) joined = kron(*slots[i], joined);
    joined.apply(g, std::span<const int>(targets), std::span<const int>(controls));

    std::size_t basis = joined.dim();
    for (std::size_t i = 0; i < joined.dim(); ++i) {
        if (std::norm(joined.amp(i)) >= 1.0 - 1e-9) {
            basis = i;
            break;
        }
    }
    if (basis == joined.dim())
        throw ContractViolation("gate output left the computational basis");
    for (std::size_t i = 0; i < slots.size(); ++i)
        *slots[i] = cl2qu_simple((basis >> i) & 1);
}

void cbs_cnot(StateVector& control, StateVector& target) {
    run_cbs_gate({&control, &target}, gates::pauli_x(), {1}, {0});
}

void cbs_ccnot(StateVector& c0, StateVector& c1, StateVector& target) {
    run_cbs_gate({&c0, &c1, &target}, gates::pauli_x(), {2}, {0, 1});
}

}  // namespace

StateVector cl2qu_superdense(int b1, int b2, std::vector<StateVector>* stages) {
    if ((b1 | b2) & ~1) throw ParameterError("bits must be 0 or 1");

    // qubit 1 is the first tensor factor (the wire carrying b1).
    StateVector psi(2);
    psi.apply(gates::hadamard(), {1});
    psi.apply(gates::pauli_x(), {0}, {1});  // Bell pair
    if (b2) psi.apply(gates::pauli_x(), {1});
    if (stages) stages->push_back(psi);
    if (b1) psi.apply(gates::pauli_z(), {1});
    if (stages) stages->push_back(psi);
    psi.apply(gates::pauli_x(), {0}, {1});
    if (stages) stages->push_back(psi);
    psi.apply(gates::hadamard(), {1});
    if (stages) stages->push_back(psi);
    return psi;
}

std::vector<int> qu2cl(const CbsWord& word) {
    std::vector<int> bits;
    bits.reserve(word.size());
    for (const StateVector& q : word) {
        const int bit = cbs_bit(q);
        // z-axis measurement of a CBS is deterministic and non-destructive
        Rng rng(0);
        auto [outcome, post] = measure_qubit(q, 0, rng);
        if (outcome != bit || !is_cbs(post))
            throw InternalError("CBS measurement altered the state");
        bits.push_back(bit);
    }
    return bits;
}

void qbwt_word(CbsWord& word) {
    if (word.size() != 4) throw StructuralError("tile word needs 4 qubits");
    for (const StateVector& q : word)
        if (!is_cbs(q)) throw ContractViolation("tile word is not CBS");
    cbs_cnot(word[0], word[1]);
    cbs_cnot(word[0], word[2]);
    cbs_cnot(word[0], word[3]);
}

void iqbwt_word(CbsWord& word) {
    if (word.size() != 4) throw StructuralError("tile word needs 4 qubits");
    for (const StateVector& q : word)
        if (!is_cbs(q)) throw ContractViolation("tile word is not CBS");
    cbs_cnot(word[0], word[3]);
    cbs_cnot(word[0], word[2]);
    cbs_cnot(word[0], word[1]);
}

BoolTile qbwt(const BoolTile& tile) {
    CbsWord word = cl2qu_word({tile[0], tile[1], tile[2], tile[3]});
    qbwt_word(word);
    const std::vector<int> bits = qu2cl(word);
    return {bits[0], bits[1], bits[2], bits[3]};
}

BoolTile iqbwt(const BoolTile& tile) {
    CbsWord word = cl2qu_word({tile[0], tile[1], tile[2], tile[3]});
    iqbwt_word(word);
    const std::vector<int> bits = qu2cl(word);
    return {bits[0], bits[1], bits[2], bits[3]};
}

namespace {

template <typename TileFn>
BitPlane plane_by_tiles(const BitPlane& plane, TileFn&& fn) {
    BitPlane out(plane.rows, plane.cols, plane.plane_index, plane.channel);
    for (const Tile2x2& t : tiles_2x2(plane)) {
        const BoolTile j = fn({t.v[0], t.v[1], t.v[2], t.v[3]});
        Tile2x2 written = t;
        for (int i = 0; i < 4; ++i) written.v[i] = static_cast<std::uint8_t>(j[i]);
        put_tile(out, written);
    }
    return out;
}

}  // namespace

BitPlane qbwt_plane(const BitPlane& plane) {
    return plane_by_tiles(plane, [](const BoolTile& t) { return qbwt(t); });
}

BitPlane iqbwt_plane(const BitPlane& plane) {
    return plane_by_tiles(plane, [](const BoolTile& t) { return iqbwt(t); });
}

QbopResult qbop(const BitColumn& column) {
    const std::size_t d = column.size();
    if (d == 0) throw StructuralError("empty column");

    CbsWord in = cl2qu_word(column);
    CbsWord j = cl2qu_word(BitColumn(d, 0));
    CbsWord k = cl2qu_word(BitColumn(d, 0));

    cbs_cnot(in[0], j[0]);
    cbs_cnot(j[0], k[0]);  // K^0 = J^0
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t p = 0; p < i; ++p) cbs_ccnot(in[i], j[p], k[i]);
        cbs_cnot(in[i], j[i]);
        cbs_cnot(k[i], j[i]);
    }
    return {qu2cl(j), qu2cl(k)};
}

BitColumn qbop_reconstruct(const BitColumn& j, const BitColumn& k) {
    if (j.size() != k.size()) throw StructuralError("column lengths differ");
    BitColumn out(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out[i] = j[i] | k[i];
    return out;
}

QbopPlanes qbop_planes(const std::vector<BitPlane>& planes) {
    if (planes.empty()) throw StructuralError("no planes");
    const int rows = planes[0].rows, cols = planes[0].cols;
    for (const BitPlane& p : planes)
        if (p.rows != rows || p.cols != cols) throw StructuralError("plane shapes differ");

    QbopPlanes out;
    out.j.reserve(planes.size());
    out.k.reserve(planes.size());
    for (const BitPlane& p : planes) {
        out.j.emplace_back(rows, cols, p.plane_index, p.channel);
        out.k.emplace_back(rows, cols, p.plane_index, p.channel);
    }

    const std::int64_t total = static_cast<std::int64_t>(rows) * cols;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
        BitColumn column(planes.size());
        for (std::size_t d = 0; d < planes.size(); ++d) column[d] = planes[d].bits[i];
        const QbopResult r = qbop(column);
        for (std::size_t d = 0; d < planes.size(); ++d) {
            out.j[d].bits[i] = static_cast<std::uint8_t>(r.j[d]);
            out.k[d].bits[i] = static_cast<std::uint8_t>(r.k[d]);
        }
    }
    return out;
}

}  // namespace qimp
