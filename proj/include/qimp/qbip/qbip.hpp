#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qimp/imagepipe/bitplane.hpp"
#include "qimp/simcore/state_vector.hpp"

namespace qimp {

/// Ordered list of single-qubit registers, each required to be exactly
/// |0> or |1>. Every transform in this module runs its gates through the
/// simulator and checks afterwards that the outputs are still basis
/// states rather than assuming it.
using CbsWord = std::vector<StateVector>;

/// Off-basis amplitude magnitude above which a qubit stops being a CBS.
inline constexpr double kCbsTolerance = 1e-6;

bool is_cbs(const StateVector& qubit, double tol = kCbsTolerance);

/// Classically controlled NOT on a ground qubit: one gate, exact basis
/// state out.
StateVector cl2qu_simple(int bit);

CbsWord cl2qu_word(const std::vector<int>& bits);

/// The instructive route: Bell pair, X/Z keyed on the bits, CNOT, H, which
/// lands on exactly |b1 b2> (qubit 1 carries b1). `stages`, when given,
/// receives the state after the X, Z, CNOT and H steps in that order.
StateVector cl2qu_superdense(int b1, int b2, std::vector<StateVector>* stages = nullptr);

/// z-axis readout of a CBS word; the word is unchanged by construction.
/// Raises ContractViolation if any qubit is off-basis beyond tolerance.
std::vector<int> qu2cl(const CbsWord& word);

/// 2x2 Boolean tile, entries (1,1),(1,2),(2,1),(2,2).
using BoolTile = std::array<int, 4>;

/// Three CNOTs fanning out from the top-left qubit:
/// J11 = I11, J12 = I12 xor I11, J21 = I21 xor I11, J22 = I22 xor I11.
void qbwt_word(CbsWord& word);
void iqbwt_word(CbsWord& word);

BoolTile qbwt(const BoolTile& tile);
BoolTile iqbwt(const BoolTile& tile);

BitPlane qbwt_plane(const BitPlane& plane);
BitPlane iqbwt_plane(const BitPlane& plane);

/// One pixel's bits across the D bitplanes, most significant first.
using BitColumn = std::vector<int>;

struct QbopResult {
    BitColumn j;  // orthogonal set: the one-hot of the leading set bit
    BitColumn k;  // remainder; J or K recovers the input
};

/// J^0 = I^0; J^d = I^d xor (xor_{k<d} I^d and J^k), K^d the accumulated
/// and-terms with K^0 = J^0; realized with CNOT / Toffoli gates on the
/// simulator.
QbopResult qbop(const BitColumn& column);

/// I^d = J^d or K^d.
BitColumn qbop_reconstruct(const BitColumn& j, const BitColumn& k);

struct QbopPlanes {
    std::vector<BitPlane> j;
    std::vector<BitPlane> k;
};

/// Column-wise transform across D same-shape planes (plane 0 of the input
/// must be the most significant).
QbopPlanes qbop_planes(const std::vector<BitPlane>& planes);

}  // namespace qimp
