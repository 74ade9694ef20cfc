#pragma once

#include "qimp/simcore/density_matrix.hpp"

namespace qimp {

/// Single-qubit Pauli channels: rho -> (1-p) rho + p sigma rho sigma with
/// sigma = X, Z, Y respectively.
enum class NoiseKind {
    BitFlip,       // sigma = X
    PhaseFlip,     // sigma = Z
    BitPhaseFlip,  // sigma = Y
};

struct NoiseChannel {
    NoiseKind kind;
    double p;  // in [0, 1]

    /// Max deviation of sum K†K from identity (zero for these channels by
    /// construction; exposed so the completeness invariant is checkable).
    double kraus_completeness_defect() const;
};

DensityMatrix apply_channel(const DensityMatrix& rho, int qubit, const NoiseChannel& ch);

}  // namespace qimp
