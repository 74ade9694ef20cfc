#include "qimp/simcore/noise.hpp"

#include <algorithm>
#include <cmath>

#include "qimp/simcore/gates.hpp"

namespace qimp {

namespace {

GateMatrix pauli_of(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::BitFlip: return gates::pauli_x();
        case NoiseKind::PhaseFlip: return gates::pauli_z();
        case NoiseKind::BitPhaseFlip: return gates::pauli_y();
    }
    throw ParameterError("unknown noise kind");
}

}  // namespace

double NoiseChannel::kraus_completeness_defect() const {
    // K0 = sqrt(1-p) I, K1 = sqrt(p) sigma; sigma^2 = I for every Pauli, so
    // sum K†K = (1-p) I + p I. Report the numeric residue anyway.
    const GateMatrix sigma = pauli_of(kind);
    double worst = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            cdouble acc = (1.0 - p) * (r == c ? cdouble{1, 0} : cdouble{0, 0});
            for (int k = 0; k < 2; ++k)
                acc += p * std::conj(sigma.at(k, r)) * sigma.at(k, c);
            const cdouble want = (r == c) ? cdouble{1, 0} : cdouble{0, 0};
            worst = std::max(worst, std::abs(acc - want));
        }
    return worst;
}

DensityMatrix apply_channel(const DensityMatrix& rho, int qubit, const NoiseChannel& ch) {
    if (ch.p < 0.0 || ch.p > 1.0) throw ParameterError("channel probability outside [0, 1]");
    if (qubit < 0 || qubit >= rho.n_qubits()) throw StructuralError("channel qubit out of range");

    const GateMatrix sigma = pauli_of(ch.kind);
    const Eigen::Index d = rho.dim();
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(d, d);
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    for (Eigen::Index r = 0; r < d; ++r) {
        const int rb = (r & bit) ? 1 : 0;
        for (int cb = 0; cb < 2; ++cb) {
            const cdouble v = sigma.at(rb, cb);
            if (v == cdouble{0, 0}) continue;
            const Eigen::Index c = (r & ~bit) | (cb ? bit : 0);
            op(r, c) = v;
        }
    }
    Eigen::MatrixXcd out = (1.0 - ch.p) * rho.mat() + ch.p * (op * rho.mat() * op.adjoint());
    return DensityMatrix(std::move(out));
}

}  // namespace qimp
