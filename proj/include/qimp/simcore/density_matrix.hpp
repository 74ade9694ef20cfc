#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qimp/simcore/state_vector.hpp"

namespace qimp {

/// Hermitian, PSD, unit-trace matrix over m qubits.
class DensityMatrix {
public:
    explicit DensityMatrix(Eigen::MatrixXcd mat);

    /// |psi><psi| of a pure state.
    static DensityMatrix from_state(const StateVector& psi);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd& mat() const { return mat_; }
    Eigen::MatrixXcd& mat() { return mat_; }

    double trace_real() const { return mat_.trace().real(); }
    double purity() const;

    /// Hermitian within tol, trace 1 within tol, eigenvalues >= -tol.
    bool is_valid(double tol = 1e-10) const;

private:
    Eigen::MatrixXcd mat_;
    int n_qubits_;
};

/// Reduced state over `keep` (indices into the source register, any order;
/// the result orders them ascending: result bit 0 = smallest kept qubit).
/// At most 10 qubits may be kept.
DensityMatrix partial_trace(const StateVector& psi, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Tr[(sqrt(rho_out) rho_in sqrt(rho_out))^(1/2)] via Hermitian
/// eigendecomposition; eigenvalues in [-1e-10, 0) are clamped to zero.
double fidelity(const DensityMatrix& rho_in, const DensityMatrix& rho_out);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho_2q);

struct BlochAngles {
    double theta;   // [0, pi]
    double phi;     // [0, 2*pi)
    double purity;  // Tr(rho^2)
};

BlochAngles bloch_angles(const DensityMatrix& rho_1q);

}  // namespace qimp
