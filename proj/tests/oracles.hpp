#pragma once

// Test-only oracles, deliberately independent of the implementation paths
// they check: full-matrix circuit evaluation, density-matrix partial trace
// over explicit index pairs, the spin-flip concurrence formula via a
// complex (non-Hermitian) eigensolve, exhaustive measurement-outcome
// enumeration, and plain-integer Boolean transforms.

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "qimp/circuit/circuit.hpp"
#include "qimp/simcore/state_vector.hpp"

namespace qimp::oracle {

/// Full 2^n x 2^n operator of one instruction (controls, anticontrols and
/// targets expanded entry by entry).
Eigen::MatrixXcd instruction_matrix(const Circuit& c, const Instruction& in);

/// Dense-matrix evaluation of a gate-only circuit on |0...0> (or `start`).
Eigen::VectorXcd run_dense(const Circuit& c, const Eigen::VectorXcd* start = nullptr);

Eigen::VectorXcd to_eigen(const StateVector& psi);

/// Reduced density matrix computed from the explicit full |psi><psi|.
Eigen::MatrixXcd partial_trace_dense(const Eigen::VectorXcd& psi, int n_qubits,
                                     const std::vector<int>& keep);

/// Wootters concurrence evaluated through the eigenvalues of rho*rho_tilde.
double concurrence_dense(const Eigen::MatrixXcd& rho);

/// Outcome-averaged per-qubit P(1) of a circuit with measurements and
/// classical controls, by exhaustive branch enumeration.
std::vector<double> enumerate_marginals(const Circuit& c);

/// Eq-level Boolean transforms on plain ints.
std::array<int, 4> qbwt_classical(const std::array<int, 4>& tile);
void qbop_classical(const std::vector<int>& column, std::vector<int>& j, std::vector<int>& k);

}  // namespace qimp::oracle
