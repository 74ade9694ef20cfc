#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qimp/simcore/errors.hpp"
#include "qimp/simcore/gates.hpp"
#include "qimp/simcore/kernels.hpp"

namespace qimp {

/// Hard cap on register width; a full 128x128 NEQR register (22 qubits)
/// still fits, anything larger is refused up front.
inline constexpr int kMaxQubits = 24;

/// Dense state over n qubits. Basis index convention: bit q of index k is
/// the state of qubit q, qubit 0 being the least-significant bit, so a
/// printed ket reads q[n-1]...q[0].
class StateVector {
public:
    /// Ground state |0...0>.
    explicit StateVector(int n_qubits);

    static StateVector from_amplitudes(int n_qubits, std::vector<cdouble> amps);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cdouble> amps() const { return amps_; }
    cdouble amp(std::size_t index) const { return amps_[index]; }
    void set_amp(std::size_t index, cdouble v) { amps_[index] = v; }

    double norm() const;

    /// Apply `gate` to `targets`, restricted to the subspace where all
    /// `controls` read 1 and all `anticontrols` read 0. The three qubit
    /// sets must be disjoint and in range.
    void apply(const GateMatrix& gate, std::span<const int> targets,
               std::span<const int> controls = {}, std::span<const int> anticontrols = {});

    void apply(const GateMatrix& gate, std::initializer_list<int> targets,
               std::initializer_list<int> controls = {},
               std::initializer_list<int> anticontrols = {});

    /// Kernel selection; Auto parallelizes large registers only.
    void set_policy(kernels::Policy p) { policy_ = p; }
    kernels::Policy policy() const { return policy_; }

    /// "q[n-1]...q[0]" rendering of a basis index.
    static std::string bitstring(std::size_t index, int n_qubits);

private:
    int n_qubits_;
    std::vector<cdouble> amps_;
    kernels::Policy policy_ = kernels::Policy::Auto;
};

/// Tensor product; qubits of `low` occupy the low bit positions of the result.
StateVector kron(const StateVector& high, const StateVector& low);

}  // namespace qimp
