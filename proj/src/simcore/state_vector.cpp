#include "qimp/simcore/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace qimp {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw SizeError("register width " + std::to_string(n_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
    amps_.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
    amps_[0] = cdouble{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cdouble> amps) {
    StateVector psi(n_qubits);
    if (amps.size() != psi.dim())
        throw StructuralError("amplitude count does not match register width");
    psi.amps_ = std::move(amps);
    return psi;
}

double StateVector::norm() const { return std::sqrt(kernels::norm_sq(amps_, policy_)); }

namespace {

void check_operands(int n, std::span<const int> targets, std::span<const int> controls,
                    std::span<const int> anticontrols, int arity) {
    if (static_cast<int>(targets.size()) != arity)
        throw StructuralError("gate arity does not match target count");
    if (targets.size() > static_cast<std::size_t>(kernels::kMaxTargets))
        throw StructuralError("too many simultaneous targets");
    std::uint64_t seen = 0;
    auto absorb = [&](std::span<const int> qs, const char* role) {
        for (int q : qs) {
            if (q < 0 || q >= n)
                throw StructuralError(std::string(role) + " qubit " + std::to_string(q) +
                                      " out of range");
            const std::uint64_t bit = std::uint64_t{1} << q;
            if (seen & bit)
                throw StructuralError("qubit " + std::to_string(q) +
                                      " appears in more than one operand set");
            seen |= bit;
        }
    };
    absorb(targets, "target");
    absorb(controls, "control");
    absorb(anticontrols, "anticontrol");
}

std::uint64_t mask_of(std::span<const int> qs) {
    std::uint64_t m = 0;
    for (int q : qs) m |= std::uint64_t{1} << q;
    return m;
}

}  // namespace

void StateVector::apply(const GateMatrix& gate, std::span<const int> targets,
                        std::span<const int> controls, std::span<const int> anticontrols) {
    check_operands(n_qubits_, targets, controls, anticontrols, gate.arity);
    kernels::apply(amps_, gate, targets, mask_of(controls), mask_of(anticontrols), policy_);
}

void StateVector::apply(const GateMatrix& gate, std::initializer_list<int> targets,
                        std::initializer_list<int> controls,
                        std::initializer_list<int> anticontrols) {
    apply(gate, std::span<const int>(targets.begin(), targets.size()),
          std::span<const int>(controls.begin(), controls.size()),
          std::span<const int>(anticontrols.begin(), anticontrols.size()));
}

std::string StateVector::bitstring(std::size_t index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q)
        if ((index >> q) & 1) s[n_qubits - 1 - q] = '1';
    return s;
}

StateVector kron(const StateVector& high, const StateVector& low) {
    const int n = high.n_qubits() + low.n_qubits();
    std::vector<cdouble> amps(std::size_t{1} << n);
    for (std::size_t h = 0; h < high.dim(); ++h)
        for (std::size_t l = 0; l < low.dim(); ++l)
            amps[(h << low.n_qubits()) | l] = high.amp(h) * low.amp(l);
    return StateVector::from_amplitudes(n, std::move(amps));
}

}  // namespace qimp
