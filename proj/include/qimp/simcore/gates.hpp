#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qimp {

using cdouble = std::complex<double>;

/// Dense unitary acting on `arity` qubits. Entries are row-major over a
/// 2^arity x 2^arity matrix. Local basis index bit j corresponds to the
/// j-th target qubit passed to apply().
struct GateMatrix {
    int arity = 1;
    std::vector<cdouble> entries;
    std::string name;

    std::size_t dim() const { return std::size_t{1} << arity; }
    cdouble at(std::size_t r, std::size_t c) const { return entries[r * dim() + c]; }

    /// Max |(U†U - I)_{rc}| over all entries.
    double unitarity_defect() const;
    bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }
};

namespace gates {

GateMatrix identity();
GateMatrix pauli_x();
GateMatrix pauli_y();
GateMatrix pauli_z();
GateMatrix hadamard();
GateMatrix t_gate();
GateMatrix swap();
GateMatrix ry(double theta);

/// Builtin lookup by emitter-vocabulary name (I, X, Y, Z, H, T, SWAP, RY).
/// RY requires `param`. Returns false if the name is unknown.
bool lookup(const std::string& name, double param, GateMatrix& out);
bool is_builtin(const std::string& name);

}  // namespace gates

/// Named gates added beyond the builtins. Registration enforces unitarity:
/// matrices such as (I+Z)/2 are rejected with GateError.
class GateRegistry {
public:
    void register_gate(const std::string& name, GateMatrix matrix);
    bool contains(const std::string& name) const;
    const GateMatrix& get(const std::string& name) const;

private:
    std::vector<GateMatrix> gates_;
};

}  // namespace qimp
