#pragma once

#include <map>
#include <string>
#include <vector>

#include "qimp/simcore/gates.hpp"

namespace qimp {

enum class OpKind {
    Gate,
    Measure,
    Reset,
    Barrier,
    CondGate,  // gate applied iff a classical bit reads 1
};

struct Instruction {
    OpKind kind = OpKind::Gate;

    // Gate / CondGate
    std::string gate;
    std::vector<int> targets;  // Reset: empty list means "all qubits"
    std::vector<int> controls;
    std::vector<int> anticontrols;
    double param = 0.0;  // RY angle
    bool has_param = false;

    // Measure: qubit -> cbit. CondGate: cbit is the condition source.
    int qubit = -1;
    int cbit = -1;

    bool operator==(const Instruction&) const = default;
};

struct Diagnostic {
    int instruction = -1;  // -1: circuit-level
    std::string message;
};

/// Ordered instruction list over a fixed-width qubit/classical register.
/// Instructions reference gates by name; anything beyond the builtin
/// vocabulary lives in `extra_gates` (validate() reports non-unitary
/// entries instead of rejecting them up front).
struct Circuit {
    int n_qubits = 0;
    int n_clbits = 0;
    std::vector<Instruction> instructions;
    std::map<std::string, GateMatrix> extra_gates;

    Circuit() = default;
    Circuit(int nq, int nc) : n_qubits(nq), n_clbits(nc) {}

    // builder helpers
    Circuit& gate(const std::string& name, std::vector<int> targets, std::vector<int> controls = {},
                  std::vector<int> anticontrols = {});
    Circuit& parametric(const std::string& name, double param, std::vector<int> targets);
    Circuit& h(int q) { return gate("H", {q}); }
    Circuit& x(int q) { return gate("X", {q}); }
    Circuit& y(int q) { return gate("Y", {q}); }
    Circuit& z(int q) { return gate("Z", {q}); }
    Circuit& t(int q) { return gate("T", {q}); }
    Circuit& ry(double theta, int q) { return parametric("RY", theta, {q}); }
    Circuit& cx(int control, int target) { return gate("X", {target}, {control}); }
    Circuit& ccx(int c0, int c1, int target) { return gate("X", {target}, {c0, c1}); }
    Circuit& cz(int control, int target) { return gate("Z", {target}, {control}); }
    Circuit& swap(int a, int b) { return gate("SWAP", {a, b}); }
    Circuit& measure(int qubit, int cbit);
    Circuit& cond_gate(int cbit, const std::string& name, std::vector<int> targets);
    Circuit& barrier();
    Circuit& reset(std::vector<int> targets = {});

    /// Resolve a gate name against builtins then extra_gates.
    /// Throws GateError for unknown names.
    GateMatrix resolve_gate(const std::string& name, double param) const;

    bool has_gate(const std::string& name) const;
};

/// Static checks: index ranges, operand disjointness, known gate names,
/// unitarity of every referenced matrix (1e-10), and measure-before-
/// conditional dataflow. Returns diagnostics instead of throwing; an empty
/// list means the circuit is runnable.
std::vector<Diagnostic> validate(const Circuit& c);

}  // namespace qimp
