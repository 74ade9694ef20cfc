#include "qimp/circuit/circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "qimp/simcore/errors.hpp"
#include "qimp/simcore/state_vector.hpp"

namespace qimp {

Circuit& Circuit::gate(const std::string& name, std::vector<int> targets,
                       std::vector<int> controls, std::vector<int> anticontrols) {
    Instruction in;
    in.kind = OpKind::Gate;
    in.gate = name;
    in.targets = std::move(targets);
    in.controls = std::move(controls);
    in.anticontrols = std::move(anticontrols);
    instructions.push_back(std::move(in));
    return *this;
}

Circuit& Circuit::parametric(const std::string& name, double param, std::vector<int> targets) {
    Instruction in;
    in.kind = OpKind::Gate;
    in.gate = name;
    in.targets = std::move(targets);
    in.param = param;
    in.has_param = true;
    instructions.push_back(std::move(in));
    return *this;
}

Circuit& Circuit::measure(int qubit, int cbit) {
    Instruction in;
    in.kind = OpKind::Measure;
    in.qubit = qubit;
    in.cbit = cbit;
    instructions.push_back(std::move(in));
    return *this;
}

Circuit& Circuit::cond_gate(int cbit, const std::string& name, std::vector<int> targets) {
    Instruction in;
    in.kind = OpKind::CondGate;
    in.gate = name;
    in.targets = std::move(targets);
    in.cbit = cbit;
    instructions.push_back(std::move(in));
    return *this;
}

Circuit& Circuit::barrier() {
    Instruction in;
    in.kind = OpKind::Barrier;
    instructions.push_back(std::move(in));
    return *this;
}

Circuit& Circuit::reset(std::vector<int> targets) {
    Instruction in;
    in.kind = OpKind::Reset;
    in.targets = std::move(targets);
    instructions.push_back(std::move(in));
    return *this;
}

GateMatrix Circuit::resolve_gate(const std::string& name, double param) const {
    GateMatrix g;
    if (gates::lookup(name, param, g)) return g;
    auto it = extra_gates.find(name);
    if (it != extra_gates.end()) return it->second;
    throw GateError("unknown gate '" + name + "'");
}

bool Circuit::has_gate(const std::string& name) const {
    return gates::is_builtin(name) || extra_gates.count(name) > 0;
}

namespace {

bool operands_ok(const Circuit& c, const Instruction& in, std::string& why) {
    std::uint64_t seen = 0;
    auto absorb = [&](const std::vector<int>& qs, const char* role) {
        for (int q : qs) {
            if (q < 0 || q >= c.n_qubits) {
                why = std::string(role) + " qubit " + std::to_string(q) + " out of range";
                return false;
            }
            const std::uint64_t bit = std::uint64_t{1} << q;
            if (seen & bit) {
                why = "qubit " + std::to_string(q) + " repeated across operand sets";
                return false;
            }
            seen |= bit;
        }
        return true;
    };
    return absorb(in.targets, "target") && absorb(in.controls, "control") &&
           absorb(in.anticontrols, "anticontrol");
}

}  // namespace

std::vector<Diagnostic> validate(const Circuit& c) {
    std::vector<Diagnostic> out;
    auto flag = [&](int idx, std::string msg) { out.push_back({idx, std::move(msg)}); };

    if (c.n_qubits < 1 || c.n_qubits > kMaxQubits)
        flag(-1, "register width " + std::to_string(c.n_qubits) + " outside [1, " +
                     std::to_string(kMaxQubits) + "]");

    std::set<int> written_cbits;
    for (std::size_t i = 0; i < c.instructions.size(); ++i) {
        const Instruction& in = c.instructions[i];
        const int idx = static_cast<int>(i);
        std::string why;
        switch (in.kind) {
            case OpKind::Gate:
            case OpKind::CondGate: {
                if (!c.has_gate(in.gate)) {
                    flag(idx, "unknown gate '" + in.gate + "'");
                    break;
                }
                GateMatrix g = c.resolve_gate(in.gate, in.param);
                if (!g.is_unitary())
                    flag(idx, "non-unitary gate '" + in.gate + "'");
                if (static_cast<int>(in.targets.size()) != g.arity)
                    flag(idx, "gate '" + in.gate + "' expects " + std::to_string(g.arity) +
                                  " target(s)");
                if (!operands_ok(c, in, why)) flag(idx, why);
                if (in.kind == OpKind::CondGate) {
                    if (in.cbit < 0 || in.cbit >= c.n_clbits)
                        flag(idx, "classical bit " + std::to_string(in.cbit) + " out of range");
                    else if (!written_cbits.count(in.cbit))
                        flag(idx, "conditional reads classical bit " + std::to_string(in.cbit) +
                                      " before any measure writes it");
                }
                break;
            }
            case OpKind::Measure:
                if (in.qubit < 0 || in.qubit >= c.n_qubits)
                    flag(idx, "measured qubit " + std::to_string(in.qubit) + " out of range");
                if (in.cbit < 0 || in.cbit >= c.n_clbits)
                    flag(idx, "classical bit " + std::to_string(in.cbit) + " out of range");
                else
                    written_cbits.insert(in.cbit);
                break;
            case OpKind::Reset:
                if (!operands_ok(c, in, why)) flag(idx, why);
                break;
            case OpKind::Barrier:
                break;
        }
    }
    return out;
}

}  // namespace qimp
