#include "qimp/circuit/passes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qimp/simcore/errors.hpp"

namespace qimp {

Circuit lower_anticontrols(const Circuit& c) {
    Circuit out(c.n_qubits, c.n_clbits);
    out.extra_gates = c.extra_gates;
    for (const Instruction& in : c.instructions) {
        if ((in.kind != OpKind::Gate && in.kind != OpKind::CondGate) || in.anticontrols.empty()) {
            out.instructions.push_back(in);
            continue;
        }
        std::vector<int> wrap = in.anticontrols;
        std::sort(wrap.begin(), wrap.end());
        for (int q : wrap) out.x(q);
        Instruction lowered = in;
        // Promoted qubits go in front so the control list stays in the
        // descending order the dialect listings use.
        lowered.controls.insert(lowered.controls.begin(), in.anticontrols.begin(),
                                in.anticontrols.end());
        lowered.anticontrols.clear();
        out.instructions.push_back(std::move(lowered));
        for (int q : wrap) out.x(q);
    }
    return out;
}

Circuit defer_measurements(const Circuit& c) {
    // Which classical bits feed conditionals, and which measure writes them.
    std::map<int, int> writer;  // cbit -> qubit
    std::set<int> conditioned;
    for (const Instruction& in : c.instructions)
        if (in.kind == OpKind::CondGate) conditioned.insert(in.cbit);

    for (const Instruction& in : c.instructions) {
        if (in.kind != OpKind::Measure) continue;
        if (!conditioned.count(in.cbit)) continue;
        if (writer.count(in.cbit))
            throw StructuralError("classical bit " + std::to_string(in.cbit) +
                                  " written by more than one measure");
        writer[in.cbit] = in.qubit;
    }

    Circuit out(c.n_qubits, 0);
    out.extra_gates = c.extra_gates;
    std::set<int> measured;  // qubits whose outcome now lives on the wire
    std::set<int> touched;
    auto touch = [&](const Instruction& in) {
        for (int q : in.targets) touched.insert(q);
        for (int q : in.controls) touched.insert(q);
        for (int q : in.anticontrols) touched.insert(q);
    };

    for (const Instruction& in : c.instructions) {
        switch (in.kind) {
            case OpKind::Measure:
                measured.insert(in.qubit);
                touched.insert(in.qubit);
                break;
            case OpKind::Reset: {
                std::vector<int> qs = in.targets;
                if (qs.empty())
                    for (int q = 0; q < c.n_qubits; ++q) qs.push_back(q);
                for (int q : qs)
                    if (touched.count(q))
                        throw StructuralError("reset of qubit " + std::to_string(q) +
                                              " after it was used cannot be deferred");
                // Reset of a still-ground qubit is the identity.
                break;
            }
            case OpKind::Barrier:
                out.instructions.push_back(in);
                break;
            case OpKind::CondGate: {
                auto it = writer.find(in.cbit);
                if (it == writer.end())
                    throw StructuralError("conditional reads classical bit " +
                                          std::to_string(in.cbit) + " that no measure writes");
                Instruction g = in;
                g.kind = OpKind::Gate;
                g.cbit = -1;
                g.controls.push_back(it->second);
                for (int q : g.targets)
                    if (measured.count(q))
                        throw StructuralError("gate on measured qubit " + std::to_string(q) +
                                              " cannot be deferred");
                touch(g);
                out.instructions.push_back(std::move(g));
                break;
            }
            case OpKind::Gate: {
                for (int q : in.targets)
                    if (measured.count(q))
                        throw StructuralError("gate on measured qubit " + std::to_string(q) +
                                              " cannot be deferred");
                touch(in);
                out.instructions.push_back(in);
                break;
            }
        }
    }
    return out;
}

}  // namespace qimp
