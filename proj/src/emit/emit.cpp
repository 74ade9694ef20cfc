#include "qimp/emit/emit.hpp"

#include <algorithm>
#include <cstdio>

#include "qimp/circuit/passes.hpp"
#include "qimp/simcore/errors.hpp"

namespace qimp {

std::string DialectText::str() const {
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::string dialect_extension(Dialect d) { return d == Dialect::Qasm ? ".qasm" : ".quil"; }

namespace {

std::string format_angle(double theta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", theta);
    return buf;
}

std::vector<int> descending(std::vector<int> qs) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    return qs;
}

// ---- quil ----

std::string quil_gate_line(const Instruction& in) {
    const std::vector<int> ctrls = descending(in.controls);
    std::string line;
    auto args = [&](std::initializer_list<int> qs) {
        for (int q : qs) line += " " + std::to_string(q);
    };

    if (ctrls.empty()) {
        if (in.gate == "RY") {
            line = "RY(" + format_angle(in.param) + ")";
            args({in.targets[0]});
            return line;
        }
        if (in.gate == "SWAP") {
            line = "SWAP";
            args({in.targets[0], in.targets[1]});
            return line;
        }
        if (in.gate == "I" || in.gate == "X" || in.gate == "Y" || in.gate == "Z" ||
            in.gate == "H" || in.gate == "T") {
            line = in.gate;
            args({in.targets[0]});
            return line;
        }
    } else if (in.gate == "X" && ctrls.size() == 1) {
        line = "CNOT";
        args({ctrls[0], in.targets[0]});
        return line;
    } else if (in.gate == "X" && ctrls.size() == 2) {
        line = "CCNOT";
        args({ctrls[0], ctrls[1], in.targets[0]});
        return line;
    } else if (in.gate == "Z" && ctrls.size() == 1) {
        line = "CZ";
        args({ctrls[0], in.targets[0]});
        return line;
    }
    throw EmitError("no quil spelling for gate '" + in.gate + "' with " +
                    std::to_string(ctrls.size()) + " control(s)");
}

DialectText emit_quil(const Circuit& c, const std::vector<Diagnostic>& diags) {
    DialectText out{Dialect::Quil, {}};
    for (const Diagnostic& d : diags)
        out.lines.push_back("# capability: [" + std::to_string(d.instruction) + "] " + d.message);
    out.lines.push_back("RESET");
    for (int b = 0; b < c.n_clbits; ++b)
        out.lines.push_back("DECLARE r" + std::to_string(b) + " BIT[1]");

    int label = 1;
    for (const Instruction& in : c.instructions) {
        switch (in.kind) {
            case OpKind::Gate:
                out.lines.push_back(quil_gate_line(in));
                break;
            case OpKind::Measure:
                out.lines.push_back("MEASURE " + std::to_string(in.qubit) + " r" +
                                    std::to_string(in.cbit) + "[0]");
                break;
            case OpKind::CondGate: {
                const std::string then_l = "@THEN" + std::to_string(label);
                const std::string end_l = "@END" + std::to_string(label + 1);
                label += 2;
                out.lines.push_back("JUMP-WHEN " + then_l + " r" + std::to_string(in.cbit) + "[0]");
                out.lines.push_back("JUMP " + end_l);
                out.lines.push_back("LABEL " + then_l);
                Instruction body = in;
                body.kind = OpKind::Gate;
                out.lines.push_back(quil_gate_line(body));
                out.lines.push_back("LABEL " + end_l);
                break;
            }
            case OpKind::Reset:
                if (in.targets.empty()) {
                    out.lines.push_back("RESET");
                } else {
                    for (int q : in.targets) out.lines.push_back("RESET " + std::to_string(q));
                }
                break;
            case OpKind::Barrier:
                out.lines.push_back("PRAGMA BARRIER");
                break;
        }
    }
    return out;
}

// ---- qasm ----

std::string qasm_q(int q) { return "q[" + std::to_string(q) + "]"; }

std::string qasm_gate_stmt(const Instruction& in) {
    const std::vector<int> ctrls = descending(in.controls);
    auto join = [&](std::vector<int> qs) {
        std::string s;
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (i) s += ",";
            s += qasm_q(qs[i]);
        }
        return s;
    };

    if (ctrls.empty()) {
        if (in.gate == "RY") return "ry(" + format_angle(in.param) + ") " + qasm_q(in.targets[0]) + ";";
        if (in.gate == "SWAP") return "swap " + join({in.targets[0], in.targets[1]}) + ";";
        if (in.gate == "I") return "id " + qasm_q(in.targets[0]) + ";";
        if (in.gate == "X" || in.gate == "Y" || in.gate == "Z" || in.gate == "H" || in.gate == "T") {
            std::string n = in.gate;
            std::transform(n.begin(), n.end(), n.begin(), ::tolower);
            return n + " " + qasm_q(in.targets[0]) + ";";
        }
    } else if (in.gate == "X" && ctrls.size() == 1) {
        return "cx " + join({ctrls[0], in.targets[0]}) + ";";
    } else if (in.gate == "X" && ctrls.size() == 2) {
        return "ccx " + join({ctrls[0], ctrls[1], in.targets[0]}) + ";";
    } else if (in.gate == "Z" && ctrls.size() == 1) {
        return "cz " + join({ctrls[0], in.targets[0]}) + ";";
    }
    throw EmitError("no qasm spelling for gate '" + in.gate + "' with " +
                    std::to_string(ctrls.size()) + " control(s)");
}

DialectText emit_qasm(const Circuit& c, const std::vector<Diagnostic>& diags) {
    DialectText out{Dialect::Qasm, {}};
    for (const Diagnostic& d : diags)
        out.lines.push_back("// capability: [" + std::to_string(d.instruction) + "] " + d.message);
    out.lines.push_back("OPENQASM 2.0;");
    out.lines.push_back("include \"qelib1.inc\";");
    out.lines.push_back("qreg q[" + std::to_string(c.n_qubits) + "];");
    for (int b = 0; b < c.n_clbits; ++b)
        out.lines.push_back("creg c" + std::to_string(b) + "[1];");

    for (const Instruction& in : c.instructions) {
        switch (in.kind) {
            case OpKind::Gate:
                out.lines.push_back(qasm_gate_stmt(in));
                break;
            case OpKind::Measure:
                out.lines.push_back("measure " + qasm_q(in.qubit) + " -> c" +
                                    std::to_string(in.cbit) + "[0];");
                break;
            case OpKind::CondGate: {
                Instruction body = in;
                body.kind = OpKind::Gate;
                out.lines.push_back("if(c" + std::to_string(in.cbit) + "==1) " +
                                    qasm_gate_stmt(body));
                break;
            }
            case OpKind::Reset:
                if (in.targets.empty()) {
                    out.lines.push_back("reset q;");
                } else {
                    for (int q : in.targets) out.lines.push_back("reset " + qasm_q(q) + ";");
                }
                break;
            case OpKind::Barrier:
                out.lines.push_back("barrier q;");
                break;
        }
    }
    return out;
}

}  // namespace

DialectText emit(const Circuit& c, Dialect dialect, const CapabilityProfile& profile, bool force) {
    const auto diags = capability_check(c, profile);
    if (!diags.empty() && !force) {
        std::string msg = "circuit not deployable on profile " + profile.name + ":";
        for (const Diagnostic& d : diags)
            msg += "\n  [" + std::to_string(d.instruction) + "] " + d.message;
        throw EmitError(msg);
    }
    const Circuit lowered = lower_anticontrols(c);
    return dialect == Dialect::Quil ? emit_quil(lowered, force ? diags : std::vector<Diagnostic>{})
                                    : emit_qasm(lowered, force ? diags : std::vector<Diagnostic>{});
}

}  // namespace qimp
