#include "qimp/circuit/capability.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "qimp/simcore/errors.hpp"

namespace qimp {

namespace profiles {

CapabilityProfile dialect_a() {
    return {"dialect-A", /*barrier*/ true, ResetPolicy::No, ConditionalPolicy::No,
            /*mid-circuit measure*/ false};
}

CapabilityProfile dialect_b() {
    return {"dialect-B", /*barrier*/ false, ResetPolicy::StartOnly, ConditionalPolicy::No,
            /*mid-circuit measure*/ false};
}

CapabilityProfile dialect_b_sim() {
    return {"dialect-B-sim", /*barrier*/ false, ResetPolicy::StartOnly, ConditionalPolicy::Yes,
            /*mid-circuit measure*/ true};
}

std::optional<CapabilityProfile> by_name(const std::string& name) {
    if (name == "dialect-A") return dialect_a();
    if (name == "dialect-B") return dialect_b();
    if (name == "dialect-B-sim") return dialect_b_sim();
    return std::nullopt;
}

std::vector<std::string> names() { return {"dialect-A", "dialect-B", "dialect-B-sim"}; }

CapabilityProfile from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open profile file: " + path);
    nlohmann::json j;
    in >> j;

    CapabilityProfile p;
    p.name = j.at("name").get<std::string>();
    p.allows_barrier = j.at("allows_barrier").get<bool>();

    const std::string reset = j.at("allows_reset").get<std::string>();
    if (reset == "no") p.allows_reset = ResetPolicy::No;
    else if (reset == "start-only") p.allows_reset = ResetPolicy::StartOnly;
    else if (reset == "anywhere") p.allows_reset = ResetPolicy::Anywhere;
    else throw FormatError("allows_reset must be no|start-only|anywhere");

    const std::string cond = j.at("allows_conditional").get<std::string>();
    if (cond == "no") p.allows_conditional = ConditionalPolicy::No;
    else if (cond == "simulator-only") p.allows_conditional = ConditionalPolicy::SimulatorOnly;
    else if (cond == "yes") p.allows_conditional = ConditionalPolicy::Yes;
    else throw FormatError("allows_conditional must be no|simulator-only|yes");

    p.allows_mid_circuit_measure = j.at("allows_mid_circuit_measure").get<bool>();
    return p;
}

}  // namespace profiles

std::vector<Diagnostic> capability_check(const Circuit& c, const CapabilityProfile& profile) {
    std::vector<Diagnostic> out;

    // A measure is mid-circuit if any gate-like instruction follows it.
    int last_gate_like = -1;
    for (std::size_t i = 0; i < c.instructions.size(); ++i) {
        const OpKind k = c.instructions[i].kind;
        if (k == OpKind::Gate || k == OpKind::CondGate || k == OpKind::Reset)
            last_gate_like = static_cast<int>(i);
    }

    bool seen_non_reset = false;
    for (std::size_t i = 0; i < c.instructions.size(); ++i) {
        const Instruction& in = c.instructions[i];
        const int idx = static_cast<int>(i);
        switch (in.kind) {
            case OpKind::Barrier:
                if (!profile.allows_barrier)
                    out.push_back({idx, "barrier not available on " + profile.name});
                seen_non_reset = true;
                break;
            case OpKind::Reset:
                if (profile.allows_reset == ResetPolicy::No)
                    out.push_back({idx, "qubit reset not available on " + profile.name});
                else if (profile.allows_reset == ResetPolicy::StartOnly && seen_non_reset)
                    out.push_back({idx, "mid-circuit reset not available on " + profile.name +
                                            " (start of program only)"});
                break;
            case OpKind::CondGate:
                if (profile.allows_conditional == ConditionalPolicy::No)
                    out.push_back({idx, "if-then-else statement not available on " + profile.name});
                else if (profile.allows_conditional == ConditionalPolicy::SimulatorOnly)
                    out.push_back({idx, "if-then-else statement only available on the " +
                                            profile.name + " simulator, not the QPU"});
                seen_non_reset = true;
                break;
            case OpKind::Measure:
                if (!profile.allows_mid_circuit_measure && idx < last_gate_like)
                    out.push_back({idx, "mid-circuit measurement not available on " + profile.name});
                seen_non_reset = true;
                break;
            case OpKind::Gate:
                seen_non_reset = true;
                break;
        }
    }
    return out;
}

}  // namespace qimp
