#include "qimp/circuit/serialize.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "qimp/simcore/errors.hpp"

namespace qimp {

namespace {

using nlohmann::json;

const char* kind_name(OpKind k) {
    switch (k) {
        case OpKind::Gate: return "gate";
        case OpKind::Measure: return "measure";
        case OpKind::Reset: return "reset";
        case OpKind::Barrier: return "barrier";
        case OpKind::CondGate: return "cond_gate";
    }
    return "?";
}

OpKind kind_of(const std::string& s) {
    if (s == "gate") return OpKind::Gate;
    if (s == "measure") return OpKind::Measure;
    if (s == "reset") return OpKind::Reset;
    if (s == "barrier") return OpKind::Barrier;
    if (s == "cond_gate") return OpKind::CondGate;
    throw FormatError("unknown instruction kind '" + s + "'");
}

}  // namespace

std::string circuit_to_json(const Circuit& c) {
    json j;
    j["n_qubits"] = c.n_qubits;
    j["n_clbits"] = c.n_clbits;
    j["instructions"] = json::array();
    for (const Instruction& in : c.instructions) {
        json ji;
        ji["kind"] = kind_name(in.kind);
        switch (in.kind) {
            case OpKind::Gate:
            case OpKind::CondGate:
                ji["gate"] = in.gate;
                ji["targets"] = in.targets;
                if (!in.controls.empty()) ji["controls"] = in.controls;
                if (!in.anticontrols.empty()) ji["anticontrols"] = in.anticontrols;
                if (in.has_param) ji["param"] = in.param;
                if (in.kind == OpKind::CondGate) ji["cond_bit"] = in.cbit;
                break;
            case OpKind::Measure:
                ji["qubit"] = in.qubit;
                ji["cbit"] = in.cbit;
                break;
            case OpKind::Reset:
                ji["targets"] = in.targets;
                break;
            case OpKind::Barrier:
                break;
        }
        j["instructions"].push_back(std::move(ji));
    }
    return j.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("circuit JSON: ") + e.what());
    }

    Circuit c(j.at("n_qubits").get<int>(), j.value("n_clbits", 0));
    for (const json& ji : j.at("instructions")) {
        Instruction in;
        in.kind = kind_of(ji.at("kind").get<std::string>());
        switch (in.kind) {
            case OpKind::Gate:
            case OpKind::CondGate:
                in.gate = ji.at("gate").get<std::string>();
                in.targets = ji.at("targets").get<std::vector<int>>();
                in.controls = ji.value("controls", std::vector<int>{});
                in.anticontrols = ji.value("anticontrols", std::vector<int>{});
                if (ji.contains("param")) {
                    in.param = ji["param"].get<double>();
                    in.has_param = true;
                }
                if (in.kind == OpKind::CondGate) in.cbit = ji.at("cond_bit").get<int>();
                break;
            case OpKind::Measure:
                in.qubit = ji.at("qubit").get<int>();
                in.cbit = ji.at("cbit").get<int>();
                break;
            case OpKind::Reset:
                in.targets = ji.value("targets", std::vector<int>{});
                break;
            case OpKind::Barrier:
                break;
        }
        c.instructions.push_back(std::move(in));
    }
    return c;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open circuit file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return circuit_from_json(text);
}

void save_circuit(const Circuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write circuit file: " + path);
    out << circuit_to_json(c);
}

}  // namespace qimp
