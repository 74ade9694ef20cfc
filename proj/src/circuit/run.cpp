#include "qimp/circuit/run.hpp"

#include <algorithm>

#include "qimp/circuit/passes.hpp"

namespace qimp {

namespace {

void refuse_if_invalid(const Circuit& c) {
    const auto diags = validate(c);
    if (diags.empty()) return;
    std::string msg = "circuit failed validation:";
    for (const Diagnostic& d : diags)
        msg += "\n  [" + std::to_string(d.instruction) + "] " + d.message;
    throw ValidationError(msg);
}

StateVector initial_state(const Circuit& c, const StateVector* initial) {
    if (!initial) return StateVector(c.n_qubits);
    if (initial->n_qubits() != c.n_qubits)
        throw StructuralError("initial state width does not match the circuit");
    return *initial;
}

void apply_instruction(StateVector& psi, const Circuit& c, const Instruction& in) {
    const GateMatrix g = c.resolve_gate(in.gate, in.param);
    psi.apply(g, std::span<const int>(in.targets), std::span<const int>(in.controls),
              std::span<const int>(in.anticontrols));
}

}  // namespace

StateVector run_deferred(const Circuit& c, const StateVector* initial) {
    refuse_if_invalid(c);
    const Circuit deferred = defer_measurements(c);
    StateVector psi = initial_state(c, initial);
    for (const Instruction& in : deferred.instructions) {
        if (in.kind == OpKind::Barrier) continue;
        apply_instruction(psi, deferred, in);
    }
    return psi;
}

std::map<std::string, long> run_sampled(const Circuit& c, long shots, std::uint64_t seed,
                                        const StateVector* initial) {
    refuse_if_invalid(c);
    const bool any_measure =
        std::any_of(c.instructions.begin(), c.instructions.end(),
                    [](const Instruction& in) { return in.kind == OpKind::Measure; });

    std::map<std::string, long> counts;
    const StateVector start = initial_state(c, initial);

    for (long shot = 0; shot < shots; ++shot) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(shot)));
        StateVector psi = start;
        std::vector<int> cbits(c.n_clbits, 0);

        for (const Instruction& in : c.instructions) {
            switch (in.kind) {
                case OpKind::Gate:
                    apply_instruction(psi, c, in);
                    break;
                case OpKind::CondGate:
                    if (cbits[in.cbit]) apply_instruction(psi, c, in);
                    break;
                case OpKind::Measure: {
                    auto [bit, collapsed] = measure_qubit(psi, in.qubit, rng);
                    cbits[in.cbit] = bit;
                    psi = std::move(collapsed);
                    break;
                }
                case OpKind::Reset: {
                    // measure + conditional X
                    std::vector<int> qs = in.targets;
                    if (qs.empty())
                        for (int q = 0; q < c.n_qubits; ++q) qs.push_back(q);
                    for (int q : qs) {
                        auto [bit, collapsed] = measure_qubit(psi, q, rng);
                        psi = std::move(collapsed);
                        if (bit) psi.apply(gates::pauli_x(), {q});
                    }
                    break;
                }
                case OpKind::Barrier:
                    break;
            }
        }

        std::string key;
        if (any_measure) {
            key.assign(static_cast<std::size_t>(c.n_clbits), '0');
            for (int b = 0; b < c.n_clbits; ++b)
                if (cbits[b]) key[c.n_clbits - 1 - b] = '1';
        } else {
            std::size_t idx = 0;
            for (int q = 0; q < c.n_qubits; ++q) {
                auto [bit, collapsed] = measure_qubit(psi, q, rng);
                psi = std::move(collapsed);
                if (bit) idx |= std::size_t{1} << q;
            }
            key = StateVector::bitstring(idx, c.n_qubits);
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace qimp
