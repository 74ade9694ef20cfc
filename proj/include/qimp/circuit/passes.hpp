#pragma once

#include "qimp/circuit/circuit.hpp"

namespace qimp {

/// Rewrite every anticontrol as an X-conjugated control: X on the qubit
/// before and after the gate, with the qubit promoted to a plain control.
/// Statevector semantics are unchanged.
Circuit lower_anticontrols(const Circuit& c);

/// Deferred-measurement rewrite: measures are removed and every classical
/// control becomes a quantum control on the measured qubit. Requires each
/// conditioned classical bit to be written by exactly one measure, and the
/// measured qubit to stay untouched afterwards (other than as the new
/// control); violations raise StructuralError. Leading resets on still-
/// ground qubits are dropped.
Circuit defer_measurements(const Circuit& c);

}  // namespace qimp
