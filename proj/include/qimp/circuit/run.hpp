#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qimp/circuit/circuit.hpp"
#include "qimp/simcore/measurement.hpp"
#include "qimp/simcore/state_vector.hpp"

namespace qimp {

/// Deferred-statevector execution: measurements are rewritten as quantum
/// controls (defer_measurements) and the final state is returned. Refuses
/// to run (ValidationError) when validate() reports diagnostics.
StateVector run_deferred(const Circuit& c, const StateVector* initial = nullptr);

/// Shot-by-shot execution with collapse semantics. Counts are keyed by the
/// classical register read as c[m-1]...c[0]; circuits without any measure
/// get an implicit terminal measurement of every qubit (key q[n-1]...q[0]).
std::map<std::string, long> run_sampled(const Circuit& c, long shots, std::uint64_t seed,
                                        const StateVector* initial = nullptr);

}  // namespace qimp
