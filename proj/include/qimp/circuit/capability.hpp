#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qimp/circuit/circuit.hpp"

namespace qimp {

enum class ResetPolicy { No, StartOnly, Anywhere };
enum class ConditionalPolicy { No, SimulatorOnly, Yes };

/// Per-dialect legality of barrier / reset / conditional / mid-circuit
/// measurement constructs. Profiles are data; the built-ins transcribe the
/// two vendor columns and can also be loaded from JSON.
struct CapabilityProfile {
    std::string name;
    bool allows_barrier = true;
    ResetPolicy allows_reset = ResetPolicy::Anywhere;
    ConditionalPolicy allows_conditional = ConditionalPolicy::Yes;
    bool allows_mid_circuit_measure = true;
};

namespace profiles {

/// barrier yes, reset no, conditional no, terminal measurement only.
CapabilityProfile dialect_a();

/// barrier no, reset at program start only, conditional on the vendor's
/// simulator but not the QPU, terminal measurement only on the QPU.
CapabilityProfile dialect_b();

/// The simulator variant of dialect-B: conditionals and mid-circuit
/// measurement are accepted.
CapabilityProfile dialect_b_sim();

std::optional<CapabilityProfile> by_name(const std::string& name);
std::vector<std::string> names();

CapabilityProfile from_json_file(const std::string& path);

}  // namespace profiles

/// One diagnostic per instruction the profile cannot host; empty iff the
/// circuit is deployable on that profile.
std::vector<Diagnostic> capability_check(const Circuit& c, const CapabilityProfile& profile);

}  // namespace qimp
