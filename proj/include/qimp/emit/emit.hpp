#pragma once

#include <string>
#include <vector>

#include "qimp/circuit/capability.hpp"
#include "qimp/circuit/circuit.hpp"

namespace qimp {

enum class Dialect { Qasm, Quil };

struct DialectText {
    Dialect dialect;
    std::vector<std::string> lines;

    std::string str() const;
};

/// Render a circuit as dialect text. Anticontrols are lowered first. The
/// circuit must pass capability_check against `profile` unless `force` is
/// set, in which case the diagnostics are embedded as comments. Emission is
/// deterministic: equal circuits produce byte-identical text.
DialectText emit(const Circuit& c, Dialect dialect, const CapabilityProfile& profile,
                 bool force = false);

/// Parse text from the emitted subset back into a circuit; unknown tokens
/// raise ParseError with the offending line number. For quil the register
/// width is inferred from the highest referenced qubit.
Circuit parse(const DialectText& text);
Circuit parse(Dialect dialect, const std::string& text);

std::string dialect_extension(Dialect d);  // ".qasm" / ".quil"

}  // namespace qimp
