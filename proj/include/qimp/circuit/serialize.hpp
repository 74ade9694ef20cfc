#pragma once

#include <string>

#include "qimp/circuit/circuit.hpp"

namespace qimp {

/// Circuit <-> JSON with explicit field names; the layout is the CLI's
/// stable interchange format.
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& c, const std::string& path);

}  // namespace qimp
