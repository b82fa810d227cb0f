#pragma once

#include <string>
#include <vector>

#include "topoqec/pauli.hpp"

namespace topoqec {

/// A small stabilizer code given by explicit generators and logical operators.
struct CodeFixture {
    std::string name;
    std::size_t n = 0;
    std::vector<PauliProduct> generators;
    std::vector<PauliProduct> logical_x; // one per logical qubit
    std::vector<PauliProduct> logical_z;
};

/// Known names: bitflip3, phaseflip3, shor9, five_qubit, steane7,
/// reed_muller15. Throws std::invalid_argument otherwise.
CodeFixture code_fixture(const std::string& name);

std::vector<std::string> code_fixture_names();

} // namespace topoqec
