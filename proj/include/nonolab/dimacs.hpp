// DIMACS CNF reading and writing.
#pragma once

#include <string>
#include <string_view>

#include "nonolab/cnf.hpp"

namespace nonolab {

std::string to_dimacs(const CnfFormula& formula);
// Accepts comment lines and a missing trailing 0 on the last clause.
CnfFormula parse_dimacs(std::string_view text);

}  // namespace nonolab
