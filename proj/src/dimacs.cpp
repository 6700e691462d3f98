#include "nonolab/dimacs.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace nonolab {

std::string to_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.variable_count()) + " " +
                    std::to_string(formula.clause_count()) + "\n";
  for (std::size_t i = 0; i < formula.clause_count(); ++i) {
    for (Literal lit : formula.clause(i)) {
      out += std::to_string(lit.dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  int declared_vars = 0;
  long declared_clauses = 0;
  CnfFormula formula;
  std::vector<Literal> pending;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (!(fields >> kind >> declared_vars >> declared_clauses) || kind != "cnf" ||
          declared_vars < 0 || declared_clauses < 0) {
        throw CnfError("bad DIMACS header: '" + line + "'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw CnfError("clause before DIMACS header");
    std::istringstream tokens(line);
    long value = 0;
    while (tokens >> value) {
      if (value == 0) {
        if (pending.empty()) throw CnfError("empty clause in DIMACS input");
        formula.add_clause(pending);
        pending.clear();
      } else {
        if (value > declared_vars || -value > declared_vars) {
          throw CnfError("literal " + std::to_string(value) + " exceeds declared variable count");
        }
        pending.push_back(Literal::from_dimacs(static_cast<int>(value)));
      }
    }
    if (!tokens.eof()) throw CnfError("bad token in DIMACS line: '" + line + "'");
  }
  if (!pending.empty()) formula.add_clause(pending);
  if (!have_header) throw CnfError("missing DIMACS header");
  if (static_cast<long>(formula.clause_count()) != declared_clauses) {
    throw CnfError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                   std::to_string(formula.clause_count()));
  }
  formula.reserve_variables(declared_vars);
  return formula;
}

}  // namespace nonolab
