#include "nonolab/cnf.hpp"

#include <algorithm>

namespace nonolab {

void CnfFormula::add_clause(std::span<const Literal> clause) {
  if (clause.empty()) throw CnfError("empty clause");
  starts_.push_back(literals_.size());
  for (Literal lit : clause) {
    if (lit.dimacs() == 0) throw CnfError("literal 0 in clause");
    literals_.push_back(lit);
    variable_count_ = std::max(variable_count_, lit.var());
  }
}

void CnfFormula::append(const CnfFormula& other) {
  for (std::size_t i = 0; i < other.clause_count(); ++i) add_clause(other.clause(i));
  variable_count_ = std::max(variable_count_, other.variable_count_);
}

void CnfFormula::reserve_variables(int count) { variable_count_ = std::max(variable_count_, count); }

std::span<const Literal> CnfFormula::clause(std::size_t i) const {
  const std::size_t begin = starts_.at(i);
  const std::size_t end = i + 1 < starts_.size() ? starts_[i + 1] : literals_.size();
  return std::span<const Literal>(literals_).subspan(begin, end - begin);
}

FormulaSize measure(const CnfFormula& formula) {
  FormulaSize size;
  size.clauses = static_cast<std::int64_t>(formula.clause_count());
  size.literal_occurrences = static_cast<std::int64_t>(formula.literal_count());
  std::vector<bool> seen(static_cast<std::size_t>(formula.variable_count()) + 1, false);
  for (std::size_t i = 0; i < formula.clause_count(); ++i) {
    for (Literal lit : formula.clause(i)) {
      auto v = static_cast<std::size_t>(lit.var());
      if (!seen[v]) {
        seen[v] = true;
        ++size.distinct_variables;
      }
    }
  }
  return size;
}

}  // namespace nonolab
