// Literals and clause databases.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonolab {

class CnfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A variable id (>= 1) with a sign, stored in DIMACS convention.
class Literal {
 public:
  constexpr Literal() = default;
  static Literal from_dimacs(int value) {
    if (value == 0) throw CnfError("literal 0 is not a variable");
    return Literal(value);
  }
  static Literal positive(int var) { return from_dimacs(checked(var)); }
  static Literal negative(int var) { return from_dimacs(-checked(var)); }
  // Literal that is true when var takes `value`.
  static Literal of(int var, bool value) { return value ? positive(var) : negative(var); }

  constexpr int var() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool is_negative() const { return value_ < 0; }
  constexpr int dimacs() const { return value_; }
  constexpr Literal operator~() const { return Literal(-value_); }

  friend constexpr bool operator==(Literal, Literal) = default;

 private:
  constexpr explicit Literal(int value) : value_(value) {}
  static int checked(int var) {
    if (var < 1) throw CnfError("variable ids start at 1, got " + std::to_string(var));
    return var;
  }

  int value_ = 0;
};

struct FormulaSize {
  std::int64_t clauses = 0;
  std::int64_t literal_occurrences = 0;
  std::int64_t distinct_variables = 0;
  friend bool operator==(const FormulaSize&, const FormulaSize&) = default;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int variable_count) : variable_count_(variable_count) {}

  // Grows variable_count to cover the clause. Empty clauses are rejected.
  void add_clause(std::span<const Literal> clause);
  void add_clause(std::initializer_list<Literal> clause) {
    add_clause(std::span<const Literal>(clause.begin(), clause.size()));
  }
  void append(const CnfFormula& other);
  void reserve_variables(int count);

  int variable_count() const { return variable_count_; }
  std::size_t clause_count() const { return starts_.size(); }
  std::span<const Literal> clause(std::size_t i) const;
  std::size_t literal_count() const { return literals_.size(); }

 private:
  int variable_count_ = 0;
  std::vector<Literal> literals_;
  std::vector<std::size_t> starts_;
};

FormulaSize measure(const CnfFormula& formula);

}  // namespace nonolab
