// Conflict-driven clause-learning SAT solver with assumption literals.
//
// Watched-literal propagation, first-UIP learning with basic minimization,
// activity-ordered branching (ties to the lowest variable), geometric
// restarts, phase saving with initial polarity false. No preprocessing.
//
// A propagation is one literal assigned because a clause became unit.
// Decisions, assumptions and input unit clauses are not propagations.
#pragma once

#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "nonolab/cnf.hpp"

namespace nonolab {

struct SolverConfig {
  // Maximum conflicts per solve call; negative means unlimited.
  std::int64_t conflict_budget = -1;
  double restart_first = 100.0;
  double restart_factor = 1.5;
  double variable_decay = 0.95;
  double clause_decay = 0.999;
};

enum class SolveStatus { Satisfiable, Unsatisfiable, BudgetExhausted };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::int64_t propagations = 0;
  std::int64_t decisions = 0;
  std::int64_t conflicts = 0;
  std::int64_t restarts = 0;
  std::chrono::nanoseconds wall_time{0};

  SolveStats& operator+=(const SolveStats& other);
  // Counter equality; wall time is ignored.
  bool same_counts(const SolveStats& other) const;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsatisfiable;
  // Indexed by variable id; entry 0 unused. Empty unless satisfiable.
  std::vector<bool> model;
  SolveStats stats;

  bool satisfiable() const { return status == SolveStatus::Satisfiable; }
  bool value(int var) const { return model.at(static_cast<std::size_t>(var)); }
  bool value(Literal lit) const { return value(lit.var()) != lit.is_negative(); }
};

// One incremental session. Clauses may be added between solve calls; learned
// clauses persist. Not thread-safe; separate sessions are independent.
class Solver {
 public:
  explicit Solver(SolverConfig config = {});
  explicit Solver(const CnfFormula& base, SolverConfig config = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  void add_formula(const CnfFormula& formula);
  void add_clause(std::span<const Literal> clause);
  void reserve_variables(int count);

  // Throws CnfError if an assumption names a variable beyond variable_count().
  SolveResult solve(std::span<const Literal> assumptions = {});
  SolveResult solve(std::initializer_list<Literal> assumptions) {
    return solve(std::span<const Literal>(assumptions.begin(), assumptions.size()));
  }
  // Adds the clauses permanently, then solves under the assumptions.
  SolveResult solve_incremental(const CnfFormula& added, std::span<const Literal> assumptions);

  int variable_count() const;
  const SolveStats& session_stats() const;
  std::size_t learnt_count() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

SolveResult solve(const CnfFormula& formula, std::span<const Literal> assumptions = {},
                  SolverConfig config = {});

// Clause-by-clause check of a model against a formula.
bool satisfies(const CnfFormula& formula, const std::vector<bool>& model);

}  // namespace nonolab
