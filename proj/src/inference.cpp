#include "nonolab/inference.hpp"

#include <string>

#include "nonolab/automaton.hpp"

namespace nonolab {

std::vector<Literal> fixed_assumptions(const VarMap& vars, const PartialFill& fixed) {
  if (fixed.rows() != vars.rows() || fixed.cols() != vars.cols()) {
    throw BoardError("partial fill dimensions do not match the puzzle");
  }
  std::vector<Literal> out;
  for (int r = 0; r < fixed.rows(); ++r) {
    for (int c = 0; c < fixed.cols(); ++c) {
      if (fixed(r, c) == CellState::Indeterminate) continue;
      out.push_back(vars.cell_literal({r, c}, fixed(r, c) == CellState::Filled));
    }
  }
  return out;
}

InferenceSession::InferenceSession(const Puzzle& puzzle, SolverConfig config)
    : solver_(config) {
  PuzzleEncoding enc = encode_puzzle(puzzle);
  vars_ = std::move(enc.vars);
  solver_.add_formula(enc.formula);
}

InferenceSession::InferenceSession(const CnfFormula& formula, const VarMap& vars,
                                   SolverConfig config)
    : vars_(vars), solver_(formula, config) {}

SolveResult InferenceSession::require_consistent(const PartialFill& fixed) {
  const auto assumptions = fixed_assumptions(vars_, fixed);
  SolveResult result = solver_.solve(assumptions);
  if (result.status == SolveStatus::Unsatisfiable) {
    throw InconsistentPuzzle("no solution of the puzzle agrees with the fixed cells");
  }
  if (result.status == SolveStatus::BudgetExhausted) {
    throw InconsistentPuzzle("consistency check exhausted its conflict budget");
  }
  return result;
}

SolveResult InferenceSession::query(Cell cell, Polarity polarity, const PartialFill* fixed) {
  std::vector<Literal> assumptions;
  if (fixed) assumptions = fixed_assumptions(vars_, *fixed);
  assumptions.push_back(vars_.cell_literal(cell, polarity == Polarity::Empty));
  return solver_.solve(assumptions);
}

bool InferenceSession::is_inferable(Cell cell, Polarity polarity, const PartialFill& fixed) {
  const CellState assigned = fixed.at(cell);
  if ((assigned == CellState::Filled && polarity == Polarity::Filled) ||
      (assigned == CellState::Empty && polarity == Polarity::Empty)) {
    throw std::invalid_argument("cell is already assigned the tested value");
  }
  require_consistent(fixed);
  const SolveResult result = query(cell, polarity, &fixed);
  if (result.status == SolveStatus::BudgetExhausted) {
    throw std::runtime_error("inference query exhausted its conflict budget");
  }
  return result.status == SolveStatus::Unsatisfiable;
}

bool is_inferable(const CnfFormula& formula, const VarMap& vars, Cell cell, Polarity polarity,
                  const PartialFill& fixed) {
  InferenceSession session(formula, vars);
  return session.is_inferable(cell, polarity, fixed);
}

InferenceReport count_inferred_filled(const Puzzle& puzzle, const CompleteFill& generating_fill,
                                      SolverConfig config, int board_id) {
  if (!verify_solution(puzzle, generating_fill)) {
    throw InconsistentPuzzle("generating fill does not satisfy the puzzle");
  }
  InferenceReport report;
  report.board_id = board_id;
  report.filled_cells = generating_fill.popcount();

  InferenceSession session(puzzle, config);
  const SolveResult base = session.solver().solve();
  report.base_propagations = base.stats.propagations;
  if (base.status == SolveStatus::Unsatisfiable) {
    throw InconsistentPuzzle("encoding of a solved puzzle is unsatisfiable");
  }

  for (int r = 0; r < puzzle.rows(); ++r) {
    for (int c = 0; c < puzzle.cols(); ++c) {
      const SolveResult result = session.query({r, c}, Polarity::Filled);
      ++report.queries_run;
      report.total_propagations += result.stats.propagations;
      if (result.status == SolveStatus::Unsatisfiable) {
        ++report.inferred_filled;
      } else if (result.status == SolveStatus::BudgetExhausted) {
        ++report.queries_exhausted;
      }
    }
  }
  report.proportion_inferred =
      report.filled_cells == 0
          ? 1.0
          : static_cast<double>(report.inferred_filled) / static_cast<double>(report.filled_cells);
  return report;
}

bool decide_inference(const Puzzle& puzzle, const PartialFill& fixed, DecideOptions options) {
  InferenceSession session(puzzle);
  session.require_consistent(fixed);
  for (int r = 0; r < puzzle.rows(); ++r) {
    for (int c = 0; c < puzzle.cols(); ++c) {
      const CellState s = fixed(r, c);
      for (Polarity p : {Polarity::Filled, Polarity::Empty}) {
        const bool already = (s == CellState::Filled && p == Polarity::Filled) ||
                             (s == CellState::Empty && p == Polarity::Empty);
        if (already) continue;
        if (s != CellState::Indeterminate && !options.test_assigned_cells) continue;
        const SolveResult result = session.query({r, c}, p, &fixed);
        if (result.status == SolveStatus::Unsatisfiable) return true;
      }
    }
  }
  return false;
}

char to_char(CellVerdict v) {
  switch (v) {
    case CellVerdict::FilledInAll: return 'F';
    case CellVerdict::EmptyInAll: return 'E';
    case CellVerdict::Varies: return '?';
  }
  return '?';
}

Grid<CellVerdict> infer_all(const Puzzle& puzzle, const PartialFill& fixed) {
  InferenceSession session(puzzle);
  const SolveResult witness = session.require_consistent(fixed);
  Grid<CellVerdict> out(puzzle.rows(), puzzle.cols(), CellVerdict::Varies);
  for (int r = 0; r < puzzle.rows(); ++r) {
    for (int c = 0; c < puzzle.cols(); ++c) {
      // The witness already shows one value is possible; only the other needs a query.
      const bool filled = witness.value(session.vars().cell(r, c));
      const Polarity p = filled ? Polarity::Filled : Polarity::Empty;
      if (session.query({r, c}, p, &fixed).status == SolveStatus::Unsatisfiable) {
        out(r, c) = filled ? CellVerdict::FilledInAll : CellVerdict::EmptyInAll;
      }
    }
  }
  return out;
}

namespace {

template <typename Visit>
void for_each_solution(const Puzzle& puzzle, const PartialFill& fixed, Visit&& visit) {
  const int m = puzzle.rows();
  const int n = puzzle.cols();
  if (m * n > kMaxBruteForceCells) {
    throw std::invalid_argument("brute force limited to " + std::to_string(kMaxBruteForceCells) +
                                " cells, board has " + std::to_string(m * n));
  }
  if (fixed.rows() != m || fixed.cols() != n) {
    throw BoardError("partial fill dimensions do not match the puzzle");
  }
  // Every row-valid line agreeing with the fixed cells; columns checked on complete fills.
  std::vector<std::vector<std::vector<bool>>> candidates(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    for (auto& line : enumerate_satisfying(puzzle.row(r), n)) {
      bool agrees = true;
      for (int c = 0; c < n && agrees; ++c) {
        const CellState s = fixed(r, c);
        if (s != CellState::Indeterminate && line[static_cast<std::size_t>(c)] != (s == CellState::Filled)) {
          agrees = false;
        }
      }
      if (agrees) candidates[static_cast<std::size_t>(r)].push_back(std::move(line));
    }
    if (candidates[static_cast<std::size_t>(r)].empty()) return;
  }
  std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
  CompleteFill fill(m, n);
  for (;;) {
    for (int r = 0; r < m; ++r) {
      const auto& line = candidates[static_cast<std::size_t>(r)][choice[static_cast<std::size_t>(r)]];
      for (int c = 0; c < n; ++c) fill.set(r, c, line[static_cast<std::size_t>(c)]);
    }
    if (verify_solution(puzzle, fill)) visit(fill);
    int r = m - 1;
    while (r >= 0) {
      auto& k = choice[static_cast<std::size_t>(r)];
      if (++k < candidates[static_cast<std::size_t>(r)].size()) break;
      k = 0;
      --r;
    }
    if (r < 0) break;
  }
}

}  // namespace

std::vector<CompleteFill> brute_force_solutions(const Puzzle& puzzle, const PartialFill& fixed) {
  std::vector<CompleteFill> out;
  for_each_solution(puzzle, fixed, [&](const CompleteFill& f) { out.push_back(f); });
  return out;
}

BruteForceInference brute_force_inference(const Puzzle& puzzle, const PartialFill& fixed) {
  const int m = puzzle.rows();
  const int n = puzzle.cols();
  Grid<int> filled_count(m, n, 0);
  BruteForceInference out;
  for_each_solution(puzzle, fixed, [&](const CompleteFill& f) {
    ++out.solution_count;
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) filled_count(r, c) += f.filled(r, c) ? 1 : 0;
  });
  if (out.solution_count == 0) throw InconsistentPuzzle("puzzle has no solution agreeing with the fixed cells");
  out.verdicts = Grid<CellVerdict>(m, n, CellVerdict::Varies);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      if (filled_count(r, c) == out.solution_count) out.verdicts(r, c) = CellVerdict::FilledInAll;
      if (filled_count(r, c) == 0) out.verdicts(r, c) = CellVerdict::EmptyInAll;
    }
  }
  return out;
}

}  // namespace nonolab
