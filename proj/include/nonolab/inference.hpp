// Cell inferability: does every solution give a cell the same contents?
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nonolab/board.hpp"
#include "nonolab/encoder.hpp"
#include "nonolab/solver.hpp"

namespace nonolab {

class InconsistentPuzzle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Polarity { Filled, Empty };

// Assumption literals for every determined cell of `fixed`.
std::vector<Literal> fixed_assumptions(const VarMap& vars, const PartialFill& fixed);

// One incremental solver session over a puzzle's encoding.
class InferenceSession {
 public:
  explicit InferenceSession(const Puzzle& puzzle, SolverConfig config = {});
  InferenceSession(const CnfFormula& formula, const VarMap& vars, SolverConfig config = {});

  const VarMap& vars() const { return vars_; }
  Solver& solver() { return solver_; }

  // Throws InconsistentPuzzle when no solution extends `fixed`.
  SolveResult require_consistent(const PartialFill& fixed);

  // True iff every solution extending `fixed` gives `cell` this polarity.
  // Throws std::invalid_argument if fixed already assigns that polarity.
  bool is_inferable(Cell cell, Polarity polarity, const PartialFill& fixed);

  // Solve with the cell forced away from `polarity`; no consistency check.
  SolveResult query(Cell cell, Polarity polarity, const PartialFill* fixed = nullptr);

 private:
  VarMap vars_;
  Solver solver_;
};

// Builds a fresh session; see InferenceSession::is_inferable.
bool is_inferable(const CnfFormula& formula, const VarMap& vars, Cell cell, Polarity polarity,
                  const PartialFill& fixed);

struct InferenceReport {
  int board_id = 0;
  int filled_cells = 0;
  int inferred_filled = 0;
  // inferred_filled / filled_cells, or 1 when the board has no filled cells.
  double proportion_inferred = 1.0;
  // Propagations of the per-cell queries only.
  std::int64_t total_propagations = 0;
  // Propagations of the initial assumption-free consistency solve.
  std::int64_t base_propagations = 0;
  int queries_run = 0;
  int queries_exhausted = 0;
};

// Tests every cell under the assumption that it is empty and counts the
// refutations. Throws InconsistentPuzzle when the fill does not solve the puzzle.
InferenceReport count_inferred_filled(const Puzzle& puzzle, const CompleteFill& generating_fill,
                                      SolverConfig config = {}, int board_id = 0);

struct DecideOptions {
  // Also test assigned cells for the opposite value. Such a test can never
  // succeed on a consistent instance.
  bool test_assigned_cells = false;
};

bool decide_inference(const Puzzle& puzzle, const PartialFill& fixed, DecideOptions options = {});

enum class CellVerdict { FilledInAll, EmptyInAll, Varies };

char to_char(CellVerdict v);

// Per-cell verdicts from SAT queries (both polarities for every indeterminate cell).
Grid<CellVerdict> infer_all(const Puzzle& puzzle, const PartialFill& fixed);

inline constexpr int kMaxBruteForceCells = 25;

struct BruteForceInference {
  Grid<CellVerdict> verdicts;
  std::int64_t solution_count = 0;
};

// Exhaustive enumeration over fills; independent of the SAT route.
// Throws std::invalid_argument above kMaxBruteForceCells and InconsistentPuzzle
// when no fill matches.
BruteForceInference brute_force_inference(const Puzzle& puzzle, const PartialFill& fixed);

// All solutions of a small puzzle, in row-major lexicographic order.
std::vector<CompleteFill> brute_force_solutions(const Puzzle& puzzle, const PartialFill& fixed);

}  // namespace nonolab
