// Unrolls line automata into CNF and conjoins rows and columns.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nonolab/automaton.hpp"
#include "nonolab/board.hpp"
#include "nonolab/cnf.hpp"

namespace nonolab {

// Half-open block of variable ids [first, first + count).
struct VarRange {
  int first = 0;
  int count = 0;
  bool contains(int var) const { return var >= first && var < first + count; }
};

class VarAllocator {
 public:
  explicit VarAllocator(int used = 0) : used_(used) {}
  VarRange block(int count);
  int used() const { return used_; }

 private:
  int used_;
};

enum class LineKind { Row, Column };

// Auxiliary variables of one line, tagged by role.
struct LineVars {
  LineKind kind = LineKind::Row;
  int index = 0;
  VarRange forward;   // reachability of each non-start state at positions 0..n
  VarRange backward;  // acceptance from each non-start state at positions 1..n
};

// Cell variables come first in row-major order (x_ij = i*n + j + 1), then the
// auxiliaries of each row, then of each column.
class VarMap {
 public:
  VarMap() = default;
  VarMap(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cell(int r, int c) const;
  int cell(Cell cell) const { return this->cell(cell.row, cell.col); }
  // Literal asserting that the cell has the given contents.
  Literal cell_literal(Cell cell, bool filled) const { return Literal::of(this->cell(cell), filled); }
  int cell_count() const { return rows_ * cols_; }
  bool is_cell(int var) const { return var >= 1 && var <= cell_count(); }

  const std::vector<LineVars>& lines() const { return lines_; }
  void add_line(LineVars line) { lines_.push_back(line); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LineVars> lines_;
};

struct SizePrediction {
  std::int64_t clauses = 0;
  std::int64_t total_variables = 0;
  std::int64_t distinct_variables = 0;
  friend bool operator==(const SizePrediction&, const SizePrediction&) = default;
};

// Published closed forms for a line of n cells with t runs totalling sum_runs.
// Throws std::invalid_argument when the arguments describe no valid line.
SizePrediction predict_size(int n, int t, int sum_runs);

struct LineEncoding {
  CnfFormula clauses;
  VarRange forward;
  VarRange backward;
};

// Clauses over cell_vars (one per position) plus fresh auxiliaries drawn from
// `allocator`, satisfiable for a given cell assignment iff the automaton
// accepts the induced line. Throws std::invalid_argument if the description
// does not fit.
LineEncoding encode_line(const LineAutomaton& automaton, int n, std::span<const int> cell_vars,
                         VarAllocator& allocator);

struct PuzzleEncoding {
  CnfFormula formula;
  VarMap vars;
};

PuzzleEncoding encode_puzzle(const Puzzle& puzzle);

}  // namespace nonolab
