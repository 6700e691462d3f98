#include "nonolab/board.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nonolab/random.hpp"

namespace nonolab {

Description::Description(std::initializer_list<int> runs) : Description(std::vector<int>(runs)) {}

Description::Description(std::vector<int> runs) : runs_(std::move(runs)) {
  for (int len : runs_) {
    if (len < 1) throw BoardError("run lengths must be positive, got " + std::to_string(len));
  }
}

int Description::filled() const { return std::accumulate(runs_.begin(), runs_.end(), 0); }

int Description::min_length() const {
  return filled() + std::max(static_cast<int>(runs_.size()) - 1, 0);
}

std::string Description::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (i) out << ',';
    out << runs_[i];
  }
  out << ']';
  return out.str();
}

char to_char(CellState s) {
  switch (s) {
    case CellState::Filled: return '#';
    case CellState::Empty: return '.';
    case CellState::Indeterminate: return '?';
  }
  return '?';
}

std::vector<bool> CompleteFill::row(int r) const {
  std::vector<bool> line(static_cast<std::size_t>(cols()));
  for (int c = 0; c < cols(); ++c) line[static_cast<std::size_t>(c)] = filled(r, c);
  return line;
}

std::vector<bool> CompleteFill::column(int c) const {
  std::vector<bool> line(static_cast<std::size_t>(rows()));
  for (int r = 0; r < rows(); ++r) line[static_cast<std::size_t>(r)] = filled(r, c);
  return line;
}

int CompleteFill::popcount() const {
  int count = 0;
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) count += filled(r, c) ? 1 : 0;
  return count;
}

PartialFill blank_partial(int rows, int cols) {
  return PartialFill(rows, cols, CellState::Indeterminate);
}

PartialFill to_partial(const CompleteFill& fill) {
  PartialFill out(fill.rows(), fill.cols());
  for (int r = 0; r < fill.rows(); ++r)
    for (int c = 0; c < fill.cols(); ++c)
      out(r, c) = fill.filled(r, c) ? CellState::Filled : CellState::Empty;
  return out;
}

CompleteFill to_complete(const PartialFill& partial) {
  CompleteFill out(partial.rows(), partial.cols());
  for (int r = 0; r < partial.rows(); ++r) {
    for (int c = 0; c < partial.cols(); ++c) {
      if (partial(r, c) == CellState::Indeterminate) {
        throw BoardError("cell (" + std::to_string(r) + "," + std::to_string(c) +
                         ") is indeterminate");
      }
      out.set(r, c, partial(r, c) == CellState::Filled);
    }
  }
  return out;
}

Density::Density(double rho) : rho_(rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw BoardError("density must lie in [0,1]");
}

Puzzle::Puzzle(int rows, int cols, std::vector<Description> row_descs,
               std::vector<Description> col_descs)
    : rows_(rows), cols_(cols), row_descs_(std::move(row_descs)), col_descs_(std::move(col_descs)) {
  if (rows < 1 || cols < 1) throw BoardError("puzzle dimensions must be positive");
  if (row_descs_.size() != static_cast<std::size_t>(rows)) {
    throw BoardError("expected " + std::to_string(rows) + " row descriptions, got " +
                     std::to_string(row_descs_.size()));
  }
  if (col_descs_.size() != static_cast<std::size_t>(cols)) {
    throw BoardError("expected " + std::to_string(cols) + " column descriptions, got " +
                     std::to_string(col_descs_.size()));
  }
  for (std::size_t r = 0; r < row_descs_.size(); ++r) {
    if (!row_descs_[r].fits(cols)) {
      throw BoardError("row " + std::to_string(r) + " description " + row_descs_[r].to_string() +
                       " does not fit in " + std::to_string(cols) + " cells");
    }
  }
  for (std::size_t c = 0; c < col_descs_.size(); ++c) {
    if (!col_descs_[c].fits(rows)) {
      throw BoardError("column " + std::to_string(c) + " description " +
                       col_descs_[c].to_string() + " does not fit in " + std::to_string(rows) +
                       " cells");
    }
  }
}

bool Puzzle::balanced() const {
  int row_total = 0;
  int col_total = 0;
  for (const auto& d : row_descs_) row_total += d.filled();
  for (const auto& d : col_descs_) col_total += d.filled();
  return row_total == col_total;
}

Description extract_line_runs(const std::vector<bool>& line) {
  std::vector<int> runs;
  int current = 0;
  for (bool cell : line) {
    if (cell) {
      ++current;
    } else if (current > 0) {
      runs.push_back(current);
      current = 0;
    }
  }
  if (current > 0) runs.push_back(current);
  return Description(std::move(runs));
}

CompleteFill generate_board(int rows, int cols, Density rho, Seed seed) {
  if (rows < 1 || cols < 1) throw BoardError("board dimensions must be positive");
  SplitMix64 rng(seed.value);
  CompleteFill fill(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) fill.set(r, c, rng.unit() <= rho.value());
  return fill;
}

Puzzle extract_descriptions(const CompleteFill& fill) {
  std::vector<Description> rows;
  std::vector<Description> cols;
  rows.reserve(static_cast<std::size_t>(fill.rows()));
  cols.reserve(static_cast<std::size_t>(fill.cols()));
  for (int r = 0; r < fill.rows(); ++r) rows.push_back(extract_line_runs(fill.row(r)));
  for (int c = 0; c < fill.cols(); ++c) cols.push_back(extract_line_runs(fill.column(c)));
  return Puzzle(fill.rows(), fill.cols(), std::move(rows), std::move(cols));
}

bool verify_solution(const Puzzle& puzzle, const CompleteFill& fill) {
  if (puzzle.rows() != fill.rows() || puzzle.cols() != fill.cols()) {
    throw BoardError("fill is " + std::to_string(fill.rows()) + "x" + std::to_string(fill.cols()) +
                     " but puzzle is " + std::to_string(puzzle.rows()) + "x" +
                     std::to_string(puzzle.cols()));
  }
  for (int r = 0; r < fill.rows(); ++r)
    if (extract_line_runs(fill.row(r)) != puzzle.row(r)) return false;
  for (int c = 0; c < fill.cols(); ++c)
    if (extract_line_runs(fill.column(c)) != puzzle.col(c)) return false;
  return true;
}

}  // namespace nonolab
