// Board and puzzle data model: descriptions, fills, random generation.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonolab {

class BoardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered run lengths of one line. The empty description is an all-empty line.
class Description {
 public:
  Description() = default;
  Description(std::initializer_list<int> runs);
  explicit Description(std::vector<int> runs);

  const std::vector<int>& runs() const { return runs_; }
  std::size_t count() const { return runs_.size(); }
  bool empty() const { return runs_.empty(); }
  int filled() const;
  // Shortest line that can hold every run with single separators.
  int min_length() const;
  bool fits(int length) const { return min_length() <= length; }

  std::string to_string() const;

  friend bool operator==(const Description&, const Description&) = default;

 private:
  std::vector<int> runs_;
};

enum class CellState : std::uint8_t { Empty = 0, Filled = 1, Indeterminate = 2 };

char to_char(CellState s);

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Row-major m x n matrix.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T init = T{})
      : rows_(rows), cols_(cols), cells_(checked_size(rows, cols), init) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return cells_.size(); }

  const T& operator()(int r, int c) const { return cells_[index(r, c)]; }
  T& operator()(int r, int c) { return cells_[index(r, c)]; }
  const T& at(Cell cell) const { return (*this)(cell.row, cell.col); }
  T& at(Cell cell) { return (*this)(cell.row, cell.col); }

  std::span<const T> data() const { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw BoardError("negative grid dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> cells_;
};

// Boolean board contents; true = filled.
class CompleteFill {
 public:
  CompleteFill() = default;
  CompleteFill(int rows, int cols, bool filled = false) : grid_(rows, cols, filled ? 1 : 0) {}

  int rows() const { return grid_.rows(); }
  int cols() const { return grid_.cols(); }

  bool filled(int r, int c) const { return grid_(r, c) != 0; }
  bool filled(Cell cell) const { return filled(cell.row, cell.col); }
  void set(int r, int c, bool value) { grid_(r, c) = value ? 1 : 0; }

  std::vector<bool> row(int r) const;
  std::vector<bool> column(int c) const;
  int popcount() const;

  friend bool operator==(const CompleteFill&, const CompleteFill&) = default;

 private:
  Grid<std::uint8_t> grid_;
};

using PartialFill = Grid<CellState>;

PartialFill blank_partial(int rows, int cols);
PartialFill to_partial(const CompleteFill& fill);
// Throws BoardError when any cell is still indeterminate.
CompleteFill to_complete(const PartialFill& partial);

class Density {
 public:
  explicit Density(double rho);
  double value() const { return rho_; }

 private:
  double rho_;
};

struct Seed {
  std::uint64_t value = 0;
};

// Row descriptions, column descriptions and dimensions.
class Puzzle {
 public:
  Puzzle(int rows, int cols, std::vector<Description> row_descs, std::vector<Description> col_descs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Description>& row_descriptions() const { return row_descs_; }
  const std::vector<Description>& col_descriptions() const { return col_descs_; }
  const Description& row(int r) const { return row_descs_.at(static_cast<std::size_t>(r)); }
  const Description& col(int c) const { return col_descs_.at(static_cast<std::size_t>(c)); }

  // Row and column run totals agree. Puzzles that fail this are constructible
  // (they are simply inconsistent).
  bool balanced() const;

  friend bool operator==(const Puzzle&, const Puzzle&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Description> row_descs_;
  std::vector<Description> col_descs_;
};

Description extract_line_runs(const std::vector<bool>& line);

// Each cell is filled independently with probability rho, visited in row-major order.
CompleteFill generate_board(int rows, int cols, Density rho, Seed seed);

Puzzle extract_descriptions(const CompleteFill& fill);

// Throws BoardError on a dimension mismatch.
bool verify_solution(const Puzzle& puzzle, const CompleteFill& fill);

}  // namespace nonolab
