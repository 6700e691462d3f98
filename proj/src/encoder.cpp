#include "nonolab/encoder.hpp"

#include <stdexcept>
#include <string>

namespace nonolab {

VarRange VarAllocator::block(int count) {
  if (count < 0) throw std::invalid_argument("negative variable block");
  VarRange range{used_ + 1, count};
  used_ += count;
  return range;
}

int VarMap::cell(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("cell (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside the board");
  }
  return r * cols_ + c + 1;
}

SizePrediction predict_size(int n, int t, int sum_runs) {
  if (n < 1 || t < 0 || sum_runs < t || sum_runs + std::max(t - 1, 0) > n) {
    throw std::invalid_argument("predict_size: no line of " + std::to_string(n) + " cells has " +
                                std::to_string(t) + " runs totalling " + std::to_string(sum_runs));
  }
  const std::int64_t N = n;
  const std::int64_t T = t;
  const std::int64_t L = sum_runs;
  SizePrediction p;
  p.clauses = (5 * N + 2) * (T + 1 + L) - 4;
  p.total_variables = (14 * N + 2) * T + 8 * N - 2 + (11 * N + 2) * L;
  p.distinct_variables = (2 * N + 1) * (T + L) + N;
  return p;
}

namespace {

// Forward variable F(q, i) and backward variable B(q, i) of the non-start
// states q = 1..S-1.
class LineLayout {
 public:
  LineLayout(VarRange forward, VarRange backward, int n)
      : forward_(forward), backward_(backward), n_(n) {}

  Literal reach(int state, int pos) const {
    return Literal::positive(forward_.first + (state - 1) * (n_ + 1) + pos);
  }
  Literal accept(int state, int pos) const {
    return Literal::positive(backward_.first + (state - 1) * n_ + (pos - 1));
  }

 private:
  VarRange forward_;
  VarRange backward_;
  int n_;
};

}  // namespace

LineEncoding encode_line(const LineAutomaton& automaton, int n, std::span<const int> cell_vars,
                         VarAllocator& allocator) {
  const Description& desc = automaton.description();
  if (n < 1) throw std::invalid_argument("encode_line: line length must be positive");
  if (cell_vars.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("encode_line: expected " + std::to_string(n) +
                                " cell variables, got " + std::to_string(cell_vars.size()));
  }
  if (!desc.fits(n)) {
    throw std::invalid_argument("encode_line: description " + desc.to_string() +
                                " does not fit in " + std::to_string(n) + " cells");
  }

  LineEncoding out;
  auto cell = [&](int pos, bool bit) {  // pos is 1-based
    return Literal::of(cell_vars[static_cast<std::size_t>(pos - 1)], bit);
  };

  if (desc.empty()) {
    for (int pos = 1; pos <= n; ++pos) out.clauses.add_clause({cell(pos, false)});
    return out;
  }

  const int states = automaton.state_count();
  const int aux_states = states - 1;
  out.forward = allocator.block(aux_states * (n + 1));
  out.backward = allocator.block(aux_states * n);
  out.clauses.reserve_variables(allocator.used());
  const LineLayout vars(out.forward, out.backward, n);
  const int first_run = automaton.step(automaton.start(), true);
  CnfFormula& f = out.clauses;
  std::vector<Literal> clause;

  for (int q = 1; q < states; ++q) f.add_clause({~vars.reach(q, 0)});

  for (int i = 0; i < n; ++i) {
    // Leaving the start state: no other state reachable at i and a filled cell.
    clause.clear();
    for (int q = 1; q < states; ++q) clause.push_back(vars.reach(q, i));
    clause.push_back(cell(i + 1, false));
    clause.push_back(vars.reach(first_run, i + 1));
    f.add_clause(clause);

    for (int q = 1; q < states; ++q) {
      for (int bit = 0; bit < 2; ++bit) {
        const int to = automaton.step(q, bit != 0);
        if (to == LineAutomaton::kReject) {
          f.add_clause({~vars.reach(q, i), cell(i + 1, bit == 0)});
        } else {
          f.add_clause({~vars.reach(q, i), cell(i + 1, bit == 0), vars.reach(to, i + 1)});
        }
      }
    }
  }

  // Support: a reachable state was entered on its entry bit from a reachable predecessor.
  for (int i = 1; i <= n; ++i) {
    for (int q = 1; q < states; ++q) {
      f.add_clause({~vars.reach(q, i), cell(i, automaton.entry_bit(q))});
      if (q == first_run) continue;
      clause.clear();
      clause.push_back(~vars.reach(q, i));
      for (int pred : automaton.predecessors(q)) clause.push_back(vars.reach(pred, i - 1));
      f.add_clause(clause);
    }
  }

  for (int i = 1; i <= n; ++i)
    for (int q = 1; q < states; ++q) f.add_clause({~vars.reach(q, i), vars.accept(q, i)});

  for (int i = 1; i < n; ++i) {
    for (int q = 1; q < states; ++q) {
      for (int bit = 0; bit < 2; ++bit) {
        const int to = automaton.step(q, bit != 0);
        if (to == LineAutomaton::kReject) {
          f.add_clause({~vars.accept(q, i), cell(i + 1, bit == 0)});
        } else {
          f.add_clause({~vars.accept(q, i), cell(i + 1, bit == 0), vars.accept(to, i + 1)});
        }
      }
    }
  }

  clause.clear();
  for (int q = 1; q < states; ++q) {
    if (automaton.accepting(q)) {
      clause.push_back(vars.reach(q, n));
    } else {
      f.add_clause({~vars.accept(q, n)});
    }
  }
  f.add_clause(clause);
  return out;
}

PuzzleEncoding encode_puzzle(const Puzzle& puzzle) {
  const int m = puzzle.rows();
  const int n = puzzle.cols();
  PuzzleEncoding enc{CnfFormula(m * n), VarMap(m, n)};
  VarAllocator allocator(m * n);
  std::vector<int> cells;

  auto encode = [&](LineKind kind, int index, const Description& desc, int length) {
    cells.clear();
    for (int k = 0; k < length; ++k) {
      cells.push_back(kind == LineKind::Row ? enc.vars.cell(index, k) : enc.vars.cell(k, index));
    }
    LineEncoding line = encode_line(build_automaton(desc), length, cells, allocator);
    enc.formula.append(line.clauses);
    enc.vars.add_line({kind, index, line.forward, line.backward});
  };

  for (int r = 0; r < m; ++r) encode(LineKind::Row, r, puzzle.row(r), n);
  for (int c = 0; c < n; ++c) encode(LineKind::Column, c, puzzle.col(c), m);
  enc.formula.reserve_variables(allocator.used());
  return enc;
}

}  // namespace nonolab
