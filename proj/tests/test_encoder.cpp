#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "nonolab/dimacs.hpp"
#include "nonolab/encoder.hpp"
#include "nonolab/solver.hpp"
#include "oracles.hpp"

using namespace nonolab;

namespace {

struct LineFragment {
  CnfFormula formula;
  std::vector<int> cells;
};

LineFragment fragment(const Description& d, int n) {
  LineFragment out;
  out.cells.resize(static_cast<std::size_t>(n));
  std::iota(out.cells.begin(), out.cells.end(), 1);
  VarAllocator alloc(n);
  out.formula = encode_line(build_automaton(d), n, out.cells, alloc).clauses;
  out.formula.reserve_variables(alloc.used());
  return out;
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(predict_size(5, 2, 3) == SizePrediction{158, 353, 60});
  CHECK(predict_size(1, 1, 1) == SizePrediction{7 * 3 - 4, 16 + 8 - 2 + 13, 3 * 2 + 1});
  CHECK(predict_size(4, 0, 0).distinct_variables == 4);
  CHECK_THROWS_AS(predict_size(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(predict_size(5, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(predict_size(4, 2, 4), std::invalid_argument);
  CHECK_NOTHROW(predict_size(5, 2, 4));
}

TEST_CASE("encode_line rejects descriptions that do not fit") {
  std::vector<int> cells{1, 2, 3};
  VarAllocator alloc(3);
  CHECK_THROWS_AS(encode_line(build_automaton({2, 1}), 3, cells, alloc), std::invalid_argument);
}

TEST_CASE("line fragment is satisfiable exactly on accepted lines") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto desc = extract_line_runs(oracle::bits_of(static_cast<std::uint32_t>(rng()), n));
    const auto frag = fragment(desc, n);
    oracle::Dpll dpll(frag.formula);
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      const auto w = oracle::bits_of(x, n);
      std::vector<Literal> cells;
      for (int i = 0; i < n; ++i) cells.push_back(Literal::of(i + 1, w[static_cast<std::size_t>(i)]));
      CHECK(dpll.satisfiable(cells) == (extract_line_runs(w) == desc));
    }
  }
}

TEST_CASE("measured line sizes track the closed forms") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const auto desc = extract_line_runs(oracle::bits_of(static_cast<std::uint32_t>(rng()), n));
    const auto size = measure(fragment(desc, n).formula);
    const auto pred = predict_size(n, static_cast<int>(desc.count()), desc.filled());
    CHECK(size.distinct_variables == pred.distinct_variables);
    if (desc.empty()) {
      CHECK(size.clauses == n);
      continue;
    }
    CHECK(size.clauses <= 2 * pred.clauses);
    CHECK(2 * size.clauses >= pred.clauses);
    CHECK(size.literal_occurrences <= 2 * pred.total_variables);
    CHECK(2 * size.literal_occurrences >= pred.total_variables);
  }
}

TEST_CASE("worked line size") {
  const auto size = measure(fragment({2, 1}, 5).formula);
  const auto pred = predict_size(5, 2, 3);
  CHECK(size.distinct_variables == 60);
  CHECK(size.clauses * 2 >= pred.clauses);
  CHECK(size.clauses <= pred.clauses * 2);
}

TEST_CASE("puzzle encoding shares cell variables") {
  const Puzzle p = oracle::figure_three_puzzle();
  const auto enc = encode_puzzle(p);
  CHECK(enc.vars.cell(0, 0) == 1);
  CHECK(enc.vars.cell(4, 4) == 25);
  CHECK(enc.vars.lines().size() == 10);
  std::vector<bool> used(static_cast<std::size_t>(enc.formula.variable_count()) + 1, false);
  for (const auto& line : enc.vars.lines()) {
    for (int v = line.forward.first; v < line.forward.first + line.forward.count; ++v) {
      CHECK_FALSE(enc.vars.is_cell(v));
      CHECK_FALSE(used[static_cast<std::size_t>(v)]);
      used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = line.backward.first; v < line.backward.first + line.backward.count; ++v) {
      CHECK_FALSE(enc.vars.is_cell(v));
      CHECK_FALSE(used[static_cast<std::size_t>(v)]);
      used[static_cast<std::size_t>(v)] = true;
    }
  }
  const auto result = solve(enc.formula);
  REQUIRE(result.satisfiable());
  CompleteFill fill(5, 5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) fill.set(r, c, result.value(enc.vars.cell(r, c)));
  CHECK(verify_solution(p, fill));
}

TEST_CASE("distinct variables grow quadratically with line length") {
  std::vector<double> xs, ys;
  for (int n : {10, 20, 40, 80}) {
    double total = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto fill = generate_board(1, n, Density(0.5), Seed{s * 1000 + static_cast<std::uint64_t>(n)});
      total += static_cast<double>(measure(fragment(extract_line_runs(fill.row(0)), n).formula).distinct_variables);
    }
    xs.push_back(std::log(n));
    ys.push_back(std::log(total / 50.0));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / 4;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / 4;
  double num = 0, den = 0;
  for (int i = 0; i < 4; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  CHECK(num / den == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("dimacs round trip") {
  const auto enc = encode_puzzle(oracle::permutation_puzzle());
  const std::string text = to_dimacs(enc.formula);
  CHECK(text.rfind("p cnf ", 0) == 0);
  const CnfFormula back = parse_dimacs(text);
  CHECK(to_dimacs(back) == text);
  CHECK(measure(back) == measure(enc.formula));
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), CnfError);
  CHECK(parse_dimacs("c hi\np cnf 2 2\n1 -2 0\n2").clause_count() == 2);
}

TEST_CASE("worked encoder examples") {
  CHECK(predict_size(5, 0, 0) == SizePrediction{23, 38, 5});

  const auto frag = fragment({2, 1}, 5);
  oracle::Dpll dpll(frag.formula);
  std::vector<std::string> accepted;
  for (std::uint32_t x = 0; x < 32; ++x) {
    std::vector<Literal> cells;
    std::string text;
    for (int i = 0; i < 5; ++i) {
      const bool bit = (x >> (4 - i)) & 1u;
      cells.push_back(Literal::of(i + 1, bit));
      text += bit ? '1' : '0';
    }
    if (dpll.satisfiable(cells)) accepted.push_back(text);
  }
  CHECK(accepted == std::vector<std::string>{"01101", "11001", "11010"});

  CnfFormula f;
  f.add_clause({Literal::positive(1), Literal::negative(2)});
  f.add_clause({Literal::positive(2)});
  CHECK(measure(f) == FormulaSize{2, 3, 2});
  CHECK(measure(CnfFormula{}) == FormulaSize{});
  CnfFormula g;
  g.add_clause({Literal::positive(1), Literal::negative(2)});
  CHECK(to_dimacs(g) == "p cnf 2 1\n1 -2 0\n");
  CHECK(to_dimacs(CnfFormula{}) == "p cnf 0 0\n");

  CHECK_FALSE(solve(encode_puzzle(Puzzle(1, 1, {{1}}, {{}})).formula).satisfiable());
}

TEST_CASE("projected models are exactly the solutions") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int m = 1 + static_cast<int>(s % 4), n = 1 + static_cast<int>((s / 4) % 4);
    const auto fill = generate_board(m, n, Density(0.5), Seed{s + 900});
    const Puzzle p = extract_descriptions(fill);
    const auto enc = encode_puzzle(p);
    Solver solver(enc.formula);
    std::set<std::vector<bool>> models;
    for (;;) {
      const auto r = solver.solve();
      if (!r.satisfiable()) break;
      std::vector<bool> cells;
      std::vector<Literal> block;
      for (int v = 1; v <= m * n; ++v) {
        cells.push_back(r.value(v));
        block.push_back(Literal::of(v, !r.value(v)));
      }
      models.insert(cells);
      solver.add_clause(block);
    }
    std::set<std::vector<bool>> expected;
    for (std::uint32_t x = 0; x < (1u << (m * n)); ++x) {
      CompleteFill f(m, n);
      for (int i = 0; i < m * n; ++i) f.set(i / n, i % n, (x >> i) & 1u);
      if (verify_solution(p, f)) expected.insert(oracle::bits_of(x, m * n));
    }
    CHECK(models == expected);
  }
}
