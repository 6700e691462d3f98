#include <doctest.h>

#include <random>

#include "nonolab/inference.hpp"
#include "oracles.hpp"

using namespace nonolab;

namespace {

const Puzzle kRow3(1, 3, {{3}}, {{1}, {1}, {1}});
const Puzzle kRow1(1, 2, {{1}}, {{}, {}});

Puzzle two_cell_row() {
  return Puzzle(1, 2, {{1}}, {{1}, {}});
}

}  // namespace

TEST_CASE("1x3 row [3]: every cell inferable filled") {
  const auto enc = encode_puzzle(kRow3);
  const auto blank = blank_partial(1, 3);
  for (int c = 0; c < 3; ++c) {
    CHECK(is_inferable(enc.formula, enc.vars, {0, c}, Polarity::Filled, blank));
    CHECK_FALSE(is_inferable(enc.formula, enc.vars, {0, c}, Polarity::Empty, blank));
  }
  const auto bf = brute_force_inference(kRow3, blank);
  CHECK(bf.solution_count == 1);
  for (int c = 0; c < 3; ++c) CHECK(bf.verdicts(0, c) == CellVerdict::FilledInAll);
}

TEST_CASE("column descriptions pin the 1x2 puzzle") {
  // Column clues on a one-row board fix every cell.
  const auto bf = brute_force_inference(two_cell_row(), blank_partial(1, 2));
  CHECK(bf.solution_count == 1);
  CHECK_THROWS_AS(brute_force_inference(kRow1, blank_partial(1, 2)), InconsistentPuzzle);
}

TEST_CASE("2x2 permutation puzzle: nothing inferable") {
  const Puzzle p = oracle::permutation_puzzle();
  const auto sols = brute_force_solutions(p, blank_partial(2, 2));
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == oracle::fill_from_rows({".#", "#."}));
  CHECK(sols[1] == oracle::fill_from_rows({"#.", ".#"}));
  const auto enc = encode_puzzle(p);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (Polarity pol : {Polarity::Filled, Polarity::Empty})
        CHECK_FALSE(is_inferable(enc.formula, enc.vars, {r, c}, pol, blank_partial(2, 2)));
  CHECK_FALSE(decide_inference(p, blank_partial(2, 2)));
  PartialFill fixed = blank_partial(2, 2);
  fixed(0, 0) = CellState::Filled;
  CHECK(decide_inference(p, fixed));
}

TEST_CASE("is_inferable preconditions") {
  const Puzzle p = oracle::permutation_puzzle();
  const auto enc = encode_puzzle(p);
  PartialFill fixed = blank_partial(2, 2);
  fixed(0, 0) = CellState::Filled;
  CHECK_THROWS_AS(is_inferable(enc.formula, enc.vars, {0, 0}, Polarity::Filled, fixed), std::invalid_argument);
  CHECK(is_inferable(enc.formula, enc.vars, {0, 1}, Polarity::Empty, fixed));
  fixed(0, 1) = CellState::Filled;
  CHECK_THROWS_AS(is_inferable(enc.formula, enc.vars, {1, 0}, Polarity::Empty, fixed), InconsistentPuzzle);
  const Puzzle odd(1, 1, {{1}}, {{}});
  CHECK_THROWS_AS(decide_inference(odd, blank_partial(1, 1)), InconsistentPuzzle);
}

TEST_CASE("assigned cells can only be tested on request") {
  PartialFill fixed = blank_partial(1, 2);
  fixed(0, 0) = CellState::Filled;
  fixed(0, 1) = CellState::Empty;
  const Puzzle p = two_cell_row();
  CHECK_FALSE(decide_inference(p, fixed));
  CHECK_FALSE(decide_inference(p, fixed, DecideOptions{true}));
}

TEST_CASE("count_inferred_filled on degenerate boards") {
  const auto full = CompleteFill(3, 3, true);
  const auto r = count_inferred_filled(extract_descriptions(full), full);
  CHECK(r.inferred_filled == 9);
  CHECK(r.proportion_inferred == 1.0);
  CHECK(r.queries_run == 9);
  const auto empty = CompleteFill(3, 3, false);
  const auto e = count_inferred_filled(extract_descriptions(empty), empty);
  CHECK(e.inferred_filled == 0);
  CHECK(e.filled_cells == 0);
  CHECK(e.proportion_inferred == 1.0);
  CHECK_THROWS_AS(count_inferred_filled(extract_descriptions(full), empty), InconsistentPuzzle);
}

TEST_CASE("figure three count matches enumeration") {
  const Puzzle p = oracle::figure_three_puzzle();
  const auto fill = oracle::figure_three_fill();
  const auto bf = brute_force_inference(p, blank_partial(5, 5));
  int expected = 0;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (bf.verdicts(r, c) == CellVerdict::FilledInAll) ++expected;
  const auto report = count_inferred_filled(p, fill);
  CHECK(report.inferred_filled == expected);
  CHECK(report.filled_cells == 7);
  CHECK(infer_all(p, blank_partial(5, 5)) == bf.verdicts);
}

TEST_CASE("SAT inference agrees with enumeration on small random boards") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    for (double rho : {0.2, 0.5, 0.8}) {
      const int m = 1 + static_cast<int>(s % 4);
      const int n = 1 + static_cast<int>((s / 4) % 4);
      const auto fill = generate_board(m, n, Density(rho), Seed{s});
      const Puzzle p = extract_descriptions(fill);
      const auto bf = brute_force_inference(p, blank_partial(m, n));
      CHECK(infer_all(p, blank_partial(m, n)) == bf.verdicts);
      const auto report = count_inferred_filled(p, fill);
      int filled_in_all = 0;
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
          if (bf.verdicts(r, c) != CellVerdict::FilledInAll) continue;
          ++filled_in_all;
          CHECK(fill.filled(r, c));
        }
      }
      CHECK(report.inferred_filled == filled_in_all);
      if (bf.solution_count == 1) CHECK(report.proportion_inferred == 1.0);
    }
  }
}

TEST_CASE("fixing cells from a solution never shrinks the inferable set") {
  std::mt19937_64 rng(17);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto fill = generate_board(4, 4, Density(0.45), Seed{s + 500});
    const Puzzle p = extract_descriptions(fill);
    PartialFill fixed = blank_partial(4, 4);
    const auto before = brute_force_inference(p, fixed).verdicts;
    const auto sat_before = infer_all(p, fixed);
    for (int k = 0; k < 3; ++k) {
      const int r = static_cast<int>(rng() % 4), c = static_cast<int>(rng() % 4);
      fixed(r, c) = fill.filled(r, c) ? CellState::Filled : CellState::Empty;
    }
    const auto after = infer_all(p, fixed);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (sat_before(r, c) != CellVerdict::Varies) CHECK(after(r, c) == sat_before(r, c));
    CHECK(sat_before == before);
  }
}

TEST_CASE("brute force refuses large boards") {
  const auto fill = CompleteFill(6, 5, true);
  CHECK_THROWS_AS(brute_force_inference(extract_descriptions(fill), blank_partial(6, 5)), std::invalid_argument);
}
