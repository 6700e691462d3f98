#include <doctest.h>

#include <algorithm>

#include "nonolab/board.hpp"
#include "nonolab/puzzle_io.hpp"
#include "nonolab/random.hpp"
#include "oracles.hpp"

using namespace nonolab;

TEST_CASE("extract_line_runs") {
  CHECK(extract_line_runs({false, false, false}).empty());
  CHECK(extract_line_runs({true, true, false, true, false}) == Description{2, 1});
  CHECK(extract_line_runs({}) == Description{});
  CHECK(extract_line_runs({true}) == Description{1});
}

TEST_CASE("description validation") {
  CHECK_THROWS_AS(Description({0}), BoardError);
  CHECK_THROWS_AS(Description({2, -1}), BoardError);
  CHECK(Description{2, 1}.min_length() == 4);
  CHECK(Description{}.min_length() == 0);
  CHECK(Description{3}.fits(3));
  CHECK_FALSE(Description{2, 2}.fits(4));
}

TEST_CASE("figure three board") {
  const CompleteFill fill = oracle::figure_three_fill();
  const Puzzle p = extract_descriptions(fill);
  CHECK(p == oracle::figure_three_puzzle());
  CHECK(p.row(2).empty());
  CHECK(p.col(2) == Description{1, 2});
  CHECK(verify_solution(p, fill));
  CHECK_FALSE(verify_solution(p, CompleteFill(5, 5)));
}

TEST_CASE("verify_solution") {
  const Puzzle one(1, 1, {{1}}, {{1}});
  CHECK(verify_solution(one, CompleteFill(1, 1, true)));
  CHECK_THROWS_AS(verify_solution(one, CompleteFill(2, 1)), BoardError);
}

TEST_CASE("puzzle construction checks") {
  CHECK_THROWS_AS(Puzzle(1, 2, {{3}}, {{}, {}}), BoardError);
  CHECK_THROWS_AS(Puzzle(2, 2, {{1}}, {{1}, {1}}), BoardError);
  // Unbalanced totals are allowed; the puzzle is just inconsistent.
  const Puzzle odd(1, 1, {{1}}, {{}});
  CHECK_FALSE(odd.balanced());
}

TEST_CASE("extreme densities") {
  for (std::uint64_t s : {0ull, 1ull, 99ull, ~0ull}) {
    CHECK(generate_board(4, 6, Density(0.0), Seed{s}).popcount() == 0);
    CHECK(generate_board(4, 6, Density(1.0), Seed{s}).popcount() == 24);
  }
  CHECK_THROWS_AS(Density(-0.1), BoardError);
  CHECK_THROWS_AS(Density(1.5), BoardError);
}

TEST_CASE("generation is deterministic and row-major") {
  const CompleteFill a = generate_board(7, 9, Density(0.4), Seed{12345});
  CHECK(a == generate_board(7, 9, Density(0.4), Seed{12345}));
  CHECK_FALSE(a == generate_board(7, 9, Density(0.4), Seed{12346}));
  SplitMix64 rng(12345);
  for (int c = 0; c < 9; ++c) CHECK(a.filled(0, c) == (rng.unit() <= 0.4));
}

TEST_CASE("mean filled count at half density") {
  double total = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) total += generate_board(15, 15, Density(0.5), Seed{s}).popcount();
  const double mean = total / 1000.0;
  CHECK(mean >= 105.0);
  CHECK(mean <= 120.0);
}

TEST_CASE("round trip and conservation over random boards") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const int m = 1 + static_cast<int>(s % 7);
    const int n = 1 + static_cast<int>((s / 7) % 6);
    const double rho = static_cast<double>(s % 11) / 10.0;
    const CompleteFill f = generate_board(m, n, Density(rho), Seed{s});
    const Puzzle p = extract_descriptions(f);
    CHECK(verify_solution(p, f));
    int rows = 0, cols = 0;
    for (const auto& d : p.row_descriptions()) rows += d.filled();
    for (const auto& d : p.col_descriptions()) cols += d.filled();
    CHECK(rows == f.popcount());
    CHECK(cols == f.popcount());
    for (int r = 0; r < m; ++r) {
      const auto line = f.row(r);
      const bool any = std::find(line.begin(), line.end(), true) != line.end();
      CHECK(p.row(r).empty() == !any);
      CHECK(p.row(r).min_length() <= n);
    }
  }
}

TEST_CASE("partial fills") {
  const CompleteFill f = oracle::figure_three_fill();
  CHECK(to_complete(to_partial(f)) == f);
  CHECK_THROWS_AS(to_complete(blank_partial(2, 2)), BoardError);
}

TEST_CASE("puzzle text and json round trip") {
  const Puzzle p = oracle::figure_three_puzzle();
  const std::string text = format_puzzle_text(p);
  CHECK(parse_puzzle_text(text) == p);
  CHECK(puzzle_from_json(puzzle_to_json(p)) == p);
  const CompleteFill f = oracle::figure_three_fill();
  CHECK(parse_fill_text(format_fill_text(f)) == f);
  CHECK_THROWS_AS(parse_puzzle_text("2 2\n1\n"), FormatError);
  CHECK_THROWS_AS(parse_puzzle_text("1 2\n3\n\n\n"), std::exception);
  const PartialFill partial = parse_partial_text("#?\n.#\n");
  CHECK(partial(0, 1) == CellState::Indeterminate);
  CHECK(format_partial_text(partial) == "#?\n.#\n");
}
