#include <doctest.h>

#include <random>

#include "nonolab/solver.hpp"
#include "oracles.hpp"

using namespace nonolab;

TEST_CASE("trivial formulas") {
  CnfFormula empty(3);
  CHECK(solve(empty).satisfiable());
  CnfFormula unit(1);
  unit.add_clause({Literal::positive(1)});
  const auto r = solve(unit);
  REQUIRE(r.satisfiable());
  CHECK(r.value(1));
  unit.add_clause({Literal::negative(1)});
  CHECK(solve(unit).status == SolveStatus::Unsatisfiable);
  CHECK_THROWS_AS(unit.add_clause(std::span<const Literal>{}), CnfError);
}

TEST_CASE("pigeonhole") {
  CHECK(solve(oracle::pigeonhole(4, 3)).status == SolveStatus::Unsatisfiable);
  CHECK(solve(oracle::pigeonhole(5, 4)).status == SolveStatus::Unsatisfiable);
  const auto sat = solve(oracle::pigeonhole(3, 3));
  REQUIRE(sat.satisfiable());
  CHECK(satisfies(oracle::pigeonhole(3, 3), sat.model));
}

TEST_CASE("random formulas agree with the truth table") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int vars = 1 + static_cast<int>(rng() % 14);
    const int clauses = 1 + static_cast<int>(rng() % (5 * vars));
    const CnfFormula f = oracle::random_cnf(rng, vars, clauses, 3);
    const auto expect = oracle::truth_table(f);
    const auto got = solve(f);
    CHECK(got.satisfiable() == expect.has_value());
    if (got.satisfiable()) CHECK(satisfies(f, got.model));
  }
}

TEST_CASE("assumptions do not persist") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int vars = 3 + static_cast<int>(rng() % 10);
    const CnfFormula f = oracle::random_cnf(rng, vars, 3 * vars, 3);
    Solver s(f);
    for (int q = 0; q < 6; ++q) {
      std::vector<Literal> a;
      for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k)
        a.push_back(Literal::of(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(vars)), rng() % 2 == 0));
      const auto got = s.solve(a);
      CHECK(got.satisfiable() == oracle::truth_table(f, a).has_value());
      if (got.satisfiable()) {
        CHECK(satisfies(f, got.model));
        for (Literal l : a) CHECK(got.value(l));
      }
    }
    CHECK(s.solve().satisfiable() == oracle::truth_table(f).has_value());
  }
}

TEST_CASE("contradictory assumptions") {
  CnfFormula f(2);
  f.add_clause({Literal::positive(1), Literal::positive(2)});
  Solver s(f);
  CHECK(s.solve({Literal::positive(1), Literal::negative(1)}).status == SolveStatus::Unsatisfiable);
  CHECK(s.solve().satisfiable());
  CHECK_THROWS_AS(s.solve({Literal::positive(7)}), CnfError);
}

TEST_CASE("incremental clause addition") {
  Solver s;
  s.reserve_variables(2);
  s.add_clause(std::vector<Literal>{Literal::positive(1), Literal::positive(2)});
  CHECK(s.solve().satisfiable());
  CnfFormula more(2);
  more.add_clause({Literal::negative(1)});
  const std::vector<Literal> a{Literal::negative(2)};
  CHECK(s.solve_incremental(more, a).status == SolveStatus::Unsatisfiable);
  const auto r = s.solve();
  REQUIRE(r.satisfiable());
  CHECK(r.value(2));
}

TEST_CASE("stats are reproducible") {
  std::mt19937_64 rng(5);
  const CnfFormula f = oracle::random_cnf(rng, 60, 255, 3);
  const auto a = solve(f);
  const auto b = solve(f);
  CHECK(a.status == b.status);
  CHECK(a.stats.same_counts(b.stats));
  CHECK(a.model == b.model);
}

TEST_CASE("conflict budget") {
  SolverConfig cfg;
  cfg.conflict_budget = 0;
  const auto r = solve(oracle::pigeonhole(7, 6), {}, cfg);
  CHECK(r.status == SolveStatus::BudgetExhausted);
  cfg.conflict_budget = -1;
  CHECK(solve(oracle::pigeonhole(7, 6), {}, cfg).status == SolveStatus::Unsatisfiable);
}

TEST_CASE("propagations exclude decisions and inputs") {
  CnfFormula f(3);
  f.add_clause({Literal::positive(1)});
  const auto r = solve(f);
  CHECK(r.stats.propagations == 0);
  CnfFormula g(2);
  g.add_clause({Literal::negative(1), Literal::positive(2)});
  // Assumption x1 forces x2 through one clause.
  const auto q = solve(g, std::vector<Literal>{Literal::positive(1)});
  CHECK(q.stats.propagations == 1);
  CHECK(q.stats.decisions == 0);
}
