// Independent reference implementations used by the tests.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "nonolab/board.hpp"
#include "nonolab/cnf.hpp"

namespace oracle {

using nonolab::CnfFormula;
using nonolab::Literal;

// Exhaustive truth table over at most 24 variables. Returns a model indexed by
// variable id (entry 0 unused), or nothing when unsatisfiable.
inline std::optional<std::vector<bool>> truth_table(const CnfFormula& f,
                                                    const std::vector<Literal>& assumptions = {}) {
  const int v = f.variable_count();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  auto add = [&](std::span<const Literal> clause) {
    std::uint32_t pos = 0, neg = 0;
    for (Literal l : clause) (l.is_negative() ? neg : pos) |= 1u << (l.var() - 1);
    masks.emplace_back(pos, neg);
  };
  for (std::size_t i = 0; i < f.clause_count(); ++i) add(f.clause(i));
  for (Literal l : assumptions) add(std::span<const Literal>(&l, 1));
  const std::uint32_t all = v == 32 ? ~0u : (1u << v) - 1;
  for (std::uint64_t a = 0; a <= all; ++a) {
    const auto x = static_cast<std::uint32_t>(a);
    bool ok = true;
    for (auto [pos, neg] : masks) {
      if (((x & pos) | (~x & neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> model(static_cast<std::size_t>(v) + 1, false);
      for (int i = 0; i < v; ++i) model[static_cast<std::size_t>(i) + 1] = (x >> i) & 1u;
      return model;
    }
  }
  return std::nullopt;
}

// Plain recursive DPLL with unit propagation, for formulas too wide for a truth table.
class Dpll {
 public:
  explicit Dpll(const CnfFormula& f) : n_(f.variable_count()) {
    for (std::size_t i = 0; i < f.clause_count(); ++i) {
      auto c = f.clause(i);
      clauses_.emplace_back(c.begin(), c.end());
    }
  }

  bool satisfiable(const std::vector<Literal>& assumptions) {
    std::vector<int> val(static_cast<std::size_t>(n_) + 1, 0);
    for (Literal l : assumptions) {
      int& x = val[static_cast<std::size_t>(l.var())];
      const int want = l.is_negative() ? -1 : 1;
      if (x == -want) return false;
      x = want;
    }
    return search(val);
  }

 private:
  int value(const std::vector<int>& val, Literal l) const {
    const int x = val[static_cast<std::size_t>(l.var())];
    return l.is_negative() ? -x : x;
  }

  bool search(std::vector<int> val) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0;
        Literal last;
        bool sat = false;
        for (Literal l : c) {
          const int x = value(val, l);
          if (x > 0) {
            sat = true;
            break;
          }
          if (x == 0) {
            ++unassigned;
            last = l;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          val[static_cast<std::size_t>(last.var())] = last.is_negative() ? -1 : 1;
          changed = true;
        }
      }
    }
    for (int v = 1; v <= n_; ++v) {
      if (val[static_cast<std::size_t>(v)] != 0) continue;
      for (int s : {-1, 1}) {
        auto next = val;
        next[static_cast<std::size_t>(v)] = s;
        if (search(next)) return true;
      }
      return false;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<Literal>> clauses_;
};

inline std::vector<bool> bits_of(std::uint32_t x, int n) {
  std::vector<bool> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (x >> i) & 1u;
  return out;
}

// Random k-CNF over `vars` variables.
inline CnfFormula random_cnf(std::mt19937_64& rng, int vars, int clauses, int max_width) {
  CnfFormula f(vars);
  std::uniform_int_distribution<int> var(1, vars);
  std::uniform_int_distribution<int> width(1, max_width);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < clauses; ++i) {
    std::vector<Literal> c;
    const int w = width(rng);
    for (int j = 0; j < w; ++j) c.push_back(Literal::of(var(rng), sign(rng)));
    f.add_clause(c);
  }
  return f;
}

// Pigeonhole: `pigeons` into `holes`, variable p*holes + h + 1.
inline CnfFormula pigeonhole(int pigeons, int holes) {
  CnfFormula f(pigeons * holes);
  auto x = [&](int p, int h) { return p * holes + h + 1; };
  for (int p = 0; p < pigeons; ++p) {
    std::vector<Literal> c;
    for (int h = 0; h < holes; ++h) c.push_back(Literal::positive(x(p, h)));
    f.add_clause(c);
  }
  for (int h = 0; h < holes; ++h)
    for (int p = 0; p < pigeons; ++p)
      for (int q = p + 1; q < pigeons; ++q)
        f.add_clause({Literal::negative(x(p, h)), Literal::negative(x(q, h))});
  return f;
}

inline nonolab::CompleteFill fill_from_rows(const std::vector<std::string>& rows) {
  nonolab::CompleteFill f(static_cast<int>(rows.size()),
                          rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c)
      f.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '#');
  return f;
}

inline nonolab::CompleteFill figure_three_fill() {
  return fill_from_rows({"..#..", ".#.#.", ".....", ".##..", "#.#.."});
}

inline nonolab::Puzzle figure_three_puzzle() {
  return nonolab::Puzzle(5, 5, {{1}, {1, 1}, {}, {2}, {1, 1}}, {{1}, {1, 1}, {1, 2}, {1}, {}});
}

inline nonolab::Puzzle permutation_puzzle() {
  return nonolab::Puzzle(2, 2, {{1}, {1}}, {{1}, {1}});
}

}  // namespace oracle
