#include "nonolab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace nonolab {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Satisfiable: return "SATISFIABLE";
    case SolveStatus::Unsatisfiable: return "UNSATISFIABLE";
    case SolveStatus::BudgetExhausted: return "UNKNOWN";
  }
  return "UNKNOWN";
}

SolveStats& SolveStats::operator+=(const SolveStats& other) {
  propagations += other.propagations;
  decisions += other.decisions;
  conflicts += other.conflicts;
  restarts += other.restarts;
  wall_time += other.wall_time;
  return *this;
}

bool SolveStats::same_counts(const SolveStats& other) const {
  return propagations == other.propagations && decisions == other.decisions &&
         conflicts == other.conflicts && restarts == other.restarts;
}

namespace {

// Internal literal: 2 * (var - 1) + sign, sign 1 for negative.
using Lit = std::uint32_t;
using ClauseRef = std::uint32_t;
constexpr ClauseRef kNoReason = UINT32_MAX;

constexpr Lit to_lit(Literal l) {
  return static_cast<Lit>(2 * (l.var() - 1) + (l.is_negative() ? 1 : 0));
}
constexpr Lit neg(Lit l) { return l ^ 1u; }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }
constexpr bool sign_of(Lit l) { return (l & 1u) != 0; }
constexpr Lit make_lit(std::uint32_t v, bool negative) { return 2 * v + (negative ? 1 : 0); }

enum Value : std::uint8_t { kFalse = 0, kTrue = 1, kUndef = 2 };

struct Clause {
  std::vector<Lit> lits;
  double activity = 0.0;
  bool learnt = false;
  bool deleted = false;
};

struct Watcher {
  ClauseRef cref;
  Lit blocker;
};

}  // namespace

class Solver::Impl {
 public:
  explicit Impl(SolverConfig config) : config_(config) {}

  void reserve_variables(int count) {
    while (static_cast<int>(assigns_.size()) < count) new_var();
  }

  void add_clause(std::span<const Literal> input) {
    if (input.empty()) throw CnfError("empty clause");
    int max_var = 0;
    for (Literal l : input) max_var = std::max(max_var, l.var());
    reserve_variables(max_var);
    if (!ok_) return;

    std::vector<Lit> lits;
    lits.reserve(input.size());
    for (Literal l : input) lits.push_back(to_lit(l));
    std::sort(lits.begin(), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      const Lit l = lits[i];
      if (i > 0 && lits[i - 1] == l) continue;
      if (i + 1 < lits.size() && lits[i + 1] == neg(l)) return;  // tautology
      const Value v = value(l);
      if (v == kTrue) return;
      if (v == kFalse) continue;
      kept.push_back(l);
    }
    if (kept.empty()) {
      ok_ = false;
    } else if (kept.size() == 1) {
      assign(kept[0], kNoReason);
    } else {
      // Keep the caller's literal order among the survivors for stable watches.
      std::vector<Lit> ordered;
      ordered.reserve(kept.size());
      for (Literal l : input) {
        const Lit x = to_lit(l);
        if (std::binary_search(kept.begin(), kept.end(), x) &&
            std::find(ordered.begin(), ordered.end(), x) == ordered.end()) {
          ordered.push_back(x);
        }
      }
      attach(new_clause(std::move(ordered), false));
    }
  }

  SolveResult solve(std::span<const Literal> assumptions) {
    const auto started = std::chrono::steady_clock::now();
    const SolveStats before = session_;
    SolveResult result;

    assumptions_.clear();
    for (Literal l : assumptions) {
      if (l.var() > static_cast<int>(assigns_.size())) {
        throw CnfError("assumption on variable " + std::to_string(l.var()) +
                       " beyond the formula's " + std::to_string(assigns_.size()) + " variables");
      }
      assumptions_.push_back(to_lit(l));
    }

    result.status = search_all();
    if (result.status == SolveStatus::Satisfiable) {
      result.model.assign(assigns_.size() + 1, false);
      for (std::size_t v = 0; v < assigns_.size(); ++v) result.model[v + 1] = assigns_[v] == kTrue;
    }
    cancel_until(0);

    result.stats.propagations = session_.propagations - before.propagations;
    result.stats.decisions = session_.decisions - before.decisions;
    result.stats.conflicts = session_.conflicts - before.conflicts;
    result.stats.restarts = session_.restarts - before.restarts;
    result.stats.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - started);
    session_.wall_time += result.stats.wall_time;
    return result;
  }

  int variable_count() const { return static_cast<int>(assigns_.size()); }
  const SolveStats& session_stats() const { return session_; }
  std::size_t learnt_count() const { return learnts_.size(); }

 private:
  // ---- variables and assignment ----
  void new_var() {
    const auto v = static_cast<std::uint32_t>(assigns_.size());
    assigns_.push_back(kUndef);
    level_.push_back(0);
    reason_.push_back(kNoReason);
    polarity_.push_back(true);  // saved "negative" flag: initial polarity false
    activity_.push_back(0.0);
    seen_.push_back(0);
    heap_index_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
  }

  Value value(Lit l) const {
    const Value v = static_cast<Value>(assigns_[var_of(l)]);
    if (v == kUndef) return kUndef;
    return static_cast<Value>(v ^ static_cast<std::uint8_t>(sign_of(l)));
  }

  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void assign(Lit l, ClauseRef reason) {
    const auto v = var_of(l);
    assigns_[v] = sign_of(l) ? kFalse : kTrue;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Assignment with a reason clause; counted as a propagation.
  void imply(Lit l, ClauseRef reason) {
    assign(l, reason);
    ++session_.propagations;
  }

  void cancel_until(int level) {
    if (decision_level() <= level) return;
    const std::size_t keep = trail_lim_[static_cast<std::size_t>(level)];
    for (std::size_t i = trail_.size(); i-- > keep;) {
      const auto v = var_of(trail_[i]);
      assigns_[v] = kUndef;
      reason_[v] = kNoReason;
      polarity_[v] = sign_of(trail_[i]);
      if (heap_index_[v] < 0) heap_insert(v);
    }
    trail_.resize(keep);
    trail_lim_.resize(static_cast<std::size_t>(level));
    qhead_ = std::min(qhead_, trail_.size());
  }

  // ---- clauses ----
  ClauseRef new_clause(std::vector<Lit> lits, bool learnt) {
    const auto cref = static_cast<ClauseRef>(clauses_.size());
    clauses_.push_back(Clause{std::move(lits), 0.0, learnt, false});
    if (learnt) learnts_.push_back(cref);
    return cref;
  }

  void attach(ClauseRef cref) {
    const auto& c = clauses_[cref].lits;
    watches_[c[0]].push_back({cref, c[1]});
    watches_[c[1]].push_back({cref, c[0]});
  }

  bool locked(ClauseRef cref) const {
    const Lit first = clauses_[cref].lits[0];
    return value(first) == kTrue && reason_[var_of(first)] == cref;
  }

  // Returns the conflicting clause or kNoReason. Watches of a literal are
  // visited when it becomes false.
  ClauseRef propagate() {
    ClauseRef conflict = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit false_lit = neg(trail_[qhead_++]);
      auto& ws = watches_[false_lit];
      std::size_t i = 0;
      std::size_t j = 0;
      const std::size_t end = ws.size();
      while (i < end) {
        const Watcher w = ws[i++];
        if (value(w.blocker) == kTrue) {
          ws[j++] = w;
          continue;
        }
        Clause& c = clauses_[w.cref];
        if (c.deleted) continue;
        auto& lits = c.lits;
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        const Lit first = lits[0];
        const Watcher keep{w.cref, first};
        if (first != w.blocker && value(first) == kTrue) {
          ws[j++] = keep;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) != kFalse) {
            std::swap(lits[1], lits[k]);
            watches_[lits[1]].push_back(keep);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = keep;
        if (value(first) == kFalse) {
          conflict = w.cref;
          qhead_ = trail_.size();
          while (i < end) ws[j++] = ws[i++];
        } else {
          imply(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  // ---- conflict analysis ----
  void analyze(ClauseRef conflict, std::vector<Lit>& learnt, int& backtrack_level) {
    learnt.clear();
    learnt.push_back(0);  // slot for the asserting literal
    int pending = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t index = trail_.size();
    ClauseRef reason = conflict;
    do {
      Clause& c = clauses_[reason];
      if (c.learnt) bump_clause(reason);
      for (std::size_t k = have_p ? 1 : 0; k < c.lits.size(); ++k) {
        const Lit q = c.lits[k];
        const auto v = var_of(q);
        if (!seen_[v] && level_[v] > 0) {
          bump_var(v);
          seen_[v] = 1;
          if (level_[v] >= decision_level()) {
            ++pending;
          } else {
            learnt.push_back(q);
          }
        }
      }
      while (!seen_[var_of(trail_[--index])]) {
      }
      p = trail_[index];
      have_p = true;
      reason = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --pending;
    } while (pending > 0);
    learnt[0] = neg(p);

    // Drop literals implied by other literals of the clause.
    analyze_toclear_.assign(learnt.begin(), learnt.end());
    std::size_t j = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      const ClauseRef r = reason_[var_of(learnt[i])];
      bool redundant = r != kNoReason;
      if (redundant) {
        const auto& rl = clauses_[r].lits;
        for (std::size_t k = 1; k < rl.size(); ++k) {
          const auto v = var_of(rl[k]);
          if (!seen_[v] && level_[v] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) learnt[j++] = learnt[i];
    }
    learnt.resize(j);

    backtrack_level = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < learnt.size(); ++i) {
        if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
      }
      std::swap(learnt[1], learnt[max_i]);
      backtrack_level = level_[var_of(learnt[1])];
    }
    for (Lit l : analyze_toclear_) seen_[var_of(l)] = 0;
  }

  // ---- activities ----
  void bump_var(std::uint32_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0) heap_up(static_cast<std::size_t>(heap_index_[v]));
  }

  void bump_clause(ClauseRef cref) {
    clauses_[cref].activity += clause_inc_;
    if (clauses_[cref].activity > 1e20) {
      for (ClauseRef l : learnts_) clauses_[l].activity *= 1e-20;
      clause_inc_ *= 1e-20;
    }
  }

  void decay() {
    var_inc_ /= config_.variable_decay;
    clause_inc_ /= config_.clause_decay;
  }

  // ---- decision heap: highest activity first, lowest variable on ties ----
  bool heap_before(std::uint32_t a, std::uint32_t b) const {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
  }

  void heap_insert(std::uint32_t v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
  }

  void heap_up(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!heap_before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = static_cast<int>(i);
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<int>(i);
  }

  void heap_down(std::size_t i) {
    const std::uint32_t v = heap_[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && heap_before(heap_[child + 1], heap_[child])) ++child;
      if (!heap_before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      heap_index_[heap_[i]] = static_cast<int>(i);
      i = child;
    }
    heap_[i] = v;
    heap_index_[v] = static_cast<int>(i);
  }

  std::uint32_t heap_pop() {
    const std::uint32_t top = heap_[0];
    heap_index_[top] = -1;
    const std::uint32_t last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_index_[last] = 0;
      heap_down(0);
    }
    return top;
  }

  // Returns false when every variable is assigned.
  bool pick_branch(Lit& out) {
    while (!heap_.empty()) {
      const std::uint32_t v = heap_pop();
      if (assigns_[v] == kUndef) {
        out = make_lit(v, polarity_[v]);
        return true;
      }
    }
    return false;
  }

  // ---- learnt clause database ----
  void reduce_db() {
    std::vector<ClauseRef> order(learnts_);
    std::stable_sort(order.begin(), order.end(), [&](ClauseRef a, ClauseRef b) {
      const auto& ca = clauses_[a];
      const auto& cb = clauses_[b];
      const bool a_bin = ca.lits.size() == 2;
      const bool b_bin = cb.lits.size() == 2;
      if (a_bin != b_bin) return b_bin;
      return ca.activity < cb.activity;
    });
    const double limit = clause_inc_ / static_cast<double>(std::max<std::size_t>(order.size(), 1));
    std::vector<bool> remove(clauses_.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const ClauseRef cref = order[i];
      const auto& c = clauses_[cref];
      if (c.lits.size() > 2 && !locked(cref) && (i < order.size() / 2 || c.activity < limit)) {
        remove[cref] = true;
      }
    }
    std::vector<ClauseRef> kept;
    for (ClauseRef cref : learnts_) {
      if (remove[cref]) {
        clauses_[cref].deleted = true;
        clauses_[cref].lits.clear();
        clauses_[cref].lits.shrink_to_fit();
      } else {
        kept.push_back(cref);
      }
    }
    learnts_.swap(kept);
    // Watchers of deleted clauses are dropped lazily during propagation; purge
    // here as well so that long sessions do not accumulate dead entries.
    for (auto& ws : watches_) {
      ws.erase(std::remove_if(ws.begin(), ws.end(),
                              [&](const Watcher& w) { return clauses_[w.cref].deleted; }),
               ws.end());
    }
  }

  // ---- search ----
  enum class SearchResult { Satisfiable, Unsatisfiable, Restart, OutOfBudget };

  bool budget_spent(std::int64_t conflicts_at_start) const {
    return config_.conflict_budget >= 0 &&
           session_.conflicts - conflicts_at_start >= config_.conflict_budget;
  }

  SearchResult search(std::int64_t conflict_limit, std::int64_t conflicts_at_start) {
    std::int64_t conflicts_here = 0;
    std::vector<Lit> learnt;
    for (;;) {
      const ClauseRef conflict = propagate();
      if (conflict != kNoReason) {
        ++session_.conflicts;
        ++conflicts_here;
        if (decision_level() == 0) {
          ok_ = false;
          return SearchResult::Unsatisfiable;
        }
        int backtrack_level = 0;
        analyze(conflict, learnt, backtrack_level);
        cancel_until(backtrack_level);
        if (learnt.size() == 1) {
          imply(learnt[0], kNoReason);
        } else {
          const ClauseRef cref = new_clause(learnt, true);
          attach(cref);
          bump_clause(cref);
          imply(learnt[0], cref);
        }
        decay();
        continue;
      }

      if (budget_spent(conflicts_at_start)) return SearchResult::OutOfBudget;
      if (conflicts_here >= conflict_limit) return SearchResult::Restart;
      if (static_cast<double>(learnts_.size()) - static_cast<double>(trail_.size()) >=
          max_learnts_) {
        reduce_db();
      }

      Lit next = 0;
      bool have_next = false;
      while (decision_level() < static_cast<int>(assumptions_.size())) {
        const Lit a = assumptions_[static_cast<std::size_t>(decision_level())];
        const Value v = value(a);
        if (v == kTrue) {
          trail_lim_.push_back(trail_.size());
        } else if (v == kFalse) {
          return SearchResult::Unsatisfiable;
        } else {
          next = a;
          have_next = true;
          break;
        }
      }
      if (!have_next) {
        if (!pick_branch(next)) return SearchResult::Satisfiable;
        ++session_.decisions;
      }
      trail_lim_.push_back(trail_.size());
      assign(next, kNoReason);
    }
  }

  SolveStatus search_all() {
    if (!ok_) return SolveStatus::Unsatisfiable;
    const std::int64_t conflicts_at_start = session_.conflicts;
    max_learnts_ =
        std::max(static_cast<double>(clauses_.size() - learnts_.size()) / 3.0, 5000.0);
    double restart_limit = config_.restart_first;
    for (;;) {
      switch (search(static_cast<std::int64_t>(restart_limit), conflicts_at_start)) {
        case SearchResult::Satisfiable: return SolveStatus::Satisfiable;
        case SearchResult::Unsatisfiable: return SolveStatus::Unsatisfiable;
        case SearchResult::OutOfBudget: return SolveStatus::BudgetExhausted;
        case SearchResult::Restart:
          cancel_until(0);
          ++session_.restarts;
          restart_limit *= config_.restart_factor;
          max_learnts_ *= 1.1;
          break;
      }
    }
  }

  SolverConfig config_;
  bool ok_ = true;

  std::vector<Clause> clauses_;
  std::vector<ClauseRef> learnts_;
  std::vector<std::vector<Watcher>> watches_;

  std::vector<std::uint8_t> assigns_;
  std::vector<int> level_;
  std::vector<ClauseRef> reason_;
  std::vector<bool> polarity_;
  std::vector<double> activity_;
  std::vector<std::uint8_t> seen_;
  std::vector<Lit> analyze_toclear_;

  std::vector<std::uint32_t> heap_;
  std::vector<int> heap_index_;

  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<Lit> assumptions_;

  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  double max_learnts_ = 0.0;

  SolveStats session_;
};

Solver::Solver(SolverConfig config) : impl_(std::make_unique<Impl>(config)) {}

Solver::Solver(const CnfFormula& base, SolverConfig config) : Solver(config) { add_formula(base); }

Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

void Solver::add_formula(const CnfFormula& formula) {
  impl_->reserve_variables(formula.variable_count());
  for (std::size_t i = 0; i < formula.clause_count(); ++i) impl_->add_clause(formula.clause(i));
}

void Solver::add_clause(std::span<const Literal> clause) { impl_->add_clause(clause); }

void Solver::reserve_variables(int count) { impl_->reserve_variables(count); }

SolveResult Solver::solve(std::span<const Literal> assumptions) { return impl_->solve(assumptions); }

SolveResult Solver::solve_incremental(const CnfFormula& added, std::span<const Literal> assumptions) {
  add_formula(added);
  return solve(assumptions);
}

int Solver::variable_count() const { return impl_->variable_count(); }
const SolveStats& Solver::session_stats() const { return impl_->session_stats(); }
std::size_t Solver::learnt_count() const { return impl_->learnt_count(); }

SolveResult solve(const CnfFormula& formula, std::span<const Literal> assumptions,
                  SolverConfig config) {
  Solver solver(formula, config);
  return solver.solve(assumptions);
}

bool satisfies(const CnfFormula& formula, const std::vector<bool>& model) {
  for (std::size_t i = 0; i < formula.clause_count(); ++i) {
    bool sat = false;
    for (Literal l : formula.clause(i)) {
      const auto v = static_cast<std::size_t>(l.var());
      if (v < model.size() && model[v] != l.is_negative()) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace nonolab
