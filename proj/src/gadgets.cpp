#include "nonolab/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nonolab/encoder.hpp"
#include "nonolab/inference.hpp"
#include "nonolab/puzzle_io.hpp"
#include "nonolab/solver.hpp"

namespace nonolab {

namespace {

struct KindName {
  GadgetKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {GadgetKind::Not, "NOT"},        {GadgetKind::And, "AND"},
    {GadgetKind::Or, "OR"},          {GadgetKind::Wire, "WIRE"},
    {GadgetKind::Crossover, "CROSSOVER"}, {GadgetKind::Splitter, "SPLITTER"},
    {GadgetKind::Input, "INPUT"},    {GadgetKind::Output, "OUTPUT"},
};

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string::npos || line[first] == '#';
}

void validate_ports(const GadgetSpec& g) {
  std::set<std::string> labels;
  std::set<std::pair<int, int>> cells;
  for (const Port& p : g.ports) {
    if (p.cell.row < 0 || p.cell.row >= g.puzzle.rows() || p.cell.col < 0 ||
        p.cell.col >= g.puzzle.cols()) {
      throw GadgetError("gadget " + g.name + ": port " + p.label + " lies off the board");
    }
    if (!labels.insert(p.label).second) throw GadgetError("gadget " + g.name + ": duplicate port " + p.label);
    if (!cells.insert({p.cell.row, p.cell.col}).second) {
      throw GadgetError("gadget " + g.name + ": port " + p.label + " shares a cell with another port");
    }
  }
  for (const Port& p : g.ports) {
    const std::string partner = p.negative() ? p.signal() : "~" + p.label;
    const Port* q = g.find_port(partner);
    if (!q) throw GadgetError("gadget " + g.name + ": port " + p.label + " has no partner " + partner);
    if (q->direction != p.direction) {
      throw GadgetError("gadget " + g.name + ": ports " + p.label + " and " + partner + " differ in direction");
    }
  }
}

SignalValues signal_values(const GadgetSpec& g, const CompleteFill& fill, PortDirection dir) {
  // Inputs read the negative cell, outputs the positive one.
  SignalValues out;
  for (const Port& p : g.ports) {
    if (p.direction != dir) continue;
    if (p.negative() == (dir == PortDirection::In)) out[p.signal()] = fill.filled(p.cell);
  }
  return out;
}

const Port& value_cell(const GadgetSpec& g, const std::string& signal, PortDirection dir) {
  const Port* p = g.find_port(dir == PortDirection::In ? "~" + signal : signal);
  if (!p) throw GadgetError("gadget " + g.name + ": missing port for signal " + signal);
  return *p;
}

std::vector<std::string> required_signals(GadgetKind kind, PortDirection dir) {
  const bool in = dir == PortDirection::In;
  switch (kind) {
    case GadgetKind::Not:
    case GadgetKind::Wire: return in ? std::vector<std::string>{"v"} : std::vector<std::string>{"v'"};
    case GadgetKind::And:
    case GadgetKind::Or: return in ? std::vector<std::string>{"v1", "v2"} : std::vector<std::string>{"v'"};
    case GadgetKind::Crossover:
      return in ? std::vector<std::string>{"v1", "v2"} : std::vector<std::string>{"v1'", "v2'"};
    case GadgetKind::Splitter:
      return in ? std::vector<std::string>{"v"} : std::vector<std::string>{"v'", "v''"};
    case GadgetKind::Input: return in ? std::vector<std::string>{} : std::vector<std::string>{"v"};
    case GadgetKind::Output: return in ? std::vector<std::string>{"v"} : std::vector<std::string>{};
  }
  return {};
}

// -1 empty in every solution, 1 filled in every solution, 0 undetermined.
std::vector<int> edge_states(const GadgetSpec& g, int col) {
  InferenceSession session(g.puzzle);
  std::vector<int> out(static_cast<std::size_t>(g.puzzle.rows()), 0);
  if (!session.solver().solve().satisfiable()) return out;
  for (int r = 0; r < g.puzzle.rows(); ++r) {
    if (session.query({r, col}, Polarity::Filled).status == SolveStatus::Unsatisfiable) {
      out[static_cast<std::size_t>(r)] = 1;
    } else if (session.query({r, col}, Polarity::Empty).status == SolveStatus::Unsatisfiable) {
      out[static_cast<std::size_t>(r)] = -1;
    }
  }
  return out;
}

const Port* right_output(const GadgetSpec& g) {
  for (const Port& p : g.ports)
    if (p.direction == PortDirection::Out && p.negative() && p.cell.col == g.puzzle.cols() - 1) return &p;
  return nullptr;
}

const Port* left_input(const GadgetSpec& g) {
  for (const Port& p : g.ports)
    if (p.direction == PortDirection::In && p.negative() && p.cell.col == 0) return &p;
  return nullptr;
}

bool unsat_under(Solver& solver, std::initializer_list<Literal> lits) {
  return solver.solve(lits).status == SolveStatus::Unsatisfiable;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

PropertyCheck check_ports(const GadgetSpec& g) {
  std::vector<std::string> missing;
  for (PortDirection dir : {PortDirection::In, PortDirection::Out}) {
    for (const auto& s : required_signals(g.kind, dir)) {
      if (!g.find_port(s) || !g.find_port("~" + s) || g.find_port(s)->direction != dir) missing.push_back(s);
    }
  }
  if (!missing.empty()) return {"ports", Verdict::Fail, "missing " + join(missing)};
  const auto ins = g.signals(PortDirection::In).size();
  const auto outs = g.signals(PortDirection::Out).size();
  return {"ports", Verdict::Pass, std::to_string(ins) + " in, " + std::to_string(outs) + " out"};
}

PropertyCheck check_alignment(const GadgetSpec& g) {
  const int last = g.puzzle.rows() - 1;
  const int mid = last / 2;
  std::vector<std::string> bad;
  for (const Port& neg : g.ports) {
    if (!neg.negative()) continue;
    const Port& pos = *g.find_port(neg.signal());
    const Cell a = neg.cell, b = pos.cell;
    bool ok = false;
    if (a.row == mid && b.row == mid) {
      const bool edge = neg.direction == PortDirection::In ? a.col == 0 : a.col == last;
      ok = edge && std::abs(a.col - b.col) >= 1 && std::abs(a.col - b.col) <= 3;
    } else if (a.col == mid && b.col == mid) {
      ok = (a.row == 0 || a.row == last) && std::abs(a.row - b.row) >= 1 && std::abs(a.row - b.row) <= 3;
    }
    if (!ok) bad.push_back(neg.signal());
  }
  if (!bad.empty()) return {"alignment", Verdict::Fail, "misplaced " + join(bad)};
  return {"alignment", Verdict::Pass, "ports on the midlines with negative cells on the border"};
}

}  // namespace

const char* to_string(GadgetKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "?";
}

GadgetKind parse_gadget_kind(const std::string& name) {
  for (const auto& k : kKindNames)
    if (name == k.name) return k.kind;
  throw GadgetError("unknown gadget type '" + name + "'");
}

bool is_terminal(GadgetKind kind) { return kind == GadgetKind::Input || kind == GadgetKind::Output; }

const Port* GadgetSpec::find_port(const std::string& label) const {
  for (const Port& p : ports)
    if (p.label == label) return &p;
  return nullptr;
}

std::vector<std::string> GadgetSpec::signals(PortDirection direction) const {
  std::set<std::string> out;
  for (const Port& p : ports)
    if (p.direction == direction) out.insert(p.signal());
  return {out.begin(), out.end()};
}

std::vector<GadgetSpec> parse_gadgets(const std::string& text) {
  const auto lines = split_lines(text);
  std::vector<GadgetSpec> out;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    if (skippable(lines[pos])) {
      ++pos;
      continue;
    }
    const auto head = words(lines[pos]);
    if (head.size() != 2 || head[0] != "gadget") {
      throw GadgetError("line " + std::to_string(pos + 1) + ": expected 'gadget NAME'");
    }
    const std::string name = head[1];
    ++pos;
    try {
      const GadgetKind kind = parse_gadget_kind(name);
      Puzzle puzzle = parse_puzzle_lines(lines, pos);
      if (puzzle.rows() != kGadgetSize || puzzle.cols() != kGadgetSize) {
        throw GadgetError("board is " + std::to_string(puzzle.rows()) + "x" + std::to_string(puzzle.cols()) +
                          ", gadgets are 11x11");
      }
      GadgetSpec g{name, kind, std::move(puzzle), {}};
      for (;; ++pos) {
        if (pos >= lines.size()) throw GadgetError("missing 'end'");
        const auto w = words(lines[pos]);
        if (w.size() == 1 && w[0] == "end") break;
        if (w.size() != 5 || w[0] != "port" || (w[2] != "in" && w[2] != "out")) {
          throw GadgetError("expected 'port LABEL in|out ROW COL', got '" + lines[pos] + "'");
        }
        Port p;
        p.label = w[1];
        p.direction = w[2] == "in" ? PortDirection::In : PortDirection::Out;
        p.cell = {std::stoi(w[3]), std::stoi(w[4])};
        g.ports.push_back(std::move(p));
      }
      ++pos;
      validate_ports(g);
      out.push_back(std::move(g));
    } catch (const GadgetError& e) {
      const std::string what = e.what();
      if (what.rfind("gadget ", 0) == 0) throw;
      throw GadgetError("gadget " + name + ": " + what);
    } catch (const std::exception& e) {
      throw GadgetError("gadget " + name + ": " + e.what());
    }
  }
  return out;
}

std::vector<GadgetSpec> load_gadgets(const std::filesystem::path& path) {
  return parse_gadgets(read_text_file(path));
}

std::filesystem::path default_gadget_path() {
  return std::filesystem::path(NONOLAB_DATA_DIR) / "gadgets.txt";
}

GadgetSolutions enumerate_solutions(const Puzzle& puzzle, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("solution limit must be at least 1");
  const PuzzleEncoding enc = encode_puzzle(puzzle);
  Solver solver(enc.formula);
  GadgetSolutions out;
  std::vector<Literal> block;
  for (;;) {
    const SolveResult r = solver.solve();
    if (!r.satisfiable()) {
      out.exhaustive = true;
      break;
    }
    if (out.fills.size() == limit) break;
    CompleteFill fill(puzzle.rows(), puzzle.cols());
    block.clear();
    for (int i = 0; i < puzzle.rows(); ++i) {
      for (int j = 0; j < puzzle.cols(); ++j) {
        const bool v = r.value(enc.vars.cell(i, j));
        fill.set(i, j, v);
        block.push_back(enc.vars.cell_literal({i, j}, !v));
      }
    }
    solver.add_clause(block);
    out.fills.push_back(std::move(fill));
  }
  return out;
}

GadgetSolutions enumerate_gadget_solutions(const GadgetSpec& gadget, std::size_t limit) {
  return enumerate_solutions(gadget.puzzle, limit);
}

SignalValues input_values(const GadgetSpec& gadget, const CompleteFill& fill) {
  return signal_values(gadget, fill, PortDirection::In);
}

SignalValues output_values(const GadgetSpec& gadget, const CompleteFill& fill) {
  return signal_values(gadget, fill, PortDirection::Out);
}

std::optional<SignalValues> expected_outputs(GadgetKind kind, const SignalValues& in) {
  auto get = [&](const char* s) { return in.at(s); };
  switch (kind) {
    case GadgetKind::Not: return SignalValues{{"v'", !get("v")}};
    case GadgetKind::And: return SignalValues{{"v'", get("v1") && get("v2")}};
    case GadgetKind::Or: return SignalValues{{"v'", get("v1") || get("v2")}};
    case GadgetKind::Wire: return SignalValues{{"v'", get("v")}};
    case GadgetKind::Crossover: return SignalValues{{"v1'", get("v1")}, {"v2'", get("v2")}};
    case GadgetKind::Splitter: return SignalValues{{"v'", get("v")}, {"v''", get("v")}};
    case GadgetKind::Input:
    case GadgetKind::Output: return std::nullopt;
  }
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool GadgetReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.verdict == Verdict::Fail; });
}

const PropertyCheck* GadgetReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::optional<Puzzle> compose_horizontal(const GadgetSpec& left, const GadgetSpec& right) {
  if (left.puzzle.rows() != right.puzzle.rows()) return std::nullopt;
  const auto a = edge_states(left, left.puzzle.cols() - 1);
  const auto b = edge_states(right, 0);
  std::vector<Description> rows;
  for (int r = 0; r < left.puzzle.rows(); ++r) {
    const auto i = static_cast<std::size_t>(r);
    if ((a[i] == 0) != (b[i] == 0)) return std::nullopt;
    std::vector<int> ra = left.puzzle.row(r).runs();
    const std::vector<int>& rb = right.puzzle.row(r).runs();
    if (a[i] == 1 && b[i] == 1) {
      ra.back() += rb.front();
      ra.insert(ra.end(), rb.begin() + 1, rb.end());
    } else {
      // Separate runs: on a signal row at most one of the two edge cells is filled.
      ra.insert(ra.end(), rb.begin(), rb.end());
    }
    rows.emplace_back(std::move(ra));
  }
  std::vector<Description> cols = left.puzzle.col_descriptions();
  cols.insert(cols.end(), right.puzzle.col_descriptions().begin(), right.puzzle.col_descriptions().end());
  return Puzzle(left.puzzle.rows(), left.puzzle.cols() + right.puzzle.cols(), std::move(rows), std::move(cols));
}

namespace {

PropertyCheck check_composition(const GadgetSpec& g, const std::vector<GadgetSpec>* library) {
  const Port* out = right_output(g);
  if (!out) return {"composition", Verdict::Skipped, "no right-edge output"};
  if (!library) return {"composition", Verdict::Skipped, "no partner gadgets supplied"};
  int checked = 0;
  std::vector<std::string> skipped, failed;
  for (const GadgetSpec& next : *library) {
    const Port* in = left_input(next);
    if (!in || in->cell.row != out->cell.row) continue;
    const auto composed = compose_horizontal(g, next);
    if (!composed) {
      skipped.push_back(next.name + " (edge rows differ)");
      continue;
    }
    const PuzzleEncoding enc = encode_puzzle(*composed);
    Solver solver(enc.formula);
    if (!solver.solve().satisfiable()) {
      skipped.push_back(next.name + " (no solution)");
      continue;
    }
    const Cell neg_out = out->cell;
    const Cell pos_in{next.find_port(in->signal())->cell.row, next.find_port(in->signal())->cell.col + g.puzzle.cols()};
    const Literal a = enc.vars.cell_literal(neg_out, true);
    const Literal b = enc.vars.cell_literal(pos_in, true);
    ++checked;
    if (!unsat_under(solver, {a, ~b}) || !unsat_under(solver, {~a, b})) failed.push_back(next.name);
  }
  std::string detail = std::to_string(checked) + " partners checked";
  if (!skipped.empty()) detail += "; skipped " + join(skipped);
  if (!failed.empty()) return {"composition", Verdict::Fail, detail + "; broken with " + join(failed)};
  if (checked == 0) return {"composition", Verdict::Skipped, detail};
  return {"composition", Verdict::Pass, detail};
}

PropertyCheck check_noninferable(const GadgetSpec& g, Solver& solver, const VarMap& vars) {
  if (g.kind == GadgetKind::Input) return {"non-inferable ports", Verdict::Skipped, "input terminal"};
  std::vector<std::string> fixed;
  for (const Port& p : g.ports) {
    const Literal x = vars.cell_literal(p.cell, true);
    if (unsat_under(solver, {x}) || unsat_under(solver, {~x})) fixed.push_back(p.label);
  }
  if (!fixed.empty()) return {"non-inferable ports", Verdict::Fail, "determined: " + join(fixed)};
  return {"non-inferable ports", Verdict::Pass, "every port cell takes both values"};
}

PropertyCheck check_exclusivity(const GadgetSpec& g, Solver& solver, const VarMap& vars) {
  std::vector<std::string> bad;
  for (const Port& neg : g.ports) {
    if (!neg.negative()) continue;
    const Literal a = vars.cell_literal(neg.cell, true);
    const Literal b = vars.cell_literal(g.find_port(neg.signal())->cell, true);
    if (!unsat_under(solver, {a, b}) || !unsat_under(solver, {~a, ~b})) bad.push_back(neg.signal());
  }
  if (!bad.empty()) return {"port exclusivity", Verdict::Fail, "pairs not exclusive: " + join(bad)};
  return {"port exclusivity", Verdict::Pass, "one cell of every pair filled"};
}

std::string format_values(const SignalValues& v) {
  std::string out;
  for (const auto& [k, b] : v) out += (out.empty() ? "" : " ") + k + "=" + (b ? "1" : "0");
  return out;
}

PropertyCheck check_semantics(const GadgetSpec& g, const GadgetSolutions& sols, Solver& solver, const VarMap& vars) {
  const auto ins = g.signals(PortDirection::In);
  const auto outs = g.signals(PortDirection::Out);
  if (is_terminal(g.kind)) {
    // A terminal must admit both values of its signal.
    const PortDirection dir = g.kind == GadgetKind::Input ? PortDirection::Out : PortDirection::In;
    const auto& names = dir == PortDirection::In ? ins : outs;
    for (const auto& s : names) {
      const Literal x = vars.cell_literal(value_cell(g, s, dir).cell, true);
      if (unsat_under(solver, {x}) || unsat_under(solver, {~x})) {
        return {"gate semantics", Verdict::Fail, "signal " + s + " is fixed"};
      }
    }
    return {"gate semantics", Verdict::Pass, "signal takes both values"};
  }
  std::set<SignalValues> seen_inputs;
  if (sols.exhaustive) {
    for (const auto& fill : sols.fills) {
      const SignalValues in = input_values(g, fill);
      const SignalValues out = output_values(g, fill);
      if (out != *expected_outputs(g.kind, in)) {
        return {"gate semantics", Verdict::Fail, "solution with " + format_values(in) + " gives " + format_values(out)};
      }
      seen_inputs.insert(in);
    }
  } else {
    // Too many solutions to list; ask the solver per input combination instead.
    for (std::uint32_t mask = 0; mask < (1u << ins.size()); ++mask) {
      SignalValues in;
      std::vector<Literal> a;
      for (std::size_t i = 0; i < ins.size(); ++i) {
        in[ins[i]] = (mask >> i) & 1u;
        a.push_back(vars.cell_literal(value_cell(g, ins[i], PortDirection::In).cell, in[ins[i]]));
      }
      if (!solver.solve(a).satisfiable()) continue;
      seen_inputs.insert(in);
      for (const auto& [s, v] : *expected_outputs(g.kind, in)) {
        a.push_back(vars.cell_literal(value_cell(g, s, PortDirection::Out).cell, !v));
        if (solver.solve(a).satisfiable()) {
          return {"gate semantics", Verdict::Fail, format_values(in) + " allows " + s + "=" + (v ? "0" : "1")};
        }
        a.pop_back();
      }
    }
  }
  if (seen_inputs.size() != (std::size_t{1} << ins.size())) {
    return {"gate semantics", Verdict::Fail,
            std::to_string(seen_inputs.size()) + " of " + std::to_string(1u << ins.size()) + " input combinations occur"};
  }
  return {"gate semantics", Verdict::Pass, "all " + std::to_string(seen_inputs.size()) + " input combinations behave"};
}

}  // namespace

GadgetReport verify_gadget_properties(const GadgetSpec& g, VerifyOptions options) {
  GadgetReport report;
  report.gadget = g.name;
  const bool square = g.puzzle.rows() == kGadgetSize && g.puzzle.cols() == kGadgetSize;
  report.checks.push_back({"dimensions", square ? Verdict::Pass : Verdict::Fail,
                           std::to_string(g.puzzle.rows()) + "x" + std::to_string(g.puzzle.cols())});

  const GadgetSolutions sols = enumerate_gadget_solutions(g, options.solution_limit);
  report.solution_count = sols.fills.size();
  report.exhaustive = sols.exhaustive;
  const std::string count = std::to_string(sols.fills.size()) + (sols.exhaustive ? "" : "+") + " solutions";
  report.checks.push_back({"consistent", sols.fills.empty() ? Verdict::Fail : Verdict::Pass, count});
  if (sols.fills.empty()) return report;

  if (is_terminal(g.kind)) {
    report.checks.push_back({"multiple solutions", Verdict::Skipped, "terminal"});
  } else {
    report.checks.push_back({"multiple solutions", sols.fills.size() >= 2 ? Verdict::Pass : Verdict::Fail, count});
  }

  PropertyCheck ports = check_ports(g);
  const bool ports_ok = ports.verdict == Verdict::Pass;
  report.checks.push_back(std::move(ports));
  if (!ports_ok) return report;
  report.checks.push_back(check_alignment(g));

  const PuzzleEncoding enc = encode_puzzle(g.puzzle);
  Solver solver(enc.formula);
  report.checks.push_back(check_exclusivity(g, solver, enc.vars));
  report.checks.push_back(check_noninferable(g, solver, enc.vars));
  report.checks.push_back(check_semantics(g, sols, solver, enc.vars));
  report.checks.push_back(check_composition(g, options.library));
  return report;
}

bool verify_noninference_certificate(const Puzzle& puzzle, const std::vector<CompleteFill>& certificate) {
  const int m = puzzle.rows();
  const int n = puzzle.cols();
  const auto expected = static_cast<std::size_t>(2 * m * n);
  if (certificate.size() != expected) {
    throw BoardError("certificate needs " + std::to_string(expected) + " fills, got " +
                     std::to_string(certificate.size()));
  }
  for (const auto& f : certificate) {
    if (f.rows() != m || f.cols() != n) throw BoardError("certificate fill has the wrong dimensions");
  }
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const auto k = static_cast<std::size_t>(r * n + c);
      const CompleteFill& with = certificate[2 * k];
      const CompleteFill& without = certificate[2 * k + 1];
      if (!with.filled(r, c) || without.filled(r, c)) return false;
      if (!verify_solution(puzzle, with) || !verify_solution(puzzle, without)) return false;
    }
  }
  return true;
}

std::optional<std::vector<CompleteFill>> build_noninference_certificate(
    const Puzzle& puzzle, const std::vector<CompleteFill>& solutions) {
  std::vector<CompleteFill> out;
  for (int r = 0; r < puzzle.rows(); ++r) {
    for (int c = 0; c < puzzle.cols(); ++c) {
      for (bool want : {true, false}) {
        auto it = std::find_if(solutions.begin(), solutions.end(),
                               [&](const CompleteFill& f) { return f.filled(r, c) == want; });
        if (it == solutions.end()) return std::nullopt;
        out.push_back(*it);
      }
    }
  }
  return out;
}

void CircuitSpec::validate() const {
  if (input_count < 0) throw GadgetError("negative input count");
  int wires = input_count;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::size_t arity = g.type == GateType::Not ? 1 : 2;
    if (g.inputs.size() != arity) throw GadgetError("gate " + std::to_string(i) + " has the wrong arity");
    for (int w : g.inputs) {
      if (w < 0 || w >= wires) throw GadgetError("gate " + std::to_string(i) + " reads an undriven wire");
    }
    if (g.output != wires) throw GadgetError("gate " + std::to_string(i) + " must drive wire " + std::to_string(wires));
    ++wires;
  }
  if (output < 0 || output >= wires) throw GadgetError("circuit output wire does not exist");
}

bool CircuitSpec::evaluate(const std::vector<bool>& inputs) const {
  validate();
  if (static_cast<int>(inputs.size()) != input_count) throw GadgetError("wrong number of circuit inputs");
  std::vector<bool> wire(inputs);
  for (const Gate& g : gates) {
    const bool a = wire[static_cast<std::size_t>(g.inputs[0])];
    switch (g.type) {
      case GateType::Not: wire.push_back(!a); break;
      case GateType::And: wire.push_back(a && wire[static_cast<std::size_t>(g.inputs[1])]); break;
      case GateType::Or: wire.push_back(a || wire[static_cast<std::size_t>(g.inputs[1])]); break;
    }
  }
  return wire[static_cast<std::size_t>(output)];
}

bool CircuitSpec::unsatisfiable() const {
  if (input_count > 24) throw GadgetError("circuit has too many inputs to enumerate");
  for (std::uint32_t mask = 0; mask < (1u << input_count); ++mask) {
    std::vector<bool> in(static_cast<std::size_t>(input_count));
    for (int i = 0; i < input_count; ++i) in[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    if (evaluate(in)) return false;
  }
  return true;
}

}  // namespace nonolab
