#include "nonolab/automaton.hpp"

#include <sstream>
#include <stdexcept>

namespace nonolab {

LineAutomaton::LineAutomaton(Description desc) : desc_(std::move(desc)) {
  const auto& runs = desc_.runs();
  states_.push_back({Role::Start, -1, {0, kReject}, runs.empty()});
  int entry = 0;  // state whose 1-transition enters the next run
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const int run = static_cast<int>(i);
    for (int k = 0; k < runs[i]; ++k) {
      const int id = state_count();
      states_.push_back({Role::Run, run, {kReject, kReject}, false});
      if (k == 0) {
        states_[static_cast<std::size_t>(entry)].next[1] = id;
      } else {
        states_[static_cast<std::size_t>(id - 1)].next[1] = id;
      }
    }
    const int last = state_count() - 1;
    const bool final_run = i + 1 == runs.size();
    const int sep = state_count();
    states_.push_back({final_run ? Role::Trailing : Role::Gap, run, {sep, kReject}, final_run});
    states_[static_cast<std::size_t>(last)].next[0] = sep;
    if (final_run) states_[static_cast<std::size_t>(last)].accepting = true;
    entry = sep;
  }
}

int LineAutomaton::step(int state, bool bit) const {
  if (state == kReject) return kReject;
  return states_.at(static_cast<std::size_t>(state)).next[bit ? 1 : 0];
}

bool LineAutomaton::accepting(int state) const {
  return state != kReject && states_.at(static_cast<std::size_t>(state)).accepting;
}

bool LineAutomaton::entry_bit(int state) const {
  return states_.at(static_cast<std::size_t>(state)).role == Role::Run;
}

std::vector<int> LineAutomaton::predecessors(int state) const {
  std::vector<int> preds;
  for (int q = 0; q < state_count(); ++q) {
    for (int bit = 0; bit < 2; ++bit) {
      if (states_[static_cast<std::size_t>(q)].next[static_cast<std::size_t>(bit)] == state) {
        preds.push_back(q);
      }
    }
  }
  return preds;
}

std::string LineAutomaton::to_dot() const {
  std::ostringstream out;
  out << "digraph line_automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  label=\"" << desc_.to_string() << "\";\n";
  for (int q = 0; q < state_count(); ++q) {
    const auto& s = states_[static_cast<std::size_t>(q)];
    out << "  q" << q << " [shape=" << (s.accepting ? "doublecircle" : "circle") << "];\n";
  }
  for (int q = 0; q < state_count(); ++q) {
    const auto& s = states_[static_cast<std::size_t>(q)];
    for (int bit = 0; bit < 2; ++bit) {
      const int to = s.next[static_cast<std::size_t>(bit)];
      if (to != kReject) out << "  q" << q << " -> q" << to << " [label=\"" << bit << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

LineAutomaton build_automaton(const Description& desc) { return LineAutomaton(desc); }

bool accepts(const LineAutomaton& automaton, const std::vector<bool>& line) {
  int state = automaton.start();
  for (bool bit : line) {
    state = automaton.step(state, bit);
    if (state == LineAutomaton::kReject) return false;
  }
  return automaton.accepting(state);
}

std::vector<std::vector<bool>> enumerate_satisfying(const Description& desc, int n) {
  if (n < 0 || n > kMaxEnumerationLength) {
    throw std::invalid_argument("enumerate_satisfying: length " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxEnumerationLength) + "]");
  }
  std::vector<std::vector<bool>> out;
  const std::uint32_t total = 1u << n;
  std::vector<bool> line(static_cast<std::size_t>(n));
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    // Position 0 is the most significant bit so that numeric order is lexicographic.
    for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = (bits >> (n - 1 - i)) & 1u;
    if (extract_line_runs(line) == desc) out.push_back(line);
  }
  return out;
}

}  // namespace nonolab
