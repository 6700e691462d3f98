// Chain automaton recognizing the lines of one description.
//
// Layout for runs l_1..l_t: the start state loops on 0; run i owns l_i states
// advanced on 1; each gap between runs owns one state looping on 0; a trailing
// state loops on 0 after the last run. Accepting states are the last state of
// run t and the trailing state (the start state alone when t = 0). Any missing
// transition rejects.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "nonolab/board.hpp"

namespace nonolab {

class LineAutomaton {
 public:
  static constexpr int kReject = -1;

  enum class Role { Start, Run, Gap, Trailing };

  struct State {
    Role role;
    int run = -1;                    // owning run index for Run states, preceding run for Gap
    std::array<int, 2> next{kReject, kReject};  // indexed by bit
    bool accepting = false;
  };

  explicit LineAutomaton(Description desc);

  const Description& description() const { return desc_; }
  const std::vector<State>& states() const { return states_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  int start() const { return 0; }
  int step(int state, bool bit) const;
  bool accepting(int state) const;
  // The bit that every transition into `state` reads (start state: 0).
  bool entry_bit(int state) const;
  // States with a transition into `state` (excluding none).
  std::vector<int> predecessors(int state) const;

  std::string to_dot() const;

 private:
  Description desc_;
  std::vector<State> states_;
};

LineAutomaton build_automaton(const Description& desc);

bool accepts(const LineAutomaton& automaton, const std::vector<bool>& line);

inline constexpr int kMaxEnumerationLength = 24;

// All length-n lines whose runs equal desc, in lexicographic order (0 < 1).
// Throws std::invalid_argument above kMaxEnumerationLength.
std::vector<std::vector<bool>> enumerate_satisfying(const Description& desc, int n);

}  // namespace nonolab
