// Circuit gadgets of the hardness reduction: loading, solution enumeration,
// property checks, and non-inference certificates.
//
// Signal convention: an input signal is true when its negative cell (~v) is
// filled; an output signal is true when its positive cell (v') is filled.
// Chaining gadgets horizontally then carries the value across, since the next
// gadget's v is filled exactly when this gadget's ~v' is.
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonolab/board.hpp"

namespace nonolab {

class GadgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GadgetKind { Not, And, Or, Wire, Crossover, Splitter, Input, Output };

const char* to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);
bool is_terminal(GadgetKind kind);

enum class PortDirection { In, Out };

struct Port {
  std::string label;  // e.g. "~v1", "v'"
  PortDirection direction = PortDirection::In;
  Cell cell;

  bool negative() const { return !label.empty() && label.front() == '~'; }
  // Label without the negation mark; both cells of a pair share it.
  std::string signal() const { return negative() ? label.substr(1) : label; }
};

inline constexpr int kGadgetSize = 11;

struct GadgetSpec {
  std::string name;
  GadgetKind kind;
  Puzzle puzzle;
  std::vector<Port> ports;

  const Port* find_port(const std::string& label) const;
  // Signal names of the given direction, sorted.
  std::vector<std::string> signals(PortDirection direction) const;
};

// Parses the gadget file format: "gadget NAME", a puzzle in the text format,
// "port LABEL in|out ROW COL" lines, then "end". Lines starting with '#'
// between gadgets are comments. Errors name the offending gadget.
std::vector<GadgetSpec> parse_gadgets(const std::string& text);
std::vector<GadgetSpec> load_gadgets(const std::filesystem::path& path);
std::filesystem::path default_gadget_path();

struct GadgetSolutions {
  std::vector<CompleteFill> fills;
  // True when the enumeration ran out of solutions before the limit.
  bool exhaustive = false;
};

// Distinct solutions via repeated solving with blocking clauses over the cell
// variables. Throws std::invalid_argument when limit < 1.
GadgetSolutions enumerate_solutions(const Puzzle& puzzle, std::size_t limit);
GadgetSolutions enumerate_gadget_solutions(const GadgetSpec& gadget, std::size_t limit);

using SignalValues = std::map<std::string, bool>;

// Input and output signal values of one solution.
SignalValues input_values(const GadgetSpec& gadget, const CompleteFill& fill);
SignalValues output_values(const GadgetSpec& gadget, const CompleteFill& fill);

// The Boolean function a gate gadget should compute; nothing for terminals.
std::optional<SignalValues> expected_outputs(GadgetKind kind, const SignalValues& inputs);

enum class Verdict { Pass, Fail, Skipped };

const char* to_string(Verdict v);

struct PropertyCheck {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

struct GadgetReport {
  std::string gadget;
  std::size_t solution_count = 0;
  bool exhaustive = false;
  std::vector<PropertyCheck> checks;

  bool passed() const;  // no check failed
  const PropertyCheck* find(const std::string& name) const;
};

// Horizontal chaining of `left` into `right`: rows are concatenated, merging
// the boundary runs of rows whose edge cells are filled in every solution on
// both sides. Nothing unless both edges are undetermined on the same rows.
std::optional<Puzzle> compose_horizontal(const GadgetSpec& left, const GadgetSpec& right);

struct VerifyOptions {
  std::size_t solution_limit = 10000;
  // Gadgets used as right-hand partners for the composition check.
  const std::vector<GadgetSpec>* library = nullptr;
};

GadgetReport verify_gadget_properties(const GadgetSpec& gadget, VerifyOptions options = {});

// certificate[2k] must solve the puzzle with cell k filled and certificate[2k+1]
// with it empty, where k = row * cols + col. Throws BoardError on a wrong
// count or wrong dimensions.
bool verify_noninference_certificate(const Puzzle& puzzle, const std::vector<CompleteFill>& certificate);

// Builds a certificate from known solutions, if they cover both values of every cell.
std::optional<std::vector<CompleteFill>> build_noninference_certificate(
    const Puzzle& puzzle, const std::vector<CompleteFill>& solutions);

enum class GateType { Not, And, Or };

struct Gate {
  GateType type;
  std::vector<int> inputs;  // wire ids
  int output = 0;           // wire id
};

// Wires 0..input_count-1 are the circuit inputs; each gate drives a fresh wire.
struct CircuitSpec {
  int input_count = 0;
  std::vector<Gate> gates;
  int output = 0;

  // Throws GadgetError unless every gate reads only earlier wires, drives a
  // distinct new wire, and the output wire exists.
  void validate() const;
  bool evaluate(const std::vector<bool>& inputs) const;
  // The output is false under every input assignment.
  bool unsatisfiable() const;
};

}  // namespace nonolab
