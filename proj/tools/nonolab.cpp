// Command-line front end for the nonolab library.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "nonolab/automaton.hpp"
#include "nonolab/dimacs.hpp"
#include "nonolab/encoder.hpp"
#include "nonolab/experiment.hpp"
#include "nonolab/gadgets.hpp"
#include "nonolab/inference.hpp"
#include "nonolab/puzzle_io.hpp"
#include "nonolab/solver.hpp"

using namespace nonolab;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::vector<Literal> parse_literals(const std::string& text) {
  std::istringstream in(text);
  std::vector<Literal> out;
  for (int v; in >> v;) out.push_back(Literal::from_dimacs(v));
  if (!in.eof()) throw CnfError("assumptions must be integers, got '" + text + "'");
  return out;
}

void print_stats(const SolveStats& s) {
  std::printf("propagations %lld\ndecisions %lld\nconflicts %lld\nrestarts %lld\ntime %.3fs\n",
              static_cast<long long>(s.propagations), static_cast<long long>(s.decisions),
              static_cast<long long>(s.conflicts), static_cast<long long>(s.restarts),
              std::chrono::duration<double>(s.wall_time).count());
}

void print_grid(const Grid<CellVerdict>& g) {
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) std::putchar(to_char(g(r, c)));
    std::putchar('\n');
  }
}

class Progress {
 public:
  explicit Progress(bool enabled) : enabled_(enabled) {}
  void operator()(std::size_t done, std::size_t total) const {
    if (!enabled_) return;
    if (done == total || done % 25 == 0) {
      std::fprintf(stderr, "\r%zu/%zu boards", done, total);
      if (done == total) std::fputc('\n', stderr);
    }
  }

 private:
  bool enabled_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonogram inference lab"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Random board and its descriptions");
  int rows = 5, cols = 5;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string fill_out, puzzle_out;
  bool as_json = false;
  gen->add_option("--rows", rows, "Rows")->check(CLI::PositiveNumber);
  gen->add_option("--cols", cols, "Columns")->check(CLI::PositiveNumber);
  gen->add_option("--density", density, "Fill probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--fill-out", fill_out, "Write the fill here instead of stdout");
  gen->add_option("--puzzle-out", puzzle_out, "Write the puzzle here instead of stdout");
  gen->add_flag("--json", as_json, "Puzzle as JSON");

  // extract
  auto* ext = app.add_subcommand("extract", "Descriptions of a fill");
  std::string fill_path;
  ext->add_option("--fill", fill_path, "Fill file")->required();
  ext->add_flag("--json", as_json, "Puzzle as JSON");

  // verify
  auto* ver = app.add_subcommand("verify", "Check a fill against a puzzle");
  std::string puzzle_path;
  ver->add_option("--puzzle", puzzle_path, "Puzzle file")->required();
  ver->add_option("--fill", fill_path, "Fill file")->required();

  // automaton
  auto* aut = app.add_subcommand("automaton", "Line automaton of a description");
  std::string desc_text;
  bool dot = false;
  int enum_length = 0;
  aut->add_option("--desc", desc_text, "Run lengths, e.g. \"2 1\"")->required();
  aut->add_flag("--dot", dot, "DOT graph output");
  aut->add_option("--enumerate", enum_length, "List satisfying lines of this length");

  // encode
  auto* enc = app.add_subcommand("encode", "DIMACS encoding of a puzzle");
  std::string out_path;
  bool stats_only = false;
  enc->add_option("--puzzle", puzzle_path, "Puzzle file")->required();
  enc->add_option("--out", out_path, "Output file");
  enc->add_flag("--stats", stats_only, "Print sizes instead of the formula");

  // solve
  auto* sol = app.add_subcommand("solve", "Solve a puzzle or a DIMACS formula");
  std::string cnf_path, assume_text;
  std::int64_t budget = -1;
  auto* sol_puzzle = sol->add_option("--puzzle", puzzle_path, "Puzzle file");
  auto* sol_cnf = sol->add_option("--cnf", cnf_path, "DIMACS file");
  sol_puzzle->excludes(sol_cnf);
  sol->add_option("--assume", assume_text, "Assumption literals, e.g. \"1 -4\"");
  sol->add_option("--budget", budget, "Conflict budget");

  // infer
  auto* inf = app.add_subcommand("infer", "Inferable cells of a puzzle");
  std::string fixed_path;
  inf->add_option("--puzzle", puzzle_path, "Puzzle file")->required();
  inf->add_option("--fill", fill_path, "Generating fill; adds the filled-cell count report");
  inf->add_option("--fixed", fixed_path, "Partial fill of already decided cells");

  // gadgets
  auto* gad = app.add_subcommand("gadgets", "Circuit gadgets");
  gad->require_subcommand(1);
  auto* gad_verify = gad->add_subcommand("verify", "Property table");
  std::string gadget_name, data_path;
  std::size_t limit = 10000;
  gad_verify->add_option("--gadget", gadget_name, "Only this gadget");
  gad_verify->add_option("--data", data_path, "Gadget file");
  gad_verify->add_option("--limit", limit, "Solution enumeration limit")->check(CLI::PositiveNumber);
  bool verbose = false;
  gad_verify->add_flag("--verbose,-v", verbose, "Show check details");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Density sweep");
  std::string sizes_text = "15,20,25", densities_text = "0.03:0.99:0.03", out_dir;
  int boards = 250, jobs = 1;
  bool quiet = false;
  swp->add_option("--sizes", sizes_text, "Board sizes");
  swp->add_option("--densities", densities_text, "lo:hi:step or a list");
  swp->add_option("--boards", boards, "Boards per density")->check(CLI::PositiveNumber);
  swp->add_option("--seed", seed, "Base seed");
  swp->add_option("--out", out_dir, "Output directory (default $NONOLAB_OUTPUT_DIR or results)");
  swp->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  swp->add_option("--budget", budget, "Conflict budget per query");
  swp->add_flag("--quiet", quiet, "No progress output");

  // size-study
  auto* sst = app.add_subcommand("size-study", "Formula size across densities");
  int size = 40;
  sst->add_option("--size", size, "Board size")->check(CLI::PositiveNumber);
  sst->add_option("--boards", boards, "Boards per density")->check(CLI::PositiveNumber);
  sst->add_option("--densities", densities_text, "lo:hi:step or a list");
  sst->add_option("--seed", seed, "Base seed");
  sst->add_option("--out", out_dir, "Output directory (default $NONOLAB_OUTPUT_DIR or results)");
  sst->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const CompleteFill fill = generate_board(rows, cols, Density(density), Seed{seed});
      const Puzzle puzzle = extract_descriptions(fill);
      emit(format_fill_text(fill), fill_out);
      if (fill_out.empty() && puzzle_out.empty()) std::cout << '\n';
      emit(as_json ? puzzle_to_json(puzzle).dump(2) + "\n" : format_puzzle_text(puzzle), puzzle_out);
    } else if (ext->parsed()) {
      const Puzzle puzzle = extract_descriptions(parse_fill_text(read_text_file(fill_path)));
      std::cout << (as_json ? puzzle_to_json(puzzle).dump(2) + "\n" : format_puzzle_text(puzzle));
    } else if (ver->parsed()) {
      const bool ok = verify_solution(read_puzzle_file(puzzle_path), parse_fill_text(read_text_file(fill_path)));
      std::cout << (ok ? "valid" : "invalid") << '\n';
      return ok ? 0 : 1;
    } else if (aut->parsed()) {
      const Description desc = parse_description(desc_text);
      const LineAutomaton a = build_automaton(desc);
      if (dot) {
        std::cout << a.to_dot();
      } else if (enum_length > 0) {
        for (const auto& line : enumerate_satisfying(desc, enum_length)) {
          for (bool b : line) std::cout << (b ? '#' : '.');
          std::cout << '\n';
        }
      } else {
        std::cout << "state on0 on1 accepting\n";
        for (int q = 0; q < a.state_count(); ++q) {
          std::cout << 'q' << q << ' ' << a.step(q, false) << ' ' << a.step(q, true) << ' '
                    << (a.accepting(q) ? "yes" : "no") << '\n';
        }
      }
    } else if (enc->parsed()) {
      const PuzzleEncoding e = encode_puzzle(read_puzzle_file(puzzle_path));
      if (stats_only) {
        const FormulaSize s = measure(e.formula);
        std::printf("clauses %lld\nliterals %lld\ndistinct_variables %lld\n", static_cast<long long>(s.clauses),
                    static_cast<long long>(s.literal_occurrences), static_cast<long long>(s.distinct_variables));
      } else {
        emit(to_dimacs(e.formula), out_path);
      }
    } else if (sol->parsed()) {
      if (puzzle_path.empty() == cnf_path.empty()) throw CLI::ValidationError("give --puzzle or --cnf");
      SolverConfig cfg;
      cfg.conflict_budget = budget;
      const auto assumptions = parse_literals(assume_text);
      if (!puzzle_path.empty()) {
        const Puzzle p = read_puzzle_file(puzzle_path);
        const PuzzleEncoding e = encode_puzzle(p);
        const SolveResult r = solve(e.formula, assumptions, cfg);
        std::cout << to_string(r.status) << '\n';
        if (r.satisfiable()) {
          CompleteFill fill(p.rows(), p.cols());
          for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) fill.set(i, j, r.value(e.vars.cell(i, j)));
          std::cout << format_fill_text(fill);
        }
        print_stats(r.stats);
        return r.satisfiable() ? 10 : (r.status == SolveStatus::Unsatisfiable ? 20 : 0);
      }
      const CnfFormula f = parse_dimacs(read_text_file(cnf_path));
      const SolveResult r = solve(f, assumptions, cfg);
      std::cout << "s " << (r.satisfiable() ? "SATISFIABLE" : r.status == SolveStatus::Unsatisfiable ? "UNSATISFIABLE" : "UNKNOWN") << '\n';
      if (r.satisfiable()) {
        std::cout << 'v';
        for (int v = 1; v < static_cast<int>(r.model.size()); ++v) std::cout << ' ' << (r.model[static_cast<std::size_t>(v)] ? v : -v);
        std::cout << " 0\n";
      }
      print_stats(r.stats);
      return r.satisfiable() ? 10 : (r.status == SolveStatus::Unsatisfiable ? 20 : 0);
    } else if (inf->parsed()) {
      const Puzzle p = read_puzzle_file(puzzle_path);
      const PartialFill fixed = fixed_path.empty() ? blank_partial(p.rows(), p.cols())
                                                   : parse_partial_text(read_text_file(fixed_path));
      if (!fill_path.empty()) {
        const InferenceReport r = count_inferred_filled(p, parse_fill_text(read_text_file(fill_path)));
        std::printf("filled %d\ninferred_filled %d\nproportion %.6f\npropagations %lld\nbase_propagations %lld\nqueries %d\n",
                    r.filled_cells, r.inferred_filled, r.proportion_inferred,
                    static_cast<long long>(r.total_propagations), static_cast<long long>(r.base_propagations),
                    r.queries_run);
      }
      print_grid(infer_all(p, fixed));
    } else if (gad_verify->parsed()) {
      const auto gadgets = load_gadgets(data_path.empty() ? default_gadget_path() : std::filesystem::path(data_path));
      bool all_ok = true;
      bool found = false;
      for (const auto& g : gadgets) {
        if (!gadget_name.empty() && g.name != gadget_name) continue;
        found = true;
        VerifyOptions opts;
        opts.solution_limit = limit;
        opts.library = &gadgets;
        const GadgetReport r = verify_gadget_properties(g, opts);
        all_ok = all_ok && r.passed();
        std::printf("%-10s %s (%zu%s solutions)\n", g.name.c_str(), r.passed() ? "pass" : "FAIL", r.solution_count,
                    r.exhaustive ? "" : "+");
        for (const auto& c : r.checks) {
          std::printf("  %-20s %-7s", c.name.c_str(), to_string(c.verdict));
          if (verbose || c.verdict == Verdict::Fail) std::printf(" %s", c.detail.c_str());
          std::printf("\n");
        }
      }
      if (!found) throw GadgetError("no gadget named " + gadget_name);
      return all_ok ? 0 : 1;
    } else if (swp->parsed()) {
      SweepConfig cfg;
      cfg.sizes = parse_size_list(sizes_text);
      cfg.densities = parse_density_grid(densities_text);
      cfg.boards_per_density = boards;
      cfg.base_seed = Seed{seed};
      cfg.output_dir = resolve_output_dir(out_dir);
      cfg.jobs = jobs;
      cfg.conflict_budget = budget;
      const auto records = run_sweep(cfg, Progress(!quiet));
      const auto summaries = summarize(records);
      const EmitResult out = emit_outputs(records, summaries, cfg.output_dir);
      for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
      std::printf("size density proportion propagations normalized\n");
      for (const auto& s : summaries) {
        std::printf("%4d %.2f %.4f %14.1f %.3f\n", s.size, s.density, s.mean_proportion_inferred, s.mean_propagations,
                    s.normalized_propagations);
      }
      for (const auto& p : out.written) std::cerr << "wrote " << p.string() << '\n';
    } else if (sst->parsed()) {
      const auto rows_out = formula_size_study(size, parse_density_grid(densities_text), boards, Seed{seed}, jobs);
      const EmitResult out = emit_size_study(size, rows_out, resolve_output_dir(out_dir));
      std::printf("density clauses distinct_variables predicted_clauses\n");
      for (const auto& r : rows_out)
        std::printf("%.2f %.1f %.1f %.1f\n", r.density, r.mean_clauses, r.mean_distinct_variables, r.mean_predicted_clauses);
      for (const auto& p : out.written) std::cerr << "wrote " << p.string() << '\n';
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
