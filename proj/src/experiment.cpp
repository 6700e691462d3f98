#include "nonolab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "nonolab/encoder.hpp"
#include "nonolab/inference.hpp"
#include "nonolab/puzzle_io.hpp"
#include "nonolab/random.hpp"
#include "nonolab/svg_plot.hpp"

namespace nonolab {

namespace {

double round9(double x) { return std::round(x * 1e9) / 1e9; }

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ExperimentError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ExperimentError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, int jobs, const Body& body, const ProgressFn& progress) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
        return;
      }
      const std::size_t d = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(d, count);
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, count); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

void ensure_writable(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ExperimentError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto probe = dir / ".write_probe";
  {
    std::ofstream out(probe);
    if (!out) throw ExperimentError("output directory " + dir.string() + " is not writable");
  }
  std::filesystem::remove(probe, ec);
}

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

std::vector<double> parse_density_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ExperimentError("density range must be lo:hi:step");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0) || hi < lo) throw ExperimentError("density range needs lo <= hi and a positive step");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) out.push_back(round9(lo + static_cast<double>(k) * step));
  } else {
    for (const auto& p : split(text, ',')) out.push_back(round9(parse_double(p)));
  }
  if (out.empty()) throw ExperimentError("empty density list");
  return out;
}

std::vector<double> default_density_grid() { return parse_density_grid("0.03:0.99:0.03"); }

std::vector<int> parse_size_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split(text, ',')) {
    const double v = parse_double(p);
    if (v < 1 || v != std::floor(v)) throw ExperimentError("board size must be a positive integer: '" + p + "'");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw ExperimentError("empty size list");
  return out;
}

std::uint64_t board_seed(Seed base, int size, int density_index, int board_index) {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(size));
  h = splitmix64(h ^ static_cast<std::uint64_t>(density_index));
  h = splitmix64(h ^ static_cast<std::uint64_t>(board_index));
  return splitmix64(base.value ^ h);
}

std::filesystem::path resolve_output_dir(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("NONOLAB_OUTPUT_DIR"); env && *env) return env;
  return "results";
}

void SweepConfig::validate() const {
  if (sizes.empty()) throw ExperimentError("no board sizes");
  for (int s : sizes)
    if (s < 1) throw ExperimentError("board sizes must be positive");
  if (densities.empty()) throw ExperimentError("no densities");
  for (std::size_t i = 0; i < densities.size(); ++i) {
    if (densities[i] < 0 || densities[i] > 1) throw ExperimentError("densities must lie in [0, 1]");
    if (i > 0 && densities[i] <= densities[i - 1]) throw ExperimentError("densities must be strictly increasing");
  }
  if (boards_per_density < 1) throw ExperimentError("need at least one board per density");
}

SweepRecord measure_board(int size, double density, int board_index, std::uint64_t seed,
                          std::int64_t conflict_budget) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.size = size;
  rec.density = density;
  rec.board_index = board_index;
  rec.seed = seed;
  const CompleteFill fill = generate_board(size, size, Density(density), Seed{seed});
  const Puzzle puzzle = extract_descriptions(fill);
  const FormulaSize fs = measure(encode_puzzle(puzzle).formula);
  rec.base_clause_count = fs.clauses;
  rec.base_distinct_variables = fs.distinct_variables;
  SolverConfig cfg;
  cfg.conflict_budget = conflict_budget;
  const InferenceReport report = count_inferred_filled(puzzle, fill, cfg, board_index);
  rec.filled_count = report.filled_cells;
  rec.inferred_filled = report.inferred_filled;
  rec.proportion_inferred = report.proportion_inferred;
  rec.total_propagations = report.total_propagations;
  rec.budget_exhausted = report.queries_exhausted > 0;
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, const ProgressFn& progress) {
  config.validate();
  if (!config.output_dir.empty()) ensure_writable(config.output_dir);
  struct Task {
    int size;
    int density_index;
    int board;
  };
  std::vector<Task> tasks;
  for (int s : config.sizes)
    for (int d = 0; d < static_cast<int>(config.densities.size()); ++d)
      for (int b = 0; b < config.boards_per_density; ++b) tasks.push_back({s, d, b});
  std::vector<SweepRecord> records(tasks.size());
  parallel_for(
      tasks.size(), effective_jobs(config.jobs),
      [&](std::size_t i) {
        const Task& t = tasks[i];
        const double rho = config.densities[static_cast<std::size_t>(t.density_index)];
        records[i] = measure_board(t.size, rho, t.board, board_seed(config.base_seed, t.size, t.density_index, t.board),
                                   config.conflict_budget);
      },
      progress);
  return records;
}

std::vector<DensitySummary> summarize(const std::vector<SweepRecord>& records) {
  if (records.empty()) throw ExperimentError("nothing to summarize");
  std::vector<DensitySummary> out;
  std::map<std::pair<int, double>, std::size_t> index;
  for (const auto& r : records) {
    auto [it, fresh] = index.try_emplace({r.size, r.density}, out.size());
    if (fresh) {
      DensitySummary s;
      s.size = r.size;
      s.density = r.density;
      out.push_back(s);
    }
    DensitySummary& s = out[it->second];
    if (r.budget_exhausted) {
      ++s.exhausted_count;
      continue;
    }
    ++s.board_count;
    s.mean_proportion_inferred += r.proportion_inferred;
    s.mean_propagations += static_cast<double>(r.total_propagations);
    s.mean_clauses += static_cast<double>(r.base_clause_count);
    s.mean_distinct_variables += static_cast<double>(r.base_distinct_variables);
  }
  for (auto& s : out) {
    if (s.board_count == 0) continue;
    const double n = s.board_count;
    s.mean_proportion_inferred /= n;
    s.mean_propagations /= n;
    s.mean_clauses /= n;
    s.mean_distinct_variables /= n;
  }
  std::map<int, DensitySummary*> peak;
  for (auto& s : out) {
    if (s.board_count == 0) continue;
    DensitySummary*& p = peak[s.size];
    if (!p || s.mean_propagations > p->mean_propagations ||
        (s.mean_propagations == p->mean_propagations && s.density < p->density)) {
      p = &s;
    }
  }
  for (auto& s : out) {
    auto it = peak.find(s.size);
    if (it == peak.end() || s.board_count == 0) continue;
    const double max = it->second->mean_propagations;
    s.peak = it->second == &s;
    s.normalized_propagations = max > 0 ? s.mean_propagations / max : (s.peak ? 1.0 : 0.0);
  }
  return out;
}

std::vector<SizeStudyRow> formula_size_study(int size, const std::vector<double>& densities, int boards_per_density,
                                             Seed base_seed, int jobs) {
  if (size < 1 || boards_per_density < 1) throw ExperimentError("size and board count must be positive");
  std::vector<SizeStudyRow> rows(densities.size());
  parallel_for(
      densities.size(), effective_jobs(jobs),
      [&](std::size_t d) {
        SizeStudyRow& row = rows[d];
        row.density = densities[d];
        for (int b = 0; b < boards_per_density; ++b) {
          const auto seed = board_seed(base_seed, size, static_cast<int>(d), b);
          const Puzzle p = extract_descriptions(generate_board(size, size, Density(densities[d]), Seed{seed}));
          const FormulaSize fs = measure(encode_puzzle(p).formula);
          row.mean_clauses += static_cast<double>(fs.clauses);
          row.mean_distinct_variables += static_cast<double>(fs.distinct_variables);
          row.mean_literal_occurrences += static_cast<double>(fs.literal_occurrences);
          // Cell variables are shared, so each line's own cells are counted once overall.
          double predicted_distinct = static_cast<double>(size) * size;
          for (const auto* lines : {&p.row_descriptions(), &p.col_descriptions()}) {
            for (const auto& desc : *lines) {
              const auto pred = predict_size(size, static_cast<int>(desc.count()), desc.filled());
              row.mean_predicted_clauses += static_cast<double>(pred.clauses);
              predicted_distinct += static_cast<double>(pred.distinct_variables - size);
            }
          }
          row.mean_predicted_distinct_variables += predicted_distinct;
        }
        const double n = boards_per_density;
        row.board_count = boards_per_density;
        row.mean_clauses /= n;
        row.mean_distinct_variables /= n;
        row.mean_literal_occurrences /= n;
        row.mean_predicted_clauses /= n;
        row.mean_predicted_distinct_variables /= n;
      },
      {});
  return rows;
}

std::string records_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "size,density,boardIndex,seed,filledCount,inferredFilled,proportionInferred,totalPropagations,"
         "baseClauseCount,baseDistinctVariables,budgetExhausted\n";
  for (const auto& r : records) {
    out << r.size << ',' << fmt("%.9g", r.density) << ',' << r.board_index << ',' << r.seed << ',' << r.filled_count
        << ',' << r.inferred_filled << ',' << fmt("%.9f", r.proportion_inferred) << ',' << r.total_propagations << ','
        << r.base_clause_count << ',' << r.base_distinct_variables << ',' << (r.budget_exhausted ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string timings_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "size,density,boardIndex,wallTime\n";
  for (const auto& r : records)
    out << r.size << ',' << fmt("%.9g", r.density) << ',' << r.board_index << ',' << fmt("%.6f", r.wall_time) << '\n';
  return out.str();
}

std::string summary_csv(const std::vector<DensitySummary>& summaries) {
  std::ostringstream out;
  out << "size,density,meanProportionInferred,meanPropagations,normalizedPropagations,peak,meanClauses,"
         "meanDistinctVariables,boardCount,exhaustedCount\n";
  for (const auto& s : summaries) {
    out << s.size << ',' << fmt("%.9g", s.density) << ',' << fmt("%.6f", s.mean_proportion_inferred) << ','
        << fmt("%.3f", s.mean_propagations) << ',' << fmt("%.6f", s.normalized_propagations) << ','
        << (s.peak ? 1 : 0) << ',' << fmt("%.3f", s.mean_clauses) << ',' << fmt("%.3f", s.mean_distinct_variables)
        << ',' << s.board_count << ',' << s.exhausted_count << '\n';
  }
  return out.str();
}

std::string size_study_csv(int size, const std::vector<SizeStudyRow>& rows) {
  std::ostringstream out;
  out << "size,density,meanClauses,meanDistinctVariables,meanLiteralOccurrences,meanPredictedClauses,"
         "meanPredictedDistinctVariables,boardCount\n";
  for (const auto& r : rows) {
    out << size << ',' << fmt("%.9g", r.density) << ',' << fmt("%.3f", r.mean_clauses) << ','
        << fmt("%.3f", r.mean_distinct_variables) << ',' << fmt("%.3f", r.mean_literal_occurrences) << ','
        << fmt("%.3f", r.mean_predicted_clauses) << ',' << fmt("%.3f", r.mean_predicted_distinct_variables) << ','
        << r.board_count << '\n';
  }
  return out.str();
}

namespace {

std::vector<PlotSeries> per_size(const std::vector<DensitySummary>& summaries, double DensitySummary::*field,
                                 bool hollow, const std::string& suffix) {
  std::map<int, PlotSeries> by_size;
  for (const auto& s : summaries) {
    if (s.board_count == 0) continue;
    auto& series = by_size[s.size];
    series.label = std::to_string(s.size) + "x" + std::to_string(s.size) + suffix;
    series.points.emplace_back(s.density, s.*field);
  }
  std::vector<PlotSeries> out;
  for (auto& [size, series] : by_size) {
    series.marker = marker_for(out.size());
    series.hollow = hollow;
    out.push_back(std::move(series));
  }
  return out;
}

void write(const std::filesystem::path& path, const std::string& text, EmitResult& result) {
  write_text_file(path, text);
  result.written.push_back(path);
}

}  // namespace

EmitResult emit_outputs(const std::vector<SweepRecord>& records, const std::vector<DensitySummary>& summaries,
                        const std::filesystem::path& output_dir) {
  ensure_writable(output_dir);
  EmitResult result;
  write(output_dir / "records.csv", records_csv(records), result);
  write(output_dir / "timings.csv", timings_csv(records), result);
  write(output_dir / "summary.csv", summary_csv(summaries), result);
  if (records.empty() || summaries.empty()) {
    result.warnings.push_back("no records; plots not written");
    return result;
  }

  PlotSpec transition;
  transition.title = "Proportion of filled cells inferred";
  transition.x_label = "filled cell density";
  transition.y_label = "mean proportion inferred";
  transition.x_range = {{0.0, 1.0}};
  transition.y_range = {{0.0, 1.0}};
  transition.series = per_size(summaries, &DensitySummary::mean_proportion_inferred, false, "");
  write(output_dir / "transition.svg", render_svg(transition), result);

  PlotSpec difficulty;
  difficulty.title = "Solver effort relative to the per-size maximum";
  difficulty.x_label = "filled cell density";
  difficulty.y_label = "mean propagations / max";
  difficulty.x_range = {{0.0, 1.0}};
  difficulty.y_range = {{0.0, 1.0}};
  difficulty.series = per_size(summaries, &DensitySummary::normalized_propagations, true, "");
  write(output_dir / "difficulty.svg", render_svg(difficulty), result);

  PlotSpec sizes;
  sizes.title = "Formula size";
  sizes.x_label = "filled cell density";
  sizes.y_label = "mean count";
  sizes.x_range = {{0.0, 1.0}};
  sizes.series = per_size(summaries, &DensitySummary::mean_clauses, false, " clauses");
  auto vars = per_size(summaries, &DensitySummary::mean_distinct_variables, true, " variables");
  for (auto& s : vars) sizes.series.push_back(std::move(s));
  write(output_dir / "sizes.svg", render_svg(sizes), result);
  return result;
}

EmitResult emit_size_study(int size, const std::vector<SizeStudyRow>& rows, const std::filesystem::path& output_dir) {
  ensure_writable(output_dir);
  EmitResult result;
  write(output_dir / "size_study.csv", size_study_csv(size, rows), result);
  if (rows.empty()) {
    result.warnings.push_back("no rows; plot not written");
    return result;
  }
  PlotSpec plot;
  plot.title = "Formula size, " + std::to_string(size) + "x" + std::to_string(size) + " boards";
  plot.x_label = "filled cell density";
  plot.y_label = "mean count";
  plot.x_range = {{0.0, 1.0}};
  PlotSeries clauses{"clauses", {}, Marker::Circle, false, true};
  PlotSeries vars{"distinct variables", {}, Marker::Square, true, true};
  PlotSeries pclauses{"closed-form clauses", {}, Marker::Triangle, true, true};
  for (const auto& r : rows) {
    clauses.points.emplace_back(r.density, r.mean_clauses);
    vars.points.emplace_back(r.density, r.mean_distinct_variables);
    pclauses.points.emplace_back(r.density, r.mean_predicted_clauses);
  }
  plot.series = {clauses, vars, pclauses};
  write(output_dir / "sizes.svg", render_svg(plot), result);
  return result;
}

std::vector<SweepRecord> parse_records_csv(const std::string& text) {
  std::vector<SweepRecord> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split(lines[i], ',');
    if (f.size() != 11) throw ExperimentError("records.csv line " + std::to_string(i + 1) + " has " +
                                              std::to_string(f.size()) + " fields");
    SweepRecord r;
    r.size = std::stoi(f[0]);
    r.density = parse_double(f[1]);
    r.board_index = std::stoi(f[2]);
    r.seed = std::stoull(f[3]);
    r.filled_count = std::stoi(f[4]);
    r.inferred_filled = std::stoi(f[5]);
    r.proportion_inferred = parse_double(f[6]);
    r.total_propagations = std::stoll(f[7]);
    r.base_clause_count = std::stoll(f[8]);
    r.base_distinct_variables = std::stoll(f[9]);
    r.budget_exhausted = f[10] == "1";
    out.push_back(r);
  }
  return out;
}

}  // namespace nonolab
