// Density sweeps over random boards, formula-size studies, and their outputs.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nonolab/board.hpp"

namespace nonolab {

class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "lo:hi:step" or a comma-separated list. Grid points are lo + k * step,
// rounded to nine decimals.
std::vector<double> parse_density_grid(const std::string& text);
std::vector<double> default_density_grid();  // 0.03 to 0.99 by 0.03
std::vector<int> parse_size_list(const std::string& text);

// Seed of one board, a pure function of its grid position.
std::uint64_t board_seed(Seed base, int size, int density_index, int board_index);

// Output directory: the explicit value if nonempty, else $NONOLAB_OUTPUT_DIR,
// else "results".
std::filesystem::path resolve_output_dir(const std::string& explicit_dir);

struct SweepConfig {
  std::vector<int> sizes;
  std::vector<double> densities;
  int boards_per_density = 1;
  Seed base_seed;
  std::filesystem::path output_dir;
  int jobs = 1;
  // Conflicts per inference query; negative means unlimited.
  std::int64_t conflict_budget = -1;

  // Throws ExperimentError on an invalid configuration.
  void validate() const;
};

struct SweepRecord {
  int size = 0;
  double density = 0;
  int board_index = 0;
  std::uint64_t seed = 0;
  int filled_count = 0;
  int inferred_filled = 0;
  double proportion_inferred = 0;
  std::int64_t total_propagations = 0;
  std::int64_t base_clause_count = 0;
  std::int64_t base_distinct_variables = 0;
  double wall_time = 0;  // seconds
  // Some inference query ran out of conflicts; the row is left out of means.
  bool budget_exhausted = false;
};

struct DensitySummary {
  int size = 0;
  double density = 0;
  double mean_proportion_inferred = 0;
  double mean_propagations = 0;
  // mean_propagations over its maximum across densities of the same size.
  double normalized_propagations = 0;
  // The lowest density attaining that maximum.
  bool peak = false;
  double mean_clauses = 0;
  double mean_distinct_variables = 0;
  int board_count = 0;
  int exhausted_count = 0;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// One record per (size, density, board), ordered by that triple; identical
// for identical configs whatever the job count.
std::vector<SweepRecord> run_sweep(const SweepConfig& config, const ProgressFn& progress = {});

SweepRecord measure_board(int size, double density, int board_index, std::uint64_t seed,
                          std::int64_t conflict_budget = -1);

// Means per (size, density) in first-seen order. Throws ExperimentError on empty input.
std::vector<DensitySummary> summarize(const std::vector<SweepRecord>& records);

struct SizeStudyRow {
  double density = 0;
  double mean_clauses = 0;
  double mean_distinct_variables = 0;
  double mean_literal_occurrences = 0;
  double mean_predicted_clauses = 0;
  double mean_predicted_distinct_variables = 0;
  int board_count = 0;
};

// Encodes and measures boards without solving.
std::vector<SizeStudyRow> formula_size_study(int size, const std::vector<double>& densities,
                                             int boards_per_density, Seed base_seed, int jobs = 1);

struct EmitResult {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> warnings;
};

std::string records_csv(const std::vector<SweepRecord>& records);
std::string timings_csv(const std::vector<SweepRecord>& records);
std::string summary_csv(const std::vector<DensitySummary>& summaries);
std::string size_study_csv(int size, const std::vector<SizeStudyRow>& rows);

// records.csv, timings.csv, summary.csv, and with data also transition.svg,
// difficulty.svg and sizes.svg.
EmitResult emit_outputs(const std::vector<SweepRecord>& records, const std::vector<DensitySummary>& summaries,
                        const std::filesystem::path& output_dir);
EmitResult emit_size_study(int size, const std::vector<SizeStudyRow>& rows, const std::filesystem::path& output_dir);

// Reads a records.csv back; timings are not part of it.
std::vector<SweepRecord> parse_records_csv(const std::string& text);

}  // namespace nonolab
