#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tsnet/ingest.hpp"
#include "tsnet/pipeline.hpp"

namespace tsnet {

enum class RunMode { Analyze, SweepFbm, SweepMrw, SweepScale };

const char* run_mode_name(RunMode mode);

struct RunConfig {
  RunMode mode = RunMode::SweepFbm;
  AnalysisConfig analysis;

  std::vector<double> hurst_grid;  // sweep-fbm / sweep-mrw cells
  std::vector<int> dt_grid;        // sweep-scale cells
  int realizations = 10;
  Eigen::Index length = 10000;     // generated series / subseries length
  std::uint64_t master_seed = 1;

  double intermittency = 0.06;        // sweep-mrw
  Eigen::Index correlation_length = 0;  // 0 -> length

  std::string input_path;  // analyze / sweep-scale
  LoadOptions load;

  std::string output_dir = ".";
  std::set<std::string> formats = {"csv", "json"};
  int threads = 0;  // 0 -> hardware concurrency; does not affect results
};

struct RealizationFailure {
  int realization;
  std::string error;
};

struct CellRecord {
  int cell_index = 0;
  double cell_value = 0.0;  // H or dt
  Eigen::Index source_length = 0;  // series length fed to the analyzer
  int realization_count = 0;       // successes
  double mean_alpha = 0.0;
  std::array<double, kMotifShapeCount> mean_frequencies{};  // by shape
  RankPattern modal_pattern;
  RankPattern mean_frequency_pattern;
  RankPattern predicted_pattern;  // from mean_alpha via the pattern table
  bool agreement = false;         // modal == predicted
  double dispersion = 0.0;
  int delay_fallbacks = 0;  // realizations without an MI local minimum

  // Per-realization evidence, success order.
  std::vector<double> alphas;
  std::vector<int> delays;
  std::vector<RankPattern> patterns;
  std::vector<int> node_counts;
  std::vector<std::uint64_t> edge_counts;
  std::vector<RealizationFailure> failures;
};

struct ExperimentReport {
  RunConfig config;
  std::string version;
  std::vector<CellRecord> cells;
};

// Runs every grid cell with `realizations` independently seeded series,
// aggregates patterns, and returns the report. Deterministic in the master
// seed regardless of thread count.
ExperimentReport run_sweep(const RunConfig& config);

// Writes report.json plus the two flat tables (motif_frequencies.csv,
// patterns.csv) into output_dir, honoring `formats`. Byte-stable for equal
// reports. Returns the written paths.
std::vector<std::string> emit_report(const ExperimentReport& report);

// Serialized report, exactly the bytes emit_report writes to report.json.
std::string report_to_json(const ExperimentReport& report);

// Single-series analysis artifacts: analysis.json plus fluctuation and motif
// tables. Returns the written paths.
std::vector<std::string> emit_analysis(const AnalysisResult& result,
                                       const RunConfig& config,
                                       const TimeSeries& series);

}  // namespace tsnet
