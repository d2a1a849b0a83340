// tsnet: time-series -> nearest-neighbor-network motif analysis CLI.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "tsnet/errors.hpp"
#include "tsnet/sweep.hpp"
#include "tsnet/version.hpp"

namespace {

using tsnet::ParameterError;

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double start = 0, stop = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        step <= 0)
      throw ParameterError("bad grid spec '" + spec + "', want start:stop:step");
    for (double v = start; v <= stop + step * 1e-9; v += step)
      grid.push_back(v);
  } else {
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t next = spec.find(',', pos);
      if (next == std::string::npos) next = spec.size();
      try {
        grid.push_back(std::stod(spec.substr(pos, next - pos)));
      } catch (const std::exception&) {
        throw ParameterError("bad grid value in '" + spec + "'");
      }
      pos = next + 1;
    }
  }
  if (grid.empty()) throw ParameterError("empty grid spec '" + spec + "'");
  return grid;
}

std::vector<int> parse_int_grid(const std::string& spec) {
  std::vector<int> grid;
  for (double v : parse_grid(spec)) grid.push_back(static_cast<int>(v));
  return grid;
}

struct CliState {
  tsnet::RunConfig cfg;
  std::string hurst_spec = "0.05:0.95:0.05";
  std::string dt_spec = "1:200:1";
  std::vector<std::string> formats = {"csv", "json"};
  std::string label_map_path;
  std::string table_path;
  bool extended_table = false;
  std::string order = "temporal";
  std::string metric = "euclidean";
  std::string dfa_on = "increments";
  std::string export_edges;
  int analyze_dt = 1;
};

void add_common_options(CLI::App* sub, CliState& st) {
  sub->add_option("--length,-l", st.cfg.length,
                  "Series / subseries length (default 10000)");
  sub->add_option("--dimension,-d", st.cfg.analysis.embedding.dimension,
                  "Embedding dimension (default 10)");
  sub->add_option("--seed,-s", st.cfg.master_seed, "Master seed");
  sub->add_option("--out,-o", st.cfg.output_dir, "Output directory");
  sub->add_option("--format", st.formats, "Output formats: json, csv")
      ->delimiter(',');
  sub->add_option("--label-map", st.label_map_path,
                  "JSON file mapping labels A..F to motif shapes");
  sub->add_option("--table", st.table_path,
                  "JSON pattern table (alpha_upper/pattern rows)");
  sub->add_flag("--extended-table", st.extended_table,
                "Use the extended table with the marginal ABCDFE band");
  sub->add_option("--mi-bins", st.cfg.analysis.mi_bins,
                  "Equiprobable bins for mutual information (default 32)");
  sub->add_option("--max-lag", st.cfg.analysis.max_lag,
                  "Largest MI lag scanned for the delay (default 100)");
  sub->add_option("--dfa-min-scale", st.cfg.analysis.dfa.min_scale,
                  "Smallest DFA box size (default 8)");
  sub->add_option("--dfa-max-scale", st.cfg.analysis.dfa.max_scale,
                  "Largest DFA box size (default length/8)");
  sub->add_option("--dfa-scales", st.cfg.analysis.dfa.num_scales,
                  "Number of DFA scale points (default 20)");
  sub->add_option("--dfa-order", st.cfg.analysis.dfa.detrend_order,
                  "DFA detrending polynomial order (default 1)");
  sub->add_option("--dfa-fit-min", st.cfg.analysis.dfa.fit_min_scale,
                  "Smallest scale used in the slope fit");
  sub->add_option("--dfa-fit-max", st.cfg.analysis.dfa.fit_max_scale,
                  "Largest scale used in the slope fit");
  sub->add_option("--dfa-on", st.dfa_on,
                  "Estimate alpha from 'increments' (default) or 'levels'")
      ->check(CLI::IsMember({"increments", "levels"}));
  sub->add_option("--order", st.order, "Build order: temporal | shuffle")
      ->check(CLI::IsMember({"temporal", "shuffle"}));
  sub->add_option("--shuffle-seed", st.cfg.analysis.net.shuffle_seed,
                  "Seed for the shuffled build order");
  sub->add_option("--metric", st.metric,
                  "Distance metric: euclidean | manhattan | chebyshev")
      ->check(CLI::IsMember({"euclidean", "manhattan", "chebyshev"}));
  sub->add_option("--threads", st.cfg.threads,
                  "Worker threads (0 = hardware); results do not depend on it");
}

void add_input_options(CLI::App* sub, CliState& st, bool required) {
  auto* opt = sub->add_option("--input,-i", st.cfg.input_path,
                              "Delimited text file with one record per line");
  if (required) opt->required();
  sub->add_option("--column,-c", st.cfg.load.column,
                  "0-based column to read (default 0)");
  sub->add_option("--header-rows", st.cfg.load.header_rows,
                  "Leading rows to skip");
  sub->add_flag("--log", st.cfg.load.log_transform,
                "Analyze the natural log of the column");
}

void finalize_config(CliState& st) {
  using tsnet::BuildOrder;
  using tsnet::Metric;
  st.cfg.formats = std::set<std::string>(st.formats.begin(), st.formats.end());
  for (const auto& f : st.cfg.formats)
    if (f != "json" && f != "csv")
      throw ParameterError("unknown format '" + f + "'");
  if (!st.label_map_path.empty())
    st.cfg.analysis.label_map = tsnet::load_label_map(st.label_map_path);
  if (st.extended_table && !st.table_path.empty())
    throw ParameterError("--table and --extended-table are exclusive");
  if (st.extended_table)
    st.cfg.analysis.table = tsnet::PatternTable::extended_turbulence();
  else if (!st.table_path.empty())
    st.cfg.analysis.table = tsnet::load_pattern_table(st.table_path);
  st.cfg.analysis.net.order = st.order == "shuffle" ? BuildOrder::SeededShuffle
                                                    : BuildOrder::Temporal;
  st.cfg.analysis.net.metric = st.metric == "manhattan"  ? Metric::Manhattan
                               : st.metric == "chebyshev" ? Metric::Chebyshev
                                                          : Metric::Euclidean;
  st.cfg.analysis.dfa_on_increments = st.dfa_on == "increments";
}

void print_cell_summaries(const tsnet::ExperimentReport& report) {
  const bool scale = report.config.mode == tsnet::RunMode::SweepScale;
  for (const auto& rec : report.cells) {
    std::printf("%s=%g  alpha=%.4f  modal=%s  mean-freq=%s  predicted=%s  "
                "dispersion=%.2f  ok=%d\n",
                scale ? "dt" : "H", rec.cell_value, rec.mean_alpha,
                rec.modal_pattern.c_str(), rec.mean_frequency_pattern.c_str(),
                rec.predicted_pattern.c_str(), rec.dispersion,
                rec.realization_count);
  }
}

int run_analyze(CliState& st) {
  finalize_config(st);
  st.cfg.mode = tsnet::RunMode::Analyze;
  tsnet::LoadedSeries loaded =
      tsnet::load_column_series(st.cfg.input_path, st.cfg.load);
  for (const auto& skip : loaded.skipped)
    std::fprintf(stderr, "warning: skipped line %d: %s\n", skip.line,
                 skip.reason.c_str());
  tsnet::TimeSeries series = st.analyze_dt > 1
                                 ? tsnet::resample(loaded.series, st.analyze_dt)
                                 : loaded.series;
  const tsnet::AnalysisResult result =
      tsnet::analyze_series(series, st.cfg.analysis);
  for (const std::string& path :
       tsnet::emit_analysis(result, st.cfg, series))
    std::printf("wrote %s\n", path.c_str());
  if (!st.export_edges.empty()) {
    tsnet::EmbeddingConfig ec = st.cfg.analysis.embedding;
    ec.delay = result.delay.delay;
    tsnet::write_edge_list(
        tsnet::build_nn_graph(tsnet::embed_series(series, ec),
                              st.cfg.analysis.net),
        st.export_edges);
    std::printf("wrote %s\n", st.export_edges.c_str());
  }
  std::printf("alpha=%.4f  tau=%d%s  n=%d  edges=%zu  pattern=%s  "
              "predicted=%s  agreement=%s\n",
              result.dfa.alpha, result.delay.delay,
              result.delay.minimum_found ? "" : " (fallback)",
              result.node_count, result.edge_count, result.pattern.c_str(),
              result.verdict.predicted_pattern.c_str(),
              result.verdict.agreement ? "yes" : "no");
  return 0;
}

int run_sweep_mode(CliState& st, tsnet::RunMode mode) {
  finalize_config(st);
  st.cfg.mode = mode;
  if (mode == tsnet::RunMode::SweepScale)
    st.cfg.dt_grid = parse_int_grid(st.dt_spec);
  else
    st.cfg.hurst_grid = parse_grid(st.hurst_spec);
  const tsnet::ExperimentReport report = tsnet::run_sweep(st.cfg);
  for (const std::string& path : tsnet::emit_report(report))
    std::printf("wrote %s\n", path.c_str());
  print_cell_summaries(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nearest-neighbor-network motif analysis of scalar time series"};
  app.set_version_flag("--version", tsnet::kVersion);
  app.set_config("--config", "", "Read options from an INI/TOML file");
  app.require_subcommand(1);

  CliState st;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Analyze a single series from a delimited file");
  add_common_options(analyze, st);
  add_input_options(analyze, st, /*required=*/true);
  analyze->add_option("--dt", st.analyze_dt,
                      "Resample the series by this step before analysis");
  analyze->add_option("--export-edges", st.export_edges,
                      "Write the network edge list to this path");

  CLI::App* fbm = app.add_subcommand(
      "sweep-fbm", "Sweep fractional Brownian motions over a Hurst grid");
  add_common_options(fbm, st);
  fbm->add_option("--hurst,-H", st.hurst_spec,
                  "H grid: start:stop:step or comma list");
  fbm->add_option("--realizations,-r", st.cfg.realizations,
                  "Realizations per grid cell (default 10)");

  CLI::App* mrw = app.add_subcommand(
      "sweep-mrw", "Sweep multifractal random walks over a Hurst grid");
  add_common_options(mrw, st);
  mrw->add_option("--hurst,-H", st.hurst_spec,
                  "H grid: start:stop:step or comma list");
  mrw->add_option("--realizations,-r", st.cfg.realizations,
                  "Realizations per grid cell (default 10)");
  mrw->add_option("--intermittency", st.cfg.intermittency,
                  "Log-normal weight variance lambda^2 (default 0.06)");
  mrw->add_option("--corr-length", st.cfg.correlation_length,
                  "Weight correlation length (default: series length)");

  CLI::App* scale = app.add_subcommand(
      "sweep-scale", "Resample a signal over a dt grid and analyze subseries");
  add_common_options(scale, st);
  add_input_options(scale, st, /*required=*/true);
  scale->add_option("--dt-grid", st.dt_spec,
                    "dt grid: start:stop:step or comma list");
  scale->add_option("--realizations,-r", st.cfg.realizations,
                    "Random subseries per dt (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // bad flags are parameter errors
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(st);
    if (app.got_subcommand(fbm))
      return run_sweep_mode(st, tsnet::RunMode::SweepFbm);
    if (app.got_subcommand(mrw))
      return run_sweep_mode(st, tsnet::RunMode::SweepMrw);
    return run_sweep_mode(st, tsnet::RunMode::SweepScale);
  } catch (const tsnet::ParameterError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 1;
  } catch (const tsnet::DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
