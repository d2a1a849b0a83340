#include "tsnet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "tsnet/errors.hpp"
#include "tsnet/parallel.hpp"
#include "tsnet/rng.hpp"
#include "tsnet/synth.hpp"
#include "tsnet/version.hpp"

namespace tsnet {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::Euclidean: return "euclidean";
    case Metric::Manhattan: return "manhattan";
    case Metric::Chebyshev: return "chebyshev";
  }
  return "euclidean";
}

const char* order_name(BuildOrder o) {
  return o == BuildOrder::Temporal ? "temporal" : "shuffle";
}

json label_map_json(const MotifLabelMap& map) {
  json obj = json::object();
  for (char l = 'A'; l <= 'F'; ++l)
    obj[std::string(1, l)] = shape_name(map.shape(l));
  return obj;
}

json table_json(const PatternTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r;
    if (std::isfinite(row.alpha_upper))
      r["alpha_upper"] = row.alpha_upper;
    else
      r["alpha_upper"] = nullptr;
    r["pattern"] = row.pattern;
    rows.push_back(r);
  }
  return rows;
}

// Configuration echo; deliberately excludes output_dir and threads, which do
// not influence the numbers.
json config_json(const RunConfig& cfg) {
  json c;
  c["mode"] = run_mode_name(cfg.mode);
  c["length"] = cfg.length;
  c["realizations"] = cfg.realizations;
  c["master_seed"] = cfg.master_seed;
  c["dimension"] = cfg.analysis.embedding.dimension;
  c["max_lag"] = cfg.analysis.max_lag;
  c["mi_bins"] = cfg.analysis.mi_bins;
  c["dfa"] = {{"min_scale", cfg.analysis.dfa.min_scale},
              {"max_scale", cfg.analysis.dfa.max_scale},
              {"num_scales", cfg.analysis.dfa.num_scales},
              {"detrend_order", cfg.analysis.dfa.detrend_order},
              {"fit_min_scale", cfg.analysis.dfa.fit_min_scale},
              {"fit_max_scale", cfg.analysis.dfa.fit_max_scale}};
  c["dfa_on_increments"] = cfg.analysis.dfa_on_increments;
  c["metric"] = metric_name(cfg.analysis.net.metric);
  c["order"] = order_name(cfg.analysis.net.order);
  c["shuffle_seed"] = cfg.analysis.net.shuffle_seed;
  c["label_map"] = label_map_json(cfg.analysis.label_map);
  c["pattern_table"] = table_json(cfg.analysis.table);
  if (cfg.mode == RunMode::SweepFbm || cfg.mode == RunMode::SweepMrw)
    c["hurst_grid"] = cfg.hurst_grid;
  if (cfg.mode == RunMode::SweepMrw) {
    c["intermittency"] = cfg.intermittency;
    c["correlation_length"] =
        cfg.correlation_length == 0 ? cfg.length : cfg.correlation_length;
  }
  if (cfg.mode == RunMode::SweepScale || cfg.mode == RunMode::Analyze) {
    c["input"] = cfg.input_path;
    c["column"] = cfg.load.column;
    c["header_rows"] = cfg.load.header_rows;
    c["log_transform"] = cfg.load.log_transform;
  }
  if (cfg.mode == RunMode::SweepScale) c["dt_grid"] = cfg.dt_grid;
  return c;
}

json frequencies_json(const std::array<double, kMotifShapeCount>& by_shape,
                      const MotifLabelMap& map) {
  json obj = json::object();
  for (char l = 'A'; l <= 'F'; ++l)
    obj[std::string(1, l)] = by_shape[static_cast<int>(map.shape(l))];
  return obj;
}

json cell_json(const CellRecord& rec, const MotifLabelMap& map) {
  json c;
  c["cell_index"] = rec.cell_index;
  c["cell_value"] = rec.cell_value;
  c["source_length"] = rec.source_length;
  c["realization_count"] = rec.realization_count;
  c["mean_alpha"] = rec.mean_alpha;
  c["mean_frequencies"] = frequencies_json(rec.mean_frequencies, map);
  c["modal_pattern"] = rec.modal_pattern;
  c["mean_frequency_pattern"] = rec.mean_frequency_pattern;
  c["predicted_pattern"] = rec.predicted_pattern;
  c["agreement"] = rec.agreement;
  c["dispersion"] = rec.dispersion;
  c["delay_fallbacks"] = rec.delay_fallbacks;
  c["alphas"] = rec.alphas;
  c["delays"] = rec.delays;
  c["patterns"] = rec.patterns;
  c["node_counts"] = rec.node_counts;
  c["edge_counts"] = rec.edge_counts;
  json fails = json::array();
  for (const auto& f : rec.failures)
    fails.push_back({{"realization", f.realization}, {"error", f.error}});
  c["failures"] = fails;
  return c;
}

std::string cell_label(const RunConfig& cfg, double value) {
  char buf[48];
  if (cfg.mode == RunMode::SweepScale)
    std::snprintf(buf, sizeof(buf), "dt=%d", static_cast<int>(value));
  else
    std::snprintf(buf, sizeof(buf), "H=%g", value);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("report: cannot open " + path + " for writing");
  out << content;
  if (!out) throw DataError("report: write failed for " + path);
}

}  // namespace

const char* run_mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Analyze: return "analyze";
    case RunMode::SweepFbm: return "sweep-fbm";
    case RunMode::SweepMrw: return "sweep-mrw";
    case RunMode::SweepScale: return "sweep-scale";
  }
  return "analyze";
}

ExperimentReport run_sweep(const RunConfig& cfg) {
  if (cfg.mode == RunMode::Analyze)
    throw ParameterError("sweep: analyze mode takes a single series");
  if (cfg.realizations < 1)
    throw ParameterError("sweep: realizations must be >= 1");
  cfg.analysis.label_map.validate();
  cfg.analysis.table.validate();

  const bool scale_sweep = cfg.mode == RunMode::SweepScale;
  if (scale_sweep) {
    if (cfg.dt_grid.empty()) throw ParameterError("sweep: empty dt grid");
    for (int dt : cfg.dt_grid)
      if (dt < 1) throw ParameterError("sweep: dt values must be >= 1");
  } else {
    if (cfg.hurst_grid.empty()) throw ParameterError("sweep: empty H grid");
    for (double h : cfg.hurst_grid)
      if (!(h > 0.0 && h < 1.0))
        throw ParameterError("sweep: hurst values must lie in (0, 1)");
  }
  if (cfg.length < 2) throw ParameterError("sweep: length must be >= 2");
  if (cfg.mode == RunMode::SweepMrw) {
    if (cfg.intermittency < 0.0)
      throw ParameterError("sweep: intermittency must be >= 0");
    if (cfg.correlation_length != 0 &&
        (cfg.correlation_length < 1 || cfg.correlation_length > cfg.length))
      throw ParameterError("sweep: correlation length must lie in [1, length]");
  }

  TimeSeries base;
  if (scale_sweep) base = load_column_series(cfg.input_path, cfg.load).series;

  ExperimentReport report;
  report.config = cfg;
  report.version = kVersion;

  const int cells =
      scale_sweep ? static_cast<int>(cfg.dt_grid.size())
                  : static_cast<int>(cfg.hurst_grid.size());
  for (int ci = 0; ci < cells; ++ci) {
    CellRecord rec;
    rec.cell_index = ci;
    rec.cell_value = scale_sweep ? static_cast<double>(cfg.dt_grid[ci])
                                 : cfg.hurst_grid[ci];
    const std::uint64_t cell_seed = derive_stream(cfg.master_seed, ci);

    std::vector<TimeSeries> windows;
    if (scale_sweep) {
      TimeSeries resampled;
      try {
        resampled = resample(base, cfg.dt_grid[ci]);
        windows = sample_subseries(
            resampled, {cfg.length, cfg.realizations, cell_seed});
      } catch (const Error& e) {
        throw DataError("sweep cell " + cell_label(cfg, rec.cell_value) +
                        ": " + e.what());
      }
      rec.source_length = resampled.length();
    } else {
      rec.source_length = cfg.length;
    }

    std::vector<std::optional<AnalysisResult>> slots(cfg.realizations);
    std::vector<std::string> errors(cfg.realizations);
    parallel_for_index(cfg.realizations, cfg.threads, [&](int ri) {
      try {
        TimeSeries series;
        if (cfg.mode == RunMode::SweepFbm) {
          series = generate_fbm(
              {cfg.hurst_grid[ci], cfg.length, derive_stream(cell_seed, ri)});
        } else if (cfg.mode == RunMode::SweepMrw) {
          MrwSpec spec;
          spec.hurst = cfg.hurst_grid[ci];
          spec.intermittency = cfg.intermittency;
          spec.correlation_length =
              cfg.correlation_length == 0 ? cfg.length : cfg.correlation_length;
          spec.length = cfg.length;
          spec.seed = derive_stream(cell_seed, ri);
          series = generate_mrw(spec);
        } else {
          series = windows[ri];
        }
        slots[ri] = analyze_series(series, cfg.analysis);
      } catch (const std::exception& e) {
        errors[ri] = e.what();
      }
    });

    std::vector<RankPattern> patterns;
    std::vector<MotifCounts> counts;
    double alpha_sum = 0.0;
    for (int ri = 0; ri < cfg.realizations; ++ri) {
      if (!slots[ri]) {
        rec.failures.push_back({ri, errors[ri]});
        continue;
      }
      const AnalysisResult& r = *slots[ri];
      patterns.push_back(r.pattern);
      counts.push_back(r.counts);
      alpha_sum += r.dfa.alpha;
      rec.alphas.push_back(r.dfa.alpha);
      rec.delays.push_back(r.delay.delay);
      if (!r.delay.minimum_found) ++rec.delay_fallbacks;
      rec.patterns.push_back(r.pattern);
      rec.node_counts.push_back(r.node_count);
      rec.edge_counts.push_back(r.edge_count);
    }
    if (patterns.empty())
      throw DataError("sweep cell " + cell_label(cfg, rec.cell_value) +
                      ": all realizations failed: " + errors.front());

    rec.realization_count = static_cast<int>(patterns.size());
    rec.mean_alpha = alpha_sum / rec.realization_count;
    const PatternAggregate agg =
        aggregate_patterns(patterns, counts, cfg.analysis.label_map);
    rec.mean_frequencies = agg.mean_frequencies;
    rec.modal_pattern = agg.modal_pattern;
    rec.mean_frequency_pattern = agg.mean_frequency_pattern;
    rec.dispersion = agg.dispersion;
    rec.predicted_pattern = pattern_for_alpha(rec.mean_alpha, cfg.analysis.table);
    rec.agreement = rec.modal_pattern == rec.predicted_pattern;
    report.cells.push_back(std::move(rec));
  }
  return report;
}

std::string report_to_json(const ExperimentReport& report) {
  json doc;
  doc["version"] = report.version;
  doc["config"] = config_json(report.config);
  json cells = json::array();
  for (const auto& rec : report.cells)
    cells.push_back(cell_json(rec, report.config.analysis.label_map));
  doc["cells"] = cells;
  return doc.dump(2) + "\n";
}

std::vector<std::string> emit_report(const ExperimentReport& report) {
  namespace fs = std::filesystem;
  const RunConfig& cfg = report.config;
  fs::create_directories(cfg.output_dir);
  std::vector<std::string> written;

  if (cfg.formats.count("json")) {
    const std::string path = (fs::path(cfg.output_dir) / "report.json").string();
    write_text_file(path, report_to_json(report));
    written.push_back(path);
  }
  if (cfg.formats.count("csv")) {
    const MotifLabelMap& map = cfg.analysis.label_map;
    std::string freq =
        "cell_index,cell_value,motif_label,shape,mean_frequency\n";
    for (const auto& rec : report.cells) {
      for (char l = 'A'; l <= 'F'; ++l) {
        const MotifShape s = map.shape(l);
        freq += std::to_string(rec.cell_index) + "," +
                fmt_double(rec.cell_value) + "," + l + "," + shape_name(s) +
                "," + fmt_double(rec.mean_frequencies[static_cast<int>(s)]) +
                "\n";
      }
    }
    const std::string freq_path =
        (fs::path(cfg.output_dir) / "motif_frequencies.csv").string();
    write_text_file(freq_path, freq);
    written.push_back(freq_path);

    std::string pat =
        "cell_index,cell_value,realizations,mean_alpha,modal_pattern,"
        "mean_frequency_pattern,predicted_pattern,dispersion,agreement\n";
    for (const auto& rec : report.cells) {
      pat += std::to_string(rec.cell_index) + "," + fmt_double(rec.cell_value) +
             "," + std::to_string(rec.realization_count) + "," +
             fmt_double(rec.mean_alpha) + "," + rec.modal_pattern + "," +
             rec.mean_frequency_pattern + "," + rec.predicted_pattern + "," +
             fmt_double(rec.dispersion) + "," +
             (rec.agreement ? "true" : "false") + "\n";
    }
    const std::string pat_path =
        (fs::path(cfg.output_dir) / "patterns.csv").string();
    write_text_file(pat_path, pat);
    written.push_back(pat_path);
  }
  return written;
}

std::vector<std::string> emit_analysis(const AnalysisResult& result,
                                       const RunConfig& cfg,
                                       const TimeSeries& series) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  const MotifLabelMap& map = cfg.analysis.label_map;
  std::vector<std::string> written;

  if (cfg.formats.count("json")) {
    json doc;
    doc["version"] = kVersion;
    doc["config"] = config_json(cfg);
    doc["input"] = {{"label", series.label},
                    {"length", series.length()},
                    {"scale", series.scale}};
    doc["delay"] = {{"value", result.delay.delay},
                    {"minimum_found", result.delay.minimum_found}};
    doc["mi"] = {{"lags", result.mi.lags}, {"values", result.mi.mi}};
    doc["graph"] = {{"node_count", result.node_count},
                    {"edge_count", result.edge_count}};
    doc["dfa"] = {{"alpha", result.dfa.alpha},
                  {"scales", result.dfa.scales},
                  {"fluctuations", result.dfa.fluctuations},
                  {"fit_range",
                   {result.dfa.fit_range.first, result.dfa.fit_range.second}}};
    json counts = json::object();
    for (char l = 'A'; l <= 'F'; ++l)
      counts[std::string(1, l)] =
          result.counts.by_shape[static_cast<int>(map.shape(l))];
    doc["counts"] = counts;
    doc["frequencies"] = frequencies_json(result.frequencies, map);
    doc["pattern"] = result.pattern;
    doc["verdict"] = {{"measured_alpha", result.verdict.measured_alpha},
                      {"empirical_pattern", result.verdict.empirical_pattern},
                      {"predicted_pattern", result.verdict.predicted_pattern},
                      {"agreement", result.verdict.agreement},
                      {"realization_count", result.verdict.realization_count}};
    const std::string path =
        (fs::path(cfg.output_dir) / "analysis.json").string();
    write_text_file(path, doc.dump(2) + "\n");
    written.push_back(path);
  }
  if (cfg.formats.count("csv")) {
    std::string fl = "scale,fluctuation\n";
    for (std::size_t i = 0; i < result.dfa.scales.size(); ++i)
      fl += std::to_string(result.dfa.scales[i]) + "," +
            fmt_double(result.dfa.fluctuations[i]) + "\n";
    const std::string fl_path =
        (fs::path(cfg.output_dir) / "fluctuations.csv").string();
    write_text_file(fl_path, fl);
    written.push_back(fl_path);

    std::string freq = "motif_label,shape,count,frequency\n";
    for (char l = 'A'; l <= 'F'; ++l) {
      const MotifShape s = map.shape(l);
      freq += std::string(1, l) + "," + shape_name(s) + "," +
              std::to_string(result.counts.by_shape[static_cast<int>(s)]) +
              "," + fmt_double(result.frequencies[static_cast<int>(s)]) + "\n";
    }
    const std::string freq_path =
        (fs::path(cfg.output_dir) / "motif_frequencies.csv").string();
    write_text_file(freq_path, freq);
    written.push_back(freq_path);
  }
  return written;
}

}  // namespace tsnet
