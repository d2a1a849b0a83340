#include "tsnet/pipeline.hpp"

#include <string>
#include <utility>

#include "tsnet/errors.hpp"

namespace tsnet {

namespace {

// Re-throws module errors with the pipeline stage prepended, preserving the
// error class (and therefore the CLI exit code).
template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const ParameterError& e) {
    throw ParameterError(std::string(name) + ": " + e.what());
  } catch (const DegenerateInputError& e) {
    throw DegenerateInputError(std::string(name) + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

AnalysisResult analyze_series(const TimeSeries& series,
                              const AnalysisConfig& config) {
  validate_series(series);
  config.label_map.validate();
  config.table.validate();

  AnalysisResult result;

  const int max_lag =
      std::min<int>(config.max_lag, static_cast<int>(series.length()) - 2);
  if (max_lag < 2) throw ParameterError("delay: series too short for MI sweep");
  result.mi = stage("delay", [&] {
    return mi_profile(series, max_lag, config.mi_bins, 0);
  });
  // A profile with no interior minimum is still decaying at the window edge
  // (walk-like series); the edge is then the least-biased delay available.
  const int fallback =
      config.delay_fallback > 0 ? config.delay_fallback : max_lag;
  result.delay = first_min_delay(result.mi, fallback);

  EmbeddingConfig embedding = config.embedding;
  embedding.delay = result.delay.delay;
  // DFA runs before the network stages: it is cheap and rejects degenerate
  // (zero-variance) input before any graph work starts.
  result.dfa = stage("dfa", [&] {
    return config.dfa_on_increments ? dfa_alpha(increments(series), config.dfa)
                                    : dfa_alpha(series, config.dfa);
  });

  const EmbeddedSeries embedded =
      stage("embed", [&] { return embed_series(series, embedding); });

  const NNGraph graph =
      stage("netbuild", [&] { return build_nn_graph(embedded, config.net); });
  result.node_count = graph.node_count;
  result.edge_count = graph.edges.size();

  result.counts = stage("census", [&] { return motif_census(graph); });
  result.frequencies = stage("census", [&] { return result.counts.relative(); });
  result.pattern = rank_pattern(result.counts, config.label_map);

  result.verdict.measured_alpha = result.dfa.alpha;
  result.verdict.empirical_pattern = result.pattern;
  result.verdict.predicted_pattern =
      pattern_for_alpha(result.dfa.alpha, config.table);
  result.verdict.agreement =
      result.verdict.empirical_pattern == result.verdict.predicted_pattern;
  result.verdict.realization_count = 1;
  return result;
}

}  // namespace tsnet
