#pragma once

#include <array>
#include <cstddef>

#include "tsnet/census.hpp"
#include "tsnet/embed.hpp"
#include "tsnet/netbuild.hpp"
#include "tsnet/scaling.hpp"
#include "tsnet/superfamily.hpp"

namespace tsnet {

struct AnalysisConfig {
  EmbeddingConfig embedding;       // delay is re-estimated per series
  int max_lag = 100;               // MI lag sweep bound for delay selection
  int delay_fallback = 0;          // no-minimum fallback; 0 -> largest lag
  int mi_bins = 32;
  DfaConfig dfa;
  bool dfa_on_increments = true;   // estimate alpha from first differences
  NetBuildConfig net;
  MotifLabelMap label_map = MotifLabelMap::defaults();
  PatternTable table = PatternTable::defaults();
};

struct AnalysisResult {
  MiProfile mi;
  DelayResult delay;
  int node_count = 0;
  std::size_t edge_count = 0;
  MotifCounts counts;
  std::array<double, kMotifShapeCount> frequencies{};
  RankPattern pattern;
  DfaResult dfa;
  SuperfamilyVerdict verdict;
};

// Full single-series pipeline: delay estimation -> embedding -> graph ->
// census -> pattern -> DFA -> verdict. Module errors propagate with stage
// labels prefixed.
AnalysisResult analyze_series(const TimeSeries& series,
                              const AnalysisConfig& config);

}  // namespace tsnet
