#pragma once

#include <utility>
#include <vector>

#include "tsnet/series.hpp"

namespace tsnet {

// Detrended fluctuation analysis. Defaults: DFA-1, scales log-spaced from 8
// to length/8 with ~20 points, slope fit over the full grid. Forward and
// backward box partitions are both used so no tail samples are discarded.
struct DfaConfig {
  int min_scale = 8;
  int max_scale = 0;    // 0 -> length / 8
  int num_scales = 20;
  int detrend_order = 1;
  int fit_min_scale = 0;  // 0 -> smallest scale on the grid
  int fit_max_scale = 0;  // 0 -> largest scale on the grid
};

struct DfaResult {
  double alpha = 0.0;
  std::vector<int> scales;
  std::vector<double> fluctuations;
  std::pair<int, int> fit_range{0, 0};  // min/max scale used in the fit
};

DfaResult dfa_alpha(const TimeSeries& series, const DfaConfig& config = {});

struct MiProfile {
  std::vector<int> lags;
  std::vector<double> mi;  // nats
};

struct MiEstimate {
  double value = 0.0;  // clamped at zero
  double raw = 0.0;    // pre-clamp estimate
  bool degenerate = false;
};

// Mutual information (nats) between x_t and x_{t+lag} on an equiprobable
// binning of the marginal. Bin edges derive from the full-series marginal,
// which makes the estimate exactly symmetric under series reversal.
MiEstimate mutual_information(const TimeSeries& series, int lag, int bins = 32);

MiProfile mi_profile(const TimeSeries& series, int max_lag, int bins = 32,
                     int min_lag = 0);

struct DelayResult {
  int delay = 1;
  bool minimum_found = false;
};

// First interior local minimum of the MI profile: smallest lag k with
// mi[k] < mi[k-1] and mi[k] <= mi[k+1]. Equal neighbours break toward the
// smaller lag. Without any local minimum the configured fallback is
// returned and flagged.
DelayResult first_min_delay(const MiProfile& profile, int fallback = 1);

}  // namespace tsnet
