#include "tsnet/scaling.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "tsnet/errors.hpp"

namespace tsnet {

namespace {

std::vector<int> log_spaced_scales(int min_scale, int max_scale, int count) {
  std::vector<int> scales;
  const double lo = std::log(static_cast<double>(min_scale));
  const double hi = std::log(static_cast<double>(max_scale));
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const int s = static_cast<int>(std::lround(std::exp(lo + t * (hi - lo))));
    if (scales.empty() || s > scales.back()) scales.push_back(s);
  }
  return scales;
}

// Residual sum of squares of a least-squares polynomial fit over one box.
double box_rss(const Eigen::ArrayXd& profile, Eigen::Index start, int len,
               int order) {
  if (order == 1) {
    // Closed form with centered abscissa.
    const double tc = (len - 1) / 2.0;
    double sy = 0.0, sty = 0.0, stt = 0.0;
    for (int i = 0; i < len; ++i) {
      const double t = i - tc;
      const double y = profile[start + i];
      sy += y;
      sty += t * y;
      stt += t * t;
    }
    const double mean = sy / len;
    const double slope = sty / stt;
    double rss = 0.0;
    for (int i = 0; i < len; ++i) {
      const double r = profile[start + i] - mean - slope * (i - tc);
      rss += r * r;
    }
    return rss;
  }
  // General order: Vandermonde least squares on abscissa normalized to [-1,1].
  Eigen::MatrixXd design(len, order + 1);
  Eigen::VectorXd y(len);
  for (int i = 0; i < len; ++i) {
    const double u = len == 1 ? 0.0 : 2.0 * i / (len - 1) - 1.0;
    double p = 1.0;
    for (int c = 0; c <= order; ++c) {
      design(i, c) = p;
      p *= u;
    }
    y[i] = profile[start + i];
  }
  Eigen::VectorXd coef = design.colPivHouseholderQr().solve(y);
  return (y - design * coef).squaredNorm();
}

}  // namespace

DfaResult dfa_alpha(const TimeSeries& series, const DfaConfig& config) {
  validate_series(series);
  if (config.detrend_order < 1)
    throw ParameterError("dfa: detrend order must be >= 1");
  if (config.num_scales < 2)
    throw ParameterError("dfa: need at least 2 scale points");

  const Eigen::ArrayXd& x = series.values;
  const Eigen::Index n = x.size();

  const double mean = x.mean();
  if (!((x - mean).abs().maxCoeff() > 0.0))
    throw DegenerateInputError("dfa: zero-variance series");

  int min_scale = std::max(config.min_scale, config.detrend_order + 2);
  int max_scale =
      config.max_scale > 0 ? config.max_scale : static_cast<int>(n / 8);
  if (n < 4 * static_cast<Eigen::Index>(max_scale))
    throw ParameterError("dfa: series too short for scale grid");
  if (max_scale <= min_scale)
    throw ParameterError("dfa: scale grid is empty");

  Eigen::ArrayXd profile(n);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    acc += x[i] - mean;
    profile[i] = acc;
  }

  DfaResult result;
  result.scales = log_spaced_scales(min_scale, max_scale, config.num_scales);
  result.fluctuations.reserve(result.scales.size());
  for (int s : result.scales) {
    const Eigen::Index boxes = n / s;
    double rss = 0.0;
    for (Eigen::Index b = 0; b < boxes; ++b)
      rss += box_rss(profile, b * s, s, config.detrend_order);
    for (Eigen::Index b = 0; b < boxes; ++b)
      rss += box_rss(profile, n - (b + 1) * s, s, config.detrend_order);
    const double f = std::sqrt(rss / (2.0 * static_cast<double>(boxes) * s));
    if (!(f > 0.0))
      throw DegenerateInputError("dfa: vanishing fluctuation function");
    result.fluctuations.push_back(f);
  }

  const int fit_lo =
      config.fit_min_scale > 0 ? config.fit_min_scale : result.scales.front();
  const int fit_hi =
      config.fit_max_scale > 0 ? config.fit_max_scale : result.scales.back();
  if (fit_lo >= fit_hi) throw ParameterError("dfa: empty fit range");

  // Least-squares slope of log F vs log s, abscissa centered for conditioning.
  double sx = 0.0;
  int used = 0;
  for (std::size_t i = 0; i < result.scales.size(); ++i) {
    if (result.scales[i] < fit_lo || result.scales[i] > fit_hi) continue;
    sx += std::log(static_cast<double>(result.scales[i]));
    ++used;
  }
  if (used < 2) throw ParameterError("dfa: fewer than 2 scales in fit range");
  const double xbar = sx / used;
  double sxy = 0.0, sxx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < result.scales.size(); ++i) {
    if (result.scales[i] < fit_lo || result.scales[i] > fit_hi) continue;
    const double lx = std::log(static_cast<double>(result.scales[i])) - xbar;
    const double ly = std::log(result.fluctuations[i]);
    sxy += lx * ly;
    sxx += lx * lx;
    sy += ly;
  }
  result.alpha = sxy / sxx;
  result.fit_range = {fit_lo, fit_hi};
  if (!std::isfinite(result.alpha))
    throw DegenerateInputError("dfa: non-finite scaling exponent");
  return result;
}

namespace {

// Equiprobable bin assignment derived from the full-series marginal: bins are
// the intervals between empirical quantile cutpoints, so a reversed series
// maps to the identical bin sequence.
std::vector<int> quantile_bins(const Eigen::ArrayXd& x, int bins,
                               bool* degenerate) {
  const Eigen::Index n = x.size();
  std::vector<double> sorted(x.data(), x.data() + n);
  std::sort(sorted.begin(), sorted.end());
  *degenerate = !(sorted.back() > sorted.front());

  std::vector<double> cuts;
  cuts.reserve(bins - 1);
  for (int t = 1; t < bins; ++t)
    cuts.push_back(sorted[static_cast<std::size_t>(
        static_cast<long long>(t) * n / bins)]);

  std::vector<int> assigned(n);
  for (Eigen::Index i = 0; i < n; ++i)
    assigned[i] = static_cast<int>(
        std::upper_bound(cuts.begin(), cuts.end(), x[i]) - cuts.begin());
  return assigned;
}

}  // namespace

MiEstimate mutual_information(const TimeSeries& series, int lag, int bins) {
  validate_series(series);
  const Eigen::Index n = series.length();
  if (lag < 0 || lag >= n - 1)
    throw ParameterError("mi: lag out of range");
  if (bins < 2) throw ParameterError("mi: need at least 2 bins");

  bool degenerate = false;
  const std::vector<int> b = quantile_bins(series.values, bins, &degenerate);
  if (degenerate) return {0.0, 0.0, true};

  const Eigen::Index pairs = n - lag;
  std::vector<double> joint(static_cast<std::size_t>(bins) * bins, 0.0);
  std::vector<double> left(bins, 0.0), right(bins, 0.0);
  for (Eigen::Index i = 0; i < pairs; ++i) {
    const int a = b[i];
    const int c = b[i + lag];
    joint[static_cast<std::size_t>(a) * bins + c] += 1.0;
    left[a] += 1.0;
    right[c] += 1.0;
  }
  const double np = static_cast<double>(pairs);
  double raw = 0.0;
  for (int a = 0; a < bins; ++a) {
    for (int c = 0; c < bins; ++c) {
      const double j = joint[static_cast<std::size_t>(a) * bins + c];
      if (j <= 0.0) continue;
      raw += (j / np) * std::log(j * np / (left[a] * right[c]));
    }
  }
  return {raw > 0.0 ? raw : 0.0, raw, false};
}

MiProfile mi_profile(const TimeSeries& series, int max_lag, int bins,
                     int min_lag) {
  if (min_lag < 0 || min_lag > max_lag)
    throw ParameterError("mi: bad lag range");
  MiProfile profile;
  profile.lags.reserve(max_lag - min_lag + 1);
  profile.mi.reserve(max_lag - min_lag + 1);
  for (int lag = min_lag; lag <= max_lag; ++lag) {
    profile.lags.push_back(lag);
    profile.mi.push_back(mutual_information(series, lag, bins).value);
  }
  return profile;
}

DelayResult first_min_delay(const MiProfile& profile, int fallback) {
  if (profile.lags.size() != profile.mi.size())
    throw ParameterError("delay: malformed MI profile");
  if (profile.mi.size() < 3)
    throw ParameterError("delay: profile needs at least 3 lags");
  for (std::size_t k = 1; k + 1 < profile.mi.size(); ++k) {
    if (profile.mi[k] < profile.mi[k - 1] && profile.mi[k] <= profile.mi[k + 1])
      return {profile.lags[k], true};
  }
  return {fallback, false};
}

}  // namespace tsnet
