#pragma once

#include <cstdint>

#include "tsnet/series.hpp"

namespace tsnet {

struct FbmSpec {
  double hurst = 0.5;
  Eigen::Index length = 0;
  std::uint64_t seed = 0;
};

struct MrwSpec {
  double hurst = 0.5;
  double intermittency = 0.06;           // lambda^2 of the log-normal weight
  Eigen::Index correlation_length = 0;   // 0 -> defaults to `length`
  Eigen::Index length = 0;
  std::uint64_t seed = 0;
};

// Diagnostics from the circulant-embedding sampler. `clipped_mass` is the
// summed magnitude of negative circulant eigenvalues that were set to zero.
struct SynthDiagnostics {
  double min_eigenvalue = 0.0;
  double clipped_mass = 0.0;
};

// Autocovariance of fractional Gaussian noise with unit variance.
double fgn_autocovariance(double hurst, Eigen::Index lag);

// Stationary fractional Gaussian noise with exact covariance, sampled by
// circulant embedding. Deterministic in spec.seed.
TimeSeries generate_fgn(const FbmSpec& spec, SynthDiagnostics* diag = nullptr);

// Fractional Brownian motion: running sum of generate_fgn; the first value
// equals the first noise increment.
TimeSeries generate_fbm(const FbmSpec& spec, SynthDiagnostics* diag = nullptr);

// Multifractal random walk: increments eps * exp(omega), with eps fractional
// Gaussian noise of exponent `hurst` and omega a Gaussian process with
// covariance intermittency * ln(correlation_length / (lag + 1)) truncated
// at zero. Deterministic in spec.seed.
TimeSeries generate_mrw(const MrwSpec& spec, SynthDiagnostics* diag = nullptr);

}  // namespace tsnet
