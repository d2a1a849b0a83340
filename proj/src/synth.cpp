#include "tsnet/synth.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "tsnet/errors.hpp"
#include "tsnet/rng.hpp"

namespace tsnet {

namespace {

Eigen::Index next_pow2(Eigen::Index n) {
  Eigen::Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::string short_label(const char* kind, double hurst, std::uint64_t seed) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s(H=%g,seed=%llu)", kind, hurst,
                static_cast<unsigned long long>(seed));
  return buf;
}

// Samples n values of a stationary Gaussian sequence with autocovariance
// gamma(lag) by circulant embedding: the covariance is wrapped onto a
// circulant of size m = 2^k >= 2(n-1), diagonalized by FFT, and a spectral
// Gaussian draw is transformed back. Negative eigenvalues (possible for
// covariances that are not exactly embeddable) are clipped to zero and the
// clipped mass recorded.
Eigen::ArrayXd circulant_gaussian(
    const std::function<double(Eigen::Index)>& gamma, Eigen::Index n,
    Rng& rng, SynthDiagnostics* diag) {
  const Eigen::Index m = next_pow2(std::max<Eigen::Index>(2, 2 * (n - 1)));
  std::vector<double> row(static_cast<std::size_t>(m));
  for (Eigen::Index j = 0; j <= m / 2; ++j) row[j] = gamma(j);
  for (Eigen::Index j = m / 2 + 1; j < m; ++j) row[j] = row[m - j];

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> freq;
  fft.fwd(freq, row);

  std::vector<double> eig(static_cast<std::size_t>(m));
  double min_eig = std::numeric_limits<double>::infinity();
  double clipped = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    double v = freq[k].real();
    min_eig = std::min(min_eig, v);
    if (v < 0.0) {
      clipped += -v;
      v = 0.0;
    }
    eig[k] = v;
  }
  if (diag) {
    diag->min_eigenvalue = min_eig;
    diag->clipped_mass = clipped;
  }

  // Hermitian-symmetric spectral draw; fixed order: k=0, pairs 1..m/2-1, m/2.
  std::vector<std::complex<double>> xi(static_cast<std::size_t>(m));
  xi[0] = std::sqrt(eig[0]) * rng.gaussian();
  for (Eigen::Index k = 1; k < m / 2; ++k) {
    const double a = rng.gaussian();
    const double b = rng.gaussian();
    const double s = std::sqrt(eig[k] / 2.0);
    xi[k] = std::complex<double>(s * a, s * b);
    xi[m - k] = std::conj(xi[k]);
  }
  xi[m / 2] = std::sqrt(eig[m / 2]) * rng.gaussian();

  std::vector<std::complex<double>> out;
  fft.fwd(out, xi);

  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Eigen::ArrayXd result(n);
  for (Eigen::Index i = 0; i < n; ++i) result[i] = out[i].real() * scale;
  return result;
}

void validate_fbm_spec(const FbmSpec& spec) {
  if (!(spec.hurst > 0.0 && spec.hurst < 1.0))
    throw ParameterError("synth: hurst must lie in (0, 1)");
  if (spec.length < 2) throw ParameterError("synth: length must be >= 2");
}

}  // namespace

double fgn_autocovariance(double hurst, Eigen::Index lag) {
  if (lag == 0) return 1.0;
  const double k = static_cast<double>(lag < 0 ? -lag : lag);
  const double h2 = 2.0 * hurst;
  return 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) +
                std::pow(k - 1.0, h2));
}

TimeSeries generate_fgn(const FbmSpec& spec, SynthDiagnostics* diag) {
  validate_fbm_spec(spec);
  Rng rng(spec.seed);
  const double h = spec.hurst;
  TimeSeries out;
  out.values = circulant_gaussian(
      [h](Eigen::Index lag) { return fgn_autocovariance(h, lag); },
      spec.length, rng, diag);
  out.label = short_label("fgn", spec.hurst, spec.seed);
  return out;
}

TimeSeries generate_fbm(const FbmSpec& spec, SynthDiagnostics* diag) {
  TimeSeries out = generate_fgn(spec, diag);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    acc += out.values[i];
    out.values[i] = acc;
  }
  out.label = short_label("fbm", spec.hurst, spec.seed);
  return out;
}

TimeSeries generate_mrw(const MrwSpec& spec, SynthDiagnostics* diag) {
  if (!(spec.hurst > 0.0 && spec.hurst < 1.0))
    throw ParameterError("synth: hurst must lie in (0, 1)");
  if (spec.length < 2) throw ParameterError("synth: length must be >= 2");
  if (spec.intermittency < 0.0)
    throw ParameterError("synth: intermittency must be >= 0");
  const Eigen::Index corr =
      spec.correlation_length == 0 ? spec.length : spec.correlation_length;
  if (corr < 1) throw ParameterError("synth: correlation_length must be >= 1");
  if (corr > spec.length)
    throw ParameterError("synth: correlation_length must be <= length");

  FbmSpec noise{spec.hurst, spec.length, derive_stream(spec.seed, 0)};
  Eigen::ArrayXd eps = generate_fgn(noise).values;

  Eigen::ArrayXd incr;
  if (spec.intermittency > 0.0) {
    Rng omega_rng(derive_stream(spec.seed, 1));
    const double lam2 = spec.intermittency;
    const double big_l = static_cast<double>(corr);
    Eigen::ArrayXd omega = circulant_gaussian(
        [lam2, big_l](Eigen::Index lag) {
          const double v = lam2 * std::log(big_l / (static_cast<double>(lag) + 1.0));
          return v > 0.0 ? v : 0.0;
        },
        spec.length, omega_rng, diag);
    incr = eps * omega.exp();
  } else {
    incr = eps;
  }

  TimeSeries out;
  out.values.resize(spec.length);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < spec.length; ++i) {
    acc += incr[i];
    out.values[i] = acc;
  }
  out.label = short_label("mrw", spec.hurst, spec.seed);
  return out;
}

}  // namespace tsnet
