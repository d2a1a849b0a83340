#include "tsnet/embed.hpp"

#include "tsnet/errors.hpp"

namespace tsnet {

EmbeddedSeries embed_series(const TimeSeries& series,
                            const EmbeddingConfig& config) {
  validate_series(series);
  if (config.dimension < 1)
    throw ParameterError("embed: dimension must be >= 1");
  if (config.delay < 1) throw ParameterError("embed: delay must be >= 1");

  const Eigen::Index len = series.length();
  const Eigen::Index span =
      static_cast<Eigen::Index>(config.dimension) * config.delay;
  if (len <= span)
    throw ParameterError("embed: series shorter than dimension * delay");

  // n = length - d*tau vectors; the trailing tau candidates are dropped so
  // node counts match the nearest-neighbor-network bookkeeping downstream.
  const Eigen::Index n = len - span;
  EmbeddedSeries out;
  out.source_length = len;
  out.points.resize(n, config.dimension);
  for (int k = 0; k < config.dimension; ++k)
    out.points.col(k) =
        series.values.segment(static_cast<Eigen::Index>(k) * config.delay, n);
  return out;
}

}  // namespace tsnet
