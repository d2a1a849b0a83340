#pragma once

#include <Eigen/Core>
#include <string>

#include "tsnet/errors.hpp"

namespace tsnet {

// A finite scalar signal with provenance metadata. `scale` is the sampling
// step relative to the native resolution of the source (grows under
// resampling).
struct TimeSeries {
  Eigen::ArrayXd values;
  std::string label;
  int scale = 1;

  Eigen::Index length() const { return values.size(); }
};

inline void validate_series(const TimeSeries& s) {
  if (s.length() < 2) throw ParameterError("series: length must be >= 2");
  if (s.scale < 1) throw ParameterError("series: scale must be >= 1");
  if (!s.values.allFinite()) throw DataError("series: non-finite values");
}

// First differences; length shrinks by one.
inline TimeSeries increments(const TimeSeries& s) {
  validate_series(s);
  TimeSeries out;
  out.values = s.values.tail(s.length() - 1) - s.values.head(s.length() - 1);
  out.label = s.label;
  out.scale = s.scale;
  return out;
}

}  // namespace tsnet
