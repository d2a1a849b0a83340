#pragma once

#include <Eigen/Core>

#include "tsnet/series.hpp"

namespace tsnet {

struct EmbeddingConfig {
  int dimension = 10;
  int delay = 1;
};

using PointMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Delay vectors of a series: row i is (x_i, x_{i+tau}, ..., x_{i+(d-1)tau}).
// Exactly length - d*tau rows are produced.
struct EmbeddedSeries {
  PointMatrix points;
  Eigen::Index source_length = 0;
};

EmbeddedSeries embed_series(const TimeSeries& series,
                            const EmbeddingConfig& config);

}  // namespace tsnet
