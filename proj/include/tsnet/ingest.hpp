#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsnet/series.hpp"

namespace tsnet {

struct LoadOptions {
  int column = 0;
  int header_rows = 0;
  bool log_transform = false;
};

struct SkippedRow {
  int line;  // 1-based
  std::string reason;
};

struct LoadedSeries {
  TimeSeries series;
  std::vector<SkippedRow> skipped;
};

// Reads one numeric column from a comma- or whitespace-delimited text file.
// Rows whose selected field is not a finite number are skipped and reported
// with their line numbers; a row too short to have the column at all is a
// hard data error.
LoadedSeries load_column_series(const std::string& path,
                                const LoadOptions& options = {});

// One decimal value per line, full round-trip precision.
void write_series(const TimeSeries& series, const std::string& path);

// Pure decimation: every dt-th value starting at index 0. The new length is
// floor(length / dt); the scale multiplies by dt.
TimeSeries resample(const TimeSeries& series, int dt);

struct SubseriesSpec {
  Eigen::Index length = 0;
  int count = 1;
  std::uint64_t seed = 0;
};

// Contiguous windows at seeded uniformly random start offsets, drawn with
// replacement. Deterministic in the seed.
std::vector<TimeSeries> sample_subseries(const TimeSeries& series,
                                         const SubseriesSpec& spec);

}  // namespace tsnet
