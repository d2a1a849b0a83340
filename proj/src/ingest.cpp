#include "tsnet/ingest.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "tsnet/errors.hpp"
#include "tsnet/rng.hpp"

namespace tsnet {

namespace {

bool is_delim(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r';
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_delim(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_delim(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

LoadedSeries load_column_series(const std::string& path,
                                const LoadOptions& options) {
  if (options.column < 0) throw ParameterError("ingest: column must be >= 0");
  if (options.header_rows < 0)
    throw ParameterError("ingest: header rows must be >= 0");
  std::ifstream in(path);
  if (!in) throw DataError("ingest: cannot open " + path);

  LoadedSeries out;
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  int skipped_headers = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skipped_headers < options.header_rows) {
      ++skipped_headers;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.empty()) continue;  // blank line, not a record
    if (static_cast<int>(fields.size()) <= options.column)
      throw DataError("ingest: line " + std::to_string(line_no) + " of " +
                      path + " has " + std::to_string(fields.size()) +
                      " fields, need column " + std::to_string(options.column));
    const std::string_view field = fields[options.column];
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      out.skipped.push_back({line_no, "unparseable field '" +
                                          std::string(field) + "'"});
      continue;
    }
    if (!std::isfinite(value)) {
      out.skipped.push_back({line_no, "non-finite value"});
      continue;
    }
    if (options.log_transform && !(value > 0.0))
      throw DataError("ingest: line " + std::to_string(line_no) +
                      ": log transform requires positive values");
    values.push_back(options.log_transform ? std::log(value) : value);
  }
  if (values.size() < 2)
    throw DataError("ingest: " + path + " has fewer than 2 valid rows");

  out.series.values =
      Eigen::Map<const Eigen::ArrayXd>(values.data(), values.size());
  out.series.label = path;
  out.series.scale = 1;
  return out;
}

void write_series(const TimeSeries& series, const std::string& path) {
  validate_series(series);
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw DataError("ingest: cannot open " + path + " for writing");
  for (Eigen::Index i = 0; i < series.length(); ++i)
    std::fprintf(f, "%.17g\n", series.values[i]);
  if (std::fclose(f) != 0) throw DataError("ingest: write failed for " + path);
}

TimeSeries resample(const TimeSeries& series, int dt) {
  validate_series(series);
  if (dt < 1) throw ParameterError("ingest: resample step must be >= 1");
  const Eigen::Index count = series.length() / dt;
  if (count < 2)
    throw ParameterError("ingest: resample step too large for series");
  TimeSeries out;
  out.values.resize(count);
  for (Eigen::Index i = 0; i < count; ++i)
    out.values[i] = series.values[i * dt];
  out.label = series.label;
  out.scale = series.scale * dt;
  return out;
}

std::vector<TimeSeries> sample_subseries(const TimeSeries& series,
                                         const SubseriesSpec& spec) {
  validate_series(series);
  if (spec.length < 2)
    throw ParameterError("ingest: subseries length must be >= 2");
  if (spec.count < 1) throw ParameterError("ingest: subseries count must be >= 1");
  if (spec.length > series.length())
    throw ParameterError("ingest: subseries longer than source");

  Rng rng(spec.seed);
  const std::uint64_t span =
      static_cast<std::uint64_t>(series.length() - spec.length) + 1;
  std::vector<TimeSeries> windows;
  windows.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) {
    const Eigen::Index offset = static_cast<Eigen::Index>(rng.below(span));
    TimeSeries w;
    w.values = series.values.segment(offset, spec.length);
    w.label = series.label;
    w.scale = series.scale;
    windows.push_back(std::move(w));
  }
  return windows;
}

}  // namespace tsnet
