#pragma once

#include <array>
#include <string>
#include <vector>

#include "tsnet/census.hpp"

namespace tsnet {

// Alpha-keyed lookup of the expected motif rank pattern. Rows are ordered by
// strictly increasing upper bound; the final row is unbounded.
struct PatternTable {
  struct Row {
    double alpha_upper;   // +inf on the last row
    RankPattern pattern;
  };
  std::vector<Row> rows;

  static PatternTable defaults();
  // Adds the marginal turbulence-only pattern ABCDFE in a narrow band next
  // to the ABCDEF/ACBDFE boundary.
  static PatternTable extended_turbulence();
  void validate() const;
};

PatternTable load_pattern_table(const std::string& path);

// Pattern of the first row whose upper bound exceeds alpha.
RankPattern pattern_for_alpha(double alpha, const PatternTable& table);

struct SuperfamilyVerdict {
  double measured_alpha = 0.0;
  RankPattern empirical_pattern;
  RankPattern predicted_pattern;
  bool agreement = false;
  int realization_count = 1;
};

struct PatternAggregate {
  RankPattern modal_pattern;            // most frequent; ties lexicographic
  RankPattern mean_frequency_pattern;   // pattern of mean relative frequencies
  double dispersion = 0.0;              // fraction matching the modal pattern
  std::array<double, kMotifShapeCount> mean_frequencies{};  // by shape
};

PatternAggregate aggregate_patterns(const std::vector<RankPattern>& patterns,
                                    const std::vector<MotifCounts>& counts,
                                    const MotifLabelMap& map);

}  // namespace tsnet
