#include "tsnet/superfamily.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "tsnet/errors.hpp"

namespace tsnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_pattern(const RankPattern& p) {
  if (p.size() != 6) throw ParameterError("superfamily: pattern must have 6 labels");
  RankPattern sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != "ABCDEF")
    throw ParameterError("superfamily: pattern must permute ABCDEF, got '" + p + "'");
}

}  // namespace

PatternTable PatternTable::defaults() {
  // Switch points sit at the midpoints of the 0.05-spaced gaps between the
  // reported H ranges.
  PatternTable table;
  table.rows = {{0.225, "ABCDEF"},
                {0.325, "ACBDFE"},
                {0.425, "ACDBFE"},
                {kInf, "ACDFBE"}};
  return table;
}

PatternTable PatternTable::extended_turbulence() {
  PatternTable table;
  table.rows = {{0.2125, "ABCDEF"},
                {0.2375, "ABCDFE"},
                {0.325, "ACBDFE"},
                {0.425, "ACDBFE"},
                {kInf, "ACDFBE"}};
  return table;
}

void PatternTable::validate() const {
  if (rows.empty()) throw ParameterError("superfamily: empty pattern table");
  double prev = -kInf;
  for (const Row& row : rows) {
    validate_pattern(row.pattern);
    if (!(row.alpha_upper > prev))
      throw ParameterError("superfamily: table bounds must strictly increase");
    prev = row.alpha_upper;
  }
  if (rows.back().alpha_upper != kInf)
    throw ParameterError("superfamily: final table row must be unbounded");
}

PatternTable load_pattern_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("superfamily: cannot open pattern table " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("superfamily: bad table JSON: " + std::string(e.what()));
  }
  if (!doc.is_array())
    throw DataError("superfamily: pattern table must be a JSON array");
  PatternTable table;
  for (const auto& entry : doc) {
    PatternTable::Row row;
    row.alpha_upper = entry.contains("alpha_upper") && !entry["alpha_upper"].is_null()
                          ? entry.at("alpha_upper").get<double>()
                          : kInf;
    row.pattern = entry.at("pattern").get<std::string>();
    table.rows.push_back(std::move(row));
  }
  table.validate();
  return table;
}

RankPattern pattern_for_alpha(double alpha, const PatternTable& table) {
  if (!std::isfinite(alpha))
    throw ParameterError("superfamily: alpha must be finite");
  table.validate();
  for (const auto& row : table.rows)
    if (row.alpha_upper > alpha) return row.pattern;
  return table.rows.back().pattern;  // unreachable: last row is unbounded
}

PatternAggregate aggregate_patterns(const std::vector<RankPattern>& patterns,
                                    const std::vector<MotifCounts>& counts,
                                    const MotifLabelMap& map) {
  if (patterns.empty())
    throw ParameterError("superfamily: no realizations to aggregate");
  if (patterns.size() != counts.size())
    throw ParameterError("superfamily: patterns/counts length mismatch");

  std::map<RankPattern, int> votes;
  for (const RankPattern& p : patterns) ++votes[p];
  auto modal = votes.begin();
  for (auto it = votes.begin(); it != votes.end(); ++it)
    if (it->second > modal->second) modal = it;  // ties keep the earlier key

  PatternAggregate agg;
  agg.modal_pattern = modal->first;
  agg.dispersion =
      static_cast<double>(modal->second) / static_cast<double>(patterns.size());
  for (const MotifCounts& c : counts) {
    const auto freq = c.relative();
    for (int i = 0; i < kMotifShapeCount; ++i) agg.mean_frequencies[i] += freq[i];
  }
  for (double& f : agg.mean_frequencies) f /= static_cast<double>(counts.size());
  agg.mean_frequency_pattern =
      rank_pattern_from_frequencies(agg.mean_frequencies, map);
  return agg;
}

}  // namespace tsnet
