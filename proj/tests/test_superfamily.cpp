#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "tsnet/errors.hpp"
#include "tsnet/rng.hpp"
#include "tsnet/superfamily.hpp"

using namespace tsnet;

namespace {

MotifCounts counts_of(std::initializer_list<std::uint64_t> by_shape) {
  MotifCounts c;
  int i = 0;
  for (std::uint64_t v : by_shape) {
    c.by_shape[i++] = v;
    c.total += v;
  }
  return c;
}

}  // namespace

TEST_CASE("pattern_for_alpha reproduces the reference bands") {
  const PatternTable table = PatternTable::defaults();
  CHECK(pattern_for_alpha(0.10, table) == "ABCDEF");
  CHECK(pattern_for_alpha(0.30, table) == "ACBDFE");
  CHECK(pattern_for_alpha(0.50, table) == "ACDFBE");
  CHECK(pattern_for_alpha(0.90, table) == "ACDFBE");
  CHECK(pattern_for_alpha(-0.3, table) == "ABCDEF");

  // Boundaries belong to the next band (bound must strictly exceed alpha).
  CHECK(pattern_for_alpha(0.225, table) == "ACBDFE");
  CHECK(pattern_for_alpha(0.325, table) == "ACDBFE");
  CHECK(pattern_for_alpha(0.425, table) == "ACDFBE");
}

TEST_CASE("pattern_for_alpha is piecewise constant and monotone in band index") {
  const PatternTable table = PatternTable::defaults();
  int prev_row = -1;
  for (double a = -0.5; a <= 1.5; a += 0.01) {
    const RankPattern p = pattern_for_alpha(a, table);
    int row = 0;
    while (table.rows[row].pattern != p) ++row;
    CHECK(row >= prev_row);
    prev_row = row;
  }
}

TEST_CASE("pattern_for_alpha rejects non-finite alpha") {
  CHECK_THROWS_AS(pattern_for_alpha(std::nan(""), PatternTable::defaults()),
                  ParameterError);
}

TEST_CASE("table validation") {
  PatternTable bad = PatternTable::defaults();
  std::swap(bad.rows[0], bad.rows[1]);
  CHECK_THROWS_AS(bad.validate(), ParameterError);

  PatternTable bounded = PatternTable::defaults();
  bounded.rows.back().alpha_upper = 2.0;
  CHECK_THROWS_AS(bounded.validate(), ParameterError);

  PatternTable typo = PatternTable::defaults();
  typo.rows[0].pattern = "ABCDEE";
  CHECK_THROWS_AS(typo.validate(), ParameterError);

  CHECK_NOTHROW(PatternTable::extended_turbulence().validate());
  CHECK(pattern_for_alpha(0.22, PatternTable::extended_turbulence()) ==
        "ABCDFE");
}

TEST_CASE("pattern table file round trip") {
  const std::string path = "superfamily_table_test.json";
  {
    std::ofstream out(path);
    out << R"([{"alpha_upper":0.3,"pattern":"ABCDEF"},
               {"alpha_upper":null,"pattern":"ACDFBE"}])";
  }
  const PatternTable t = load_pattern_table(path);
  CHECK(t.rows.size() == 2);
  CHECK(pattern_for_alpha(0.1, t) == "ABCDEF");
  CHECK(pattern_for_alpha(0.9, t) == "ACDFBE");
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_pattern_table("no_such_table.json"), DataError);

  const std::string bad_path = "superfamily_bad_table_test.json";
  {
    std::ofstream out(bad_path);
    out << R"([{"alpha_upper":0.3,"pattern":"ABCDEF"}])";  // bounded last row
  }
  CHECK_THROWS_AS(load_pattern_table(bad_path), ParameterError);
  std::remove(bad_path.c_str());
}

TEST_CASE("aggregate_patterns spec examples") {
  const MotifLabelMap map = MotifLabelMap::defaults();
  const MotifCounts c = counts_of({60, 5, 2, 30, 20, 10});

  SUBCASE("unanimity") {
    std::vector<RankPattern> patterns(10, "ACDFBE");
    std::vector<MotifCounts> counts(10, c);
    const PatternAggregate agg = aggregate_patterns(patterns, counts, map);
    CHECK(agg.modal_pattern == "ACDFBE");
    CHECK(agg.dispersion == doctest::Approx(1.0));
  }

  SUBCASE("7-3 split") {
    std::vector<RankPattern> patterns;
    for (int i = 0; i < 7; ++i) patterns.push_back("ACDFBE");
    for (int i = 0; i < 3; ++i) patterns.push_back("ACDBFE");
    std::vector<MotifCounts> counts(10, c);
    const PatternAggregate agg = aggregate_patterns(patterns, counts, map);
    CHECK(agg.modal_pattern == "ACDFBE");
    CHECK(agg.dispersion == doctest::Approx(0.7));
  }

  SUBCASE("mean frequencies normalize and rank") {
    std::vector<RankPattern> patterns(3, "ACDFBE");
    std::vector<MotifCounts> counts(3, c);
    const PatternAggregate agg = aggregate_patterns(patterns, counts, map);
    double sum = 0.0;
    for (double f : agg.mean_frequencies) sum += f;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    // shape order: path, star, cycle, tadpole, diamond, clique
    // counts above: path 60 > tadpole 30 > diamond 20 > clique 10 > star 5 > cycle 2
    CHECK(agg.mean_frequency_pattern == "ACDFBE");
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(aggregate_patterns({}, {}, map), ParameterError);
    CHECK_THROWS_AS(aggregate_patterns({"ABCDEF"}, {}, map), ParameterError);
  }
}

TEST_CASE("label map permutations act consistently on patterns") {
  const MotifLabelMap m1 = MotifLabelMap::defaults();
  MotifLabelMap m2 = m1;
  // C->cycle, D->tadpole, E->diamond: a C/D/E permutation.
  m2.shape_for_label[2] = MotifShape::Cycle;
  m2.shape_for_label[3] = MotifShape::Tadpole;
  m2.shape_for_label[4] = MotifShape::Diamond;
  m2.validate();

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    MotifCounts c;
    for (int s = 0; s < kMotifShapeCount; ++s) {
      c.by_shape[s] = rng.below(1000);
      c.total += c.by_shape[s];
    }
    if (c.total == 0) continue;
    const RankPattern p1 = rank_pattern(c, m1);
    const RankPattern p2 = rank_pattern(c, m2);
    // Same underlying shape order whenever counts are tie-free: relabel p1
    // through (m1 -> shape -> m2) and compare.
    bool ties = false;
    for (int a = 0; a < kMotifShapeCount && !ties; ++a)
      for (int b = a + 1; b < kMotifShapeCount; ++b)
        if (c.by_shape[a] == c.by_shape[b]) {
          ties = true;
          break;
        }
    if (ties) continue;
    RankPattern relabeled;
    for (char l : p1) relabeled += m2.label(m1.shape(l));
    CHECK(relabeled == p2);
  }
}

TEST_CASE("verdict agreement is the pattern equality") {
  SuperfamilyVerdict v;
  v.measured_alpha = 0.52;
  v.empirical_pattern = "ACDFBE";
  v.predicted_pattern = pattern_for_alpha(0.52, PatternTable::defaults());
  v.agreement = v.empirical_pattern == v.predicted_pattern;
  CHECK(v.agreement);
}
