// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the desk-scale sweeps (length 10^4, d=10, 10 realizations
// per cell) end to end; expect a few minutes of runtime.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tsnet/census.hpp"
#include "tsnet/errors.hpp"
#include "tsnet/pipeline.hpp"
#include "tsnet/rng.hpp"
#include "tsnet/sweep.hpp"
#include "tsnet/synth.hpp"

using namespace tsnet;

namespace {

constexpr std::uint64_t kMasterSeed = 20260809;
constexpr Eigen::Index kLength = 10000;

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// ---- criterion 5 bookkeeping, accumulated across every acceptance graph ----
struct Bookkeeping {
  long graphs = 0;
  long violations = 0;

  void add(Eigen::Index length, int dimension, int delay, int nodes,
           std::uint64_t edges) {
    ++graphs;
    const long expected_nodes =
        static_cast<long>(length) - static_cast<long>(dimension) * delay;
    if (nodes != expected_nodes || edges != 4ull * static_cast<std::uint64_t>(nodes))
      ++violations;
  }
  void add_cells(const ExperimentReport& rep) {
    const int d = rep.config.analysis.embedding.dimension;
    for (const auto& cell : rep.cells)
      for (std::size_t i = 0; i < cell.node_counts.size(); ++i)
        add(rep.config.length, d, cell.delays[i], cell.node_counts[i],
            cell.edge_counts[i]);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent census oracle: all C(n,4) quadruples, BFS connectivity,
// degree-sequence shapes.
int oracle_shape(const bool adj[4][4]) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (adj[i][j]) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  bool seen[4] = {true, false, false, false};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < 4; ++w)
      if (adj[u][w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (bool s : seen)
    if (!s) return -1;
  std::array<int, 4> d = deg;
  std::sort(d.begin(), d.end());
  if (d == std::array<int, 4>{1, 1, 2, 2}) return 0;  // path
  if (d == std::array<int, 4>{1, 1, 1, 3}) return 1;  // star
  if (d == std::array<int, 4>{2, 2, 2, 2} && edges == 4) return 2;  // cycle
  if (d == std::array<int, 4>{1, 2, 2, 3}) return 3;  // tadpole
  if (d == std::array<int, 4>{2, 2, 3, 3}) return 4;  // diamond
  if (d == std::array<int, 4>{3, 3, 3, 3}) return 5;  // clique
  return -1;
}

MotifCounts oracle_census(const NNGraph& g) {
  const int n = g.node_count;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  MotifCounts counts;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          const int q[4] = {a, b, c, e};
          bool m[4][4] = {};
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              m[i][j] = i != j && adj[q[i]][q[j]];
          const int s = oracle_shape(m);
          if (s >= 0) {
            ++counts.by_shape[s];
            ++counts.total;
          }
        }
  return counts;
}

TimeSeries gaussian_walk(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  TimeSeries s;
  s.values.resize(n);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    acc += rng.gaussian();
    s.values[i] = acc;
  }
  s.label = "gaussian walk";
  return s;
}

RankPattern modal_of(const std::vector<RankPattern>& patterns,
                     double* dispersion) {
  std::vector<MotifCounts> dummy(patterns.size());
  for (auto& c : dummy) {
    c.by_shape[0] = 1;
    c.total = 1;
  }
  const PatternAggregate agg =
      aggregate_patterns(patterns, dummy, MotifLabelMap::defaults());
  *dispersion = agg.dispersion;
  return agg.modal_pattern;
}

}  // namespace

int main() {
  Bookkeeping books;

  // ---- Criteria 1, 2, 4: FBM sweep ----------------------------------------
  RunConfig fbm_cfg;
  fbm_cfg.mode = RunMode::SweepFbm;
  fbm_cfg.hurst_grid = {0.10, 0.20, 0.30, 0.40, 0.50, 0.70, 0.90};
  fbm_cfg.realizations = 10;
  fbm_cfg.length = kLength;
  fbm_cfg.master_seed = kMasterSeed;
  const ExperimentReport fbm = run_sweep(fbm_cfg);
  books.add_cells(fbm);

  const std::vector<RankPattern> expected = {"ABCDEF", "ABCDEF", "ACBDFE",
                                             "ACDBFE", "ACDFBE", "ACDFBE",
                                             "ACDFBE"};
  {
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < fbm.cells.size(); ++i) {
      const auto& cell = fbm.cells[i];
      const bool ok = cell.modal_pattern == expected[i] && cell.dispersion >= 0.6;
      if (!ok) pass = false;
      detail += "H=" + fmt(cell.cell_value) + ":" + cell.modal_pattern + "(" +
                fmt(cell.dispersion) + ") ";
      if (cell.modal_pattern != cell.mean_frequency_pattern)
        detail += "[FLAG modal!=mean-freq " + cell.mean_frequency_pattern + "] ";
    }
    report("C1 FBM motif rank pattern table", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (const auto& cell : fbm.cells) {
      const double err = std::abs(cell.mean_alpha - cell.cell_value);
      if (err > 0.05) pass = false;
      detail += "H=" + fmt(cell.cell_value) + ":a=" + fmt(cell.mean_alpha) + " ";
    }
    report("C2 DFA alpha tracks H for FBM (|mean alpha - H| <= 0.05)", pass,
           detail);
  }
  {
    bool star_dec = true, clique_inc = true;
    for (std::size_t i = 1; i < fbm.cells.size(); ++i) {
      const auto& prev = fbm.cells[i - 1].mean_frequencies;
      const auto& cur = fbm.cells[i].mean_frequencies;
      if (!(cur[static_cast<int>(MotifShape::Star)] <
            prev[static_cast<int>(MotifShape::Star)]))
        star_dec = false;
      if (!(cur[static_cast<int>(MotifShape::Clique)] >
            prev[static_cast<int>(MotifShape::Clique)]))
        clique_inc = false;
    }
    report("C4 key motifs: star falls, clique rises across the H grid",
           star_dec && clique_inc,
           std::string("star strictly decreasing=") +
               (star_dec ? "yes" : "no") +
               ", clique strictly increasing=" + (clique_inc ? "yes" : "no"));
  }

  // ---- Criterion 3: MRW sweep ----------------------------------------------
  RunConfig mrw_cfg;
  mrw_cfg.mode = RunMode::SweepMrw;
  mrw_cfg.hurst_grid = {0.2, 0.5, 0.8};
  mrw_cfg.realizations = 10;
  mrw_cfg.length = kLength;
  mrw_cfg.master_seed = kMasterSeed + 1;
  const ExperimentReport mrw = run_sweep(mrw_cfg);
  books.add_cells(mrw);
  {
    const auto& low = mrw.cells[0];
    const auto& mid = mrw.cells[1];
    const auto& high = mrw.cells[2];
    const bool low_ok = low.mean_alpha > 0.25 && low.mean_alpha < 0.35 &&
                        low.modal_pattern == "ACBDFE";
    const bool mid_ok =
        std::abs(mid.mean_alpha - 0.5) <= 0.05 && mid.modal_pattern == "ACDFBE";
    const bool high_ok =
        std::abs(high.mean_alpha - 0.8) <= 0.05 && high.modal_pattern == "ACDFBE";
    report("C3 MRW deviation and patterns", low_ok && mid_ok && high_ok,
           "H=0.2:a=" + fmt(low.mean_alpha) + "," + low.modal_pattern +
               "  H=0.5:a=" + fmt(mid.mean_alpha) + "," + mid.modal_pattern +
               "  H=0.8:a=" + fmt(high.mean_alpha) + "," + high.modal_pattern);
  }

  // ---- Criterion 6: census oracle ------------------------------------------
  {
    Rng size_rng(31337);
    bool pass = true;
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 8 + static_cast<int>(size_rng.below(23));
      Rng edge_rng(7000 + trial);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (edge_rng.uniform01() < 0.2) edges.emplace_back(i, j);
      const NNGraph g = NNGraph::from_edges(n, edges);
      const MotifCounts fast = motif_census(g);
      const MotifCounts slow = oracle_census(g);
      ++checked;
      if (fast.total != slow.total) pass = false;
      for (int s = 0; s < kMotifShapeCount; ++s)
        if (fast.by_shape[s] != slow.by_shape[s]) pass = false;
    }
    report("C6 census equals brute force on 100 seeded ER graphs", pass,
           std::to_string(checked) + " graphs, shape-by-shape");
  }

  // ---- Criterion 7: degenerate identities ----------------------------------
  {
    std::vector<std::pair<int, int>> c10_edges, star_edges, k6_edges;
    for (int i = 0; i < 10; ++i) c10_edges.emplace_back(i, (i + 1) % 10);
    for (int i = 1; i <= 6; ++i) star_edges.emplace_back(0, i);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) k6_edges.emplace_back(i, j);

    const MotifCounts c10 = motif_census(NNGraph::from_edges(10, c10_edges));
    const MotifCounts s16 = motif_census(NNGraph::from_edges(7, star_edges));
    const MotifCounts k6 = motif_census(NNGraph::from_edges(6, k6_edges));

    const bool pass = c10.count(MotifShape::Path) == 10 && c10.total == 10 &&
                      s16.count(MotifShape::Star) == 20 && s16.total == 20 &&
                      k6.count(MotifShape::Clique) == 15 && k6.total == 15;
    report("C7 degenerate graphs: C10 -> 10 paths, K1,6 -> 20 stars, K6 -> 15 cliques",
           pass,
           "C10=" + std::to_string(c10.count(MotifShape::Path)) +
               " K16=" + std::to_string(s16.count(MotifShape::Star)) +
               " K6=" + std::to_string(k6.count(MotifShape::Clique)));
  }

  // ---- Criterion 8: stock-like surrogate -----------------------------------
  {
    AnalysisConfig cfg;
    std::vector<RankPattern> patterns;
    double alpha_sum = 0.0;
    for (int s = 0; s < 10; ++s) {
      const TimeSeries walk =
          gaussian_walk(kLength, derive_stream(kMasterSeed + 2, s));
      const AnalysisResult r = analyze_series(walk, cfg);
      patterns.push_back(r.pattern);
      alpha_sum += r.dfa.alpha;
      books.add(kLength, cfg.embedding.dimension, r.delay.delay, r.node_count,
                r.edge_count);
    }
    double dispersion = 0.0;
    const RankPattern modal = modal_of(patterns, &dispersion);
    report("C8 uncorrelated Gaussian walk surrogate -> ACDFBE",
           modal == "ACDFBE" && dispersion >= 0.8,
           "modal=" + modal + " dispersion=" + fmt(dispersion) +
               " mean_alpha=" + fmt(alpha_sum / 10));
  }

  // ---- Criterion 9: node-order robustness ----------------------------------
  {
    AnalysisConfig temporal;
    AnalysisConfig shuffled;
    shuffled.net.order = BuildOrder::SeededShuffle;
    shuffled.net.shuffle_seed = 0xC0FFEE;
    std::vector<RankPattern> pat_t, pat_s;
    for (int s = 0; s < 10; ++s) {
      const TimeSeries walk =
          generate_fbm({0.5, kLength, derive_stream(kMasterSeed + 3, s)});
      const AnalysisResult rt = analyze_series(walk, temporal);
      const AnalysisResult rs = analyze_series(walk, shuffled);
      pat_t.push_back(rt.pattern);
      pat_s.push_back(rs.pattern);
      books.add(kLength, temporal.embedding.dimension, rt.delay.delay,
                rt.node_count, rt.edge_count);
      books.add(kLength, shuffled.embedding.dimension, rs.delay.delay,
                rs.node_count, rs.edge_count);
    }
    double disp_t = 0.0, disp_s = 0.0;
    const RankPattern modal_t = modal_of(pat_t, &disp_t);
    const RankPattern modal_s = modal_of(pat_s, &disp_s);
    report("C9 temporal and shuffled build orders share the modal pattern",
           modal_t == modal_s,
           "temporal=" + modal_t + "(" + fmt(disp_t) + ") shuffled=" + modal_s +
               "(" + fmt(disp_s) + ")");
  }

  // ---- Criterion 5: graph bookkeeping across all acceptance runs -----------
  report("C5 graph bookkeeping: n = length - d*tau and |edges| = 4n",
         books.violations == 0 && books.graphs > 0,
         std::to_string(books.graphs) + " graphs, " +
             std::to_string(books.violations) + " violations");

  // ---- Criterion 10: byte-identical reports --------------------------------
  {
    RunConfig cfg;
    cfg.mode = RunMode::SweepFbm;
    cfg.hurst_grid = {0.3, 0.7};
    cfg.realizations = 3;
    cfg.length = kLength;
    cfg.master_seed = kMasterSeed + 4;
    cfg.output_dir = "acceptance_det_a";
    const ExperimentReport a = run_sweep(cfg);
    const auto files_a = emit_report(a);

    RunConfig cfg_b = cfg;
    cfg_b.output_dir = "acceptance_det_b";
    const ExperimentReport b = run_sweep(cfg_b);
    const auto files_b = emit_report(b);

    bool pass = report_to_json(a) == report_to_json(b) &&
                files_a.size() == files_b.size();
    if (pass)
      for (std::size_t i = 0; i < files_a.size(); ++i)
        if (slurp(files_a[i]) != slurp(files_b[i])) pass = false;
    report("C10 repeated sweep with equal master seed is byte-identical", pass,
           std::to_string(files_a.size()) + " files compared");
    std::filesystem::remove_all("acceptance_det_a");
    std::filesystem::remove_all("acceptance_det_b");
  }

  std::printf("%s: %d criterion failure(s)\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
