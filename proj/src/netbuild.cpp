#include "tsnet/netbuild.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "tsnet/errors.hpp"
#include "tsnet/rng.hpp"

namespace tsnet {

namespace {

constexpr int kLinksPerNode = 4;

double point_distance(const double* a, const double* b, int dim,
                      Metric metric) {
  switch (metric) {
    case Metric::Euclidean: {
      double acc = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
      }
      return acc;  // squared; order-equivalent
    }
    case Metric::Manhattan: {
      double acc = 0.0;
      for (int k = 0; k < dim; ++k) acc += std::abs(a[k] - b[k]);
      return acc;
    }
    case Metric::Chebyshev: {
      double acc = 0.0;
      for (int k = 0; k < dim; ++k) acc = std::max(acc, std::abs(a[k] - b[k]));
      return acc;
    }
  }
  return 0.0;
}

}  // namespace

bool NNGraph::has_edge(int u, int v) const {
  const std::vector<int>& a =
      adjacency[u].size() <= adjacency[v].size() ? adjacency[u] : adjacency[v];
  const int probe = adjacency[u].size() <= adjacency[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), probe);
}

NNGraph NNGraph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 1) throw ParameterError("graph: need at least one node");
  NNGraph g;
  g.node_count = n;
  g.adjacency.assign(n, {});
  for (auto& [u, v] : edge_list) {
    if (u == v) throw ParameterError("graph: self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParameterError("graph: edge index out of range");
    if (u > v) std::swap(u, v);
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) !=
      edge_list.end())
    throw ParameterError("graph: duplicate edge");
  g.edges = std::move(edge_list);
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  g.build_order.resize(n);
  std::iota(g.build_order.begin(), g.build_order.end(), 0);
  return g;
}

NNGraph build_nn_graph(const EmbeddedSeries& embedded,
                       const NetBuildConfig& config) {
  const PointMatrix& points = embedded.points;
  const int n = static_cast<int>(points.rows());
  const int dim = static_cast<int>(points.cols());
  if (n < 2) throw ParameterError("netbuild: need at least 2 points");
  if (!points.allFinite())
    throw DataError("netbuild: non-finite point coordinates");

  NNGraph g;
  g.node_count = n;
  g.adjacency.assign(n, {});
  g.build_order.resize(n);
  std::iota(g.build_order.begin(), g.build_order.end(), 0);
  if (config.order == BuildOrder::SeededShuffle) {
    Rng rng(config.shuffle_seed);
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(g.build_order[i], g.build_order[j]);
    }
  }
  g.edges.reserve(static_cast<std::size_t>(kLinksPerNode) * n);

  const double* base = points.data();  // row-major
  // (key, index) max-heap buffer; keeping the 4 + deg(i) smallest overall
  // guarantees at least 4 non-adjacent survivors after filtering.
  std::vector<std::pair<double, int>> heap;

  for (int turn = 0; turn < n; ++turn) {
    const int i = g.build_order[turn];
    const std::vector<int>& adj_i = g.adjacency[i];
    const std::size_t keep =
        static_cast<std::size_t>(kLinksPerNode) + adj_i.size();
    const double* pi = base + static_cast<std::size_t>(i) * dim;

    heap.clear();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double key =
          point_distance(pi, base + static_cast<std::size_t>(j) * dim, dim,
                         config.metric);
      if (heap.size() < keep) {
        heap.emplace_back(key, j);
        std::push_heap(heap.begin(), heap.end());
      } else if (std::make_pair(key, j) < heap.front()) {
        std::pop_heap(heap.begin(), heap.end());
        heap.back() = {key, j};
        std::push_heap(heap.begin(), heap.end());
      }
    }
    std::sort_heap(heap.begin(), heap.end());

    int added = 0;
    for (const auto& [key, j] : heap) {
      if (added == kLinksPerNode) break;
      if (std::find(adj_i.begin(), adj_i.end(), j) != adj_i.end()) continue;
      g.adjacency[i].push_back(j);
      g.adjacency[j].push_back(i);
      g.edges.emplace_back(std::min(i, j), std::max(i, j));
      ++added;
    }
  }

  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

void write_edge_list(const NNGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("netbuild: cannot open " + path + " for writing");
  for (const auto& [u, v] : graph.edges) out << u << ' ' << v << '\n';
  if (!out) throw DataError("netbuild: write failed for " + path);
}

}  // namespace tsnet
