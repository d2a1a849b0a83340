#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tsnet/embed.hpp"

namespace tsnet {

enum class BuildOrder { Temporal, SeededShuffle };
enum class Metric { Euclidean, Manhattan, Chebyshev };

struct NetBuildConfig {
  BuildOrder order = BuildOrder::Temporal;
  std::uint64_t shuffle_seed = 0;
  Metric metric = Metric::Euclidean;
};

// Simple undirected graph. For nearest-neighbor networks every node initiates
// exactly four links on its turn (fewer only when it runs out of eligible
// candidates), so |edges| = 4n and mean degree 8 in the regular case.
struct NNGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;      // u < v, lexicographically sorted
  std::vector<std::vector<int>> adjacency;     // sorted neighbor lists
  std::vector<int> build_order;                // node permutation used to build

  bool has_edge(int u, int v) const;
  int degree(int u) const { return static_cast<int>(adjacency[u].size()); }

  // Wraps an explicit edge list (tests and oracles). Rejects self-loops,
  // duplicates, and out-of-range indices.
  static NNGraph from_edges(int n, std::vector<std::pair<int, int>> edge_list);
};

// Iterates nodes in the configured order; each node links to its 4 nearest
// nodes among those not already connected to it (ties break toward the
// smaller node index). Neighbor search is exact.
NNGraph build_nn_graph(const EmbeddedSeries& embedded,
                       const NetBuildConfig& config = {});

// One edge per line, "u v" with 0-based indices, u < v, sorted
// lexicographically.
void write_edge_list(const NNGraph& graph, const std::string& path);

}  // namespace tsnet
