#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tsnet/netbuild.hpp"

namespace tsnet {

// The six connected 4-node shapes. A connected 4-node graph is uniquely
// identified by (edge count, max degree): 3 edges split path/star, 4 edges
// split cycle/tadpole (a degree-3 node implies the triangle), 5 is the
// diamond, 6 the clique.
enum class MotifShape : int {
  Path = 0,
  Star,
  Cycle,
  Tadpole,
  Diamond,
  Clique,
};

inline constexpr int kMotifShapeCount = 6;

const char* shape_name(MotifShape shape);
MotifShape shape_from_name(const std::string& name);
int shape_edge_count(MotifShape shape);

// Bijection between labels A..F and shapes. A=path, B=star, F=clique are
// fixed; C, D, E may permute among tadpole/diamond/cycle.
struct MotifLabelMap {
  std::array<MotifShape, kMotifShapeCount> shape_for_label;  // index: label-'A'

  static MotifLabelMap defaults();  // A=path B=star C=tadpole D=diamond E=cycle F=clique
  MotifShape shape(char label) const { return shape_for_label[label - 'A']; }
  char label(MotifShape shape) const;
  void validate() const;
};

MotifLabelMap load_label_map(const std::string& path);

struct MotifCounts {
  std::array<std::uint64_t, kMotifShapeCount> by_shape{};
  std::uint64_t total = 0;

  std::uint64_t count(MotifShape s) const {
    return by_shape[static_cast<int>(s)];
  }
  // Relative frequencies by shape; requires total > 0.
  std::array<double, kMotifShapeCount> relative() const;
};

// Labels in descending count order; ties and zero counts break toward
// alphabetical order.
using RankPattern = std::string;

// Shape of the induced subgraph on 4 distinct nodes, or nullopt when the
// induced subgraph is disconnected.
std::optional<MotifShape> classify_quad(const NNGraph& graph,
                                        const std::array<int, 4>& nodes);

// Exact census of connected induced 4-node subgraphs via
// exclusive-neighborhood extension from each subgraph's minimum-index node.
MotifCounts motif_census(const NNGraph& graph);

RankPattern rank_pattern(const MotifCounts& counts, const MotifLabelMap& map);
RankPattern rank_pattern_from_frequencies(
    const std::array<double, kMotifShapeCount>& freq_by_shape,
    const MotifLabelMap& map);

}  // namespace tsnet
