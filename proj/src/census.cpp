#include "tsnet/census.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>

#include <nlohmann/json.hpp>

#include "tsnet/errors.hpp"

namespace tsnet {

namespace {

constexpr const char* kShapeNames[kMotifShapeCount] = {
    "path", "star", "cycle", "tadpole", "diamond", "clique"};

// Shape from the number of induced edges and the maximum induced degree.
// Returns -1 for a disconnected quad.
int shape_index(int edge_count, int max_degree, int min_degree) {
  switch (edge_count) {
    case 3:
      if (max_degree == 3) return static_cast<int>(MotifShape::Star);
      if (min_degree == 0) return -1;  // triangle plus isolated node
      return static_cast<int>(MotifShape::Path);
    case 4:
      return max_degree == 3 ? static_cast<int>(MotifShape::Tadpole)
                             : static_cast<int>(MotifShape::Cycle);
    case 5:
      return static_cast<int>(MotifShape::Diamond);
    case 6:
      return static_cast<int>(MotifShape::Clique);
    default:
      return -1;  // 0..2 edges never connect 4 nodes
  }
}

int classify_nodes(const NNGraph& g, int a, int b, int c, int d) {
  const bool ab = g.has_edge(a, b), ac = g.has_edge(a, c),
             ad = g.has_edge(a, d), bc = g.has_edge(b, c),
             bd = g.has_edge(b, d), cd = g.has_edge(c, d);
  const int deg_a = ab + ac + ad;
  const int deg_b = ab + bc + bd;
  const int deg_c = ac + bc + cd;
  const int deg_d = ad + bd + cd;
  const int edges = deg_a + deg_b + deg_c + deg_d;
  const int max_deg = std::max({deg_a, deg_b, deg_c, deg_d});
  const int min_deg = std::min({deg_a, deg_b, deg_c, deg_d});
  return shape_index(edges / 2, max_deg, min_deg);
}

}  // namespace

const char* shape_name(MotifShape shape) {
  return kShapeNames[static_cast<int>(shape)];
}

MotifShape shape_from_name(const std::string& name) {
  for (int i = 0; i < kMotifShapeCount; ++i)
    if (name == kShapeNames[i]) return static_cast<MotifShape>(i);
  throw ParameterError("census: unknown motif shape '" + name + "'");
}

int shape_edge_count(MotifShape shape) {
  switch (shape) {
    case MotifShape::Path:
    case MotifShape::Star:
      return 3;
    case MotifShape::Cycle:
    case MotifShape::Tadpole:
      return 4;
    case MotifShape::Diamond:
      return 5;
    case MotifShape::Clique:
      return 6;
  }
  return 0;
}

MotifLabelMap MotifLabelMap::defaults() {
  MotifLabelMap map;
  map.shape_for_label = {MotifShape::Path,    MotifShape::Star,
                         MotifShape::Tadpole, MotifShape::Diamond,
                         MotifShape::Cycle,   MotifShape::Clique};
  return map;
}

char MotifLabelMap::label(MotifShape shape) const {
  for (int i = 0; i < kMotifShapeCount; ++i)
    if (shape_for_label[i] == shape) return static_cast<char>('A' + i);
  throw ParameterError("census: label map is not a bijection");
}

void MotifLabelMap::validate() const {
  std::array<int, kMotifShapeCount> seen{};
  for (MotifShape s : shape_for_label) ++seen[static_cast<int>(s)];
  for (int c : seen)
    if (c != 1) throw ParameterError("census: label map is not a bijection");
  if (shape('A') != MotifShape::Path || shape('B') != MotifShape::Star ||
      shape('F') != MotifShape::Clique)
    throw ParameterError(
        "census: labels A, B, F must map to path, star, clique");
}

MotifLabelMap load_label_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("census: cannot open label map " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("census: bad label map JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw DataError("census: label map must be an object");
  MotifLabelMap map = MotifLabelMap::defaults();
  for (char l = 'A'; l <= 'F'; ++l) {
    const std::string key(1, l);
    if (!doc.contains(key))
      throw DataError("census: label map missing label " + key);
    map.shape_for_label[l - 'A'] =
        shape_from_name(doc.at(key).get<std::string>());
  }
  map.validate();
  return map;
}

std::array<double, kMotifShapeCount> MotifCounts::relative() const {
  if (total == 0)
    throw DegenerateInputError("census: no connected 4-node subgraphs");
  std::array<double, kMotifShapeCount> freq{};
  for (int i = 0; i < kMotifShapeCount; ++i)
    freq[i] = static_cast<double>(by_shape[i]) / static_cast<double>(total);
  return freq;
}

std::optional<MotifShape> classify_quad(const NNGraph& graph,
                                        const std::array<int, 4>& nodes) {
  for (int i = 0; i < 4; ++i) {
    if (nodes[i] < 0 || nodes[i] >= graph.node_count)
      throw ParameterError("census: node index out of range");
    for (int j = i + 1; j < 4; ++j)
      if (nodes[i] == nodes[j])
        throw ParameterError("census: duplicate node index");
  }
  const int s = classify_nodes(graph, nodes[0], nodes[1], nodes[2], nodes[3]);
  if (s < 0) return std::nullopt;
  return static_cast<MotifShape>(s);
}

MotifCounts motif_census(const NNGraph& graph) {
  const int n = graph.node_count;
  MotifCounts counts;
  // blocked = nodes in the current subgraph or adjacent to it; candidates are
  // always > root, so only those need marking.
  std::vector<std::uint8_t> blocked(n, 0);
  std::vector<int> ext0, ext1, ext2, new1, new2;

  for (int v = 0; v < n; ++v) {
    const std::vector<int>& nv = graph.adjacency[v];
    blocked[v] = 1;
    for (int u : nv) blocked[u] = 1;

    ext0.assign(std::upper_bound(nv.begin(), nv.end(), v), nv.end());
    for (std::size_t a = 0; a < ext0.size(); ++a) {
      const int w1 = ext0[a];
      new1.clear();
      const std::vector<int>& n1 = graph.adjacency[w1];
      for (auto it = std::upper_bound(n1.begin(), n1.end(), v); it != n1.end();
           ++it) {
        if (!blocked[*it]) {
          blocked[*it] = 1;
          new1.push_back(*it);
        }
      }
      ext1.assign(ext0.begin() + a + 1, ext0.end());
      ext1.insert(ext1.end(), new1.begin(), new1.end());

      for (std::size_t b = 0; b < ext1.size(); ++b) {
        const int w2 = ext1[b];
        new2.clear();
        const std::vector<int>& n2 = graph.adjacency[w2];
        for (auto it = std::upper_bound(n2.begin(), n2.end(), v);
             it != n2.end(); ++it) {
          if (!blocked[*it]) {
            blocked[*it] = 1;
            new2.push_back(*it);
          }
        }
        for (std::size_t c = b + 1; c < ext1.size(); ++c) {
          const int s = classify_nodes(graph, v, w1, w2, ext1[c]);
          assert(s >= 0);  // every enumerated 4-set is connected
          ++counts.by_shape[s];
        }
        for (int w3 : new2) {
          const int s = classify_nodes(graph, v, w1, w2, w3);
          assert(s >= 0);
          ++counts.by_shape[s];
        }
        for (int u : new2) blocked[u] = 0;
      }
      for (int u : new1) blocked[u] = 0;
    }
    blocked[v] = 0;
    for (int u : nv) blocked[u] = 0;
  }

  counts.total = 0;
  for (std::uint64_t c : counts.by_shape) counts.total += c;
  return counts;
}

namespace {

RankPattern pattern_from_values(const double* value_by_shape,
                                const MotifLabelMap& map) {
  std::array<char, kMotifShapeCount> labels = {'A', 'B', 'C', 'D', 'E', 'F'};
  std::stable_sort(labels.begin(), labels.end(), [&](char x, char y) {
    const double cx = value_by_shape[static_cast<int>(map.shape(x))];
    const double cy = value_by_shape[static_cast<int>(map.shape(y))];
    if (cx != cy) return cx > cy;
    return x < y;
  });
  return RankPattern(labels.begin(), labels.end());
}

}  // namespace

RankPattern rank_pattern(const MotifCounts& counts, const MotifLabelMap& map) {
  double values[kMotifShapeCount];
  for (int i = 0; i < kMotifShapeCount; ++i)
    values[i] = static_cast<double>(counts.by_shape[i]);
  return pattern_from_values(values, map);
}

RankPattern rank_pattern_from_frequencies(
    const std::array<double, kMotifShapeCount>& freq_by_shape,
    const MotifLabelMap& map) {
  return pattern_from_values(freq_by_shape.data(), map);
}

}  // namespace tsnet
