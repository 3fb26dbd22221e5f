#pragma once

// Graph algebra on vertex subsets (K[Z], I[Z], disjoint union, join) and the
// clique-block templates G_1..G_5, G_{1,i}, G_{2,i} that describe the limits
// and periodic families.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mstep/graph.hpp"

namespace mstep {

/// An undirected graph living on a subset of a global vertex range. Every
/// edge has both ends in `vertices`.
struct VertexGraph {
  VertexSet vertices;
  UndirectedGraph graph;
};

/// K[Z] and I[Z] inside a global range of z.universe() vertices.
VertexGraph complete_on(const VertexSet& z);
VertexGraph empty_on(const VertexSet& z);

/// Throw std::invalid_argument when the vertex sets overlap or the global
/// ranges differ.
VertexGraph graph_union(const VertexGraph& g1, const VertexGraph& g2);
VertexGraph graph_join(const VertexGraph& g1, const VertexGraph& g2);

/// Symmetric join relation among cliques K^(1)..K^(k), i.e. the J/O pattern
/// of the block matrix A(G) + I. Indices are 1-based as in K^(i).
class BlockPattern {
 public:
  BlockPattern() = default;

  /// One string per block row, 'J' or 'O' per block column. The diagonal
  /// must be 'J' and the pattern symmetric.
  static BlockPattern from_rows(std::initializer_list<std::string_view> rows);

  std::size_t size() const { return size_; }
  bool joined(std::size_t i, std::size_t j) const;
  /// All joined pairs (i, j) with i < j.
  std::vector<std::pair<std::size_t, std::size_t>> join_pairs() const;
  /// Copy with the extra pairs joined.
  BlockPattern with_joins(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) const;

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<bool> join_;
};

enum class TemplateShape { g1, g2, g3, g4, g5, g1_1, g1_2, g1_3, g2_1, g2_2, g2_3 };

const BlockPattern& template_pattern(TemplateShape shape);
std::string_view template_name(TemplateShape shape);
/// G_{1,i} / G_{2,i} for i in 1..3.
TemplateShape periodic_shape(bool augmented, std::size_t i);

/// A pattern together with its cliques. A missing or empty clique drops out
/// of the graph.
struct GraphTemplate {
  BlockPattern pattern;
  std::vector<std::optional<VertexSet>> cliques;
};

/// Edges: every pair inside one clique, plus every pair across a joined pair
/// of cliques. Vertices outside all cliques stay isolated. Throws
/// std::invalid_argument on overlapping cliques, a clique count that differs
/// from the pattern, or a clique outside the range.
UndirectedGraph instantiate_template(const GraphTemplate& t, std::size_t total_vertices);

struct MatchConstraints {
  /// One entry per clique of the pattern; nullopt marks an unknown clique.
  std::vector<std::optional<VertexSet>> known;
  /// Vertices to distribute among the unknown cliques.
  VertexSet pool;
};

/// Partitions the pool among the unknown cliques so that instantiating the
/// pattern reproduces g exactly, or returns nullopt. Pool vertices with
/// equal closed neighbourhoods in g always share a clique; the classes are
/// assigned to distinct unknown cliques, trying lower indices first, and
/// unknown cliques left over come back empty. The result lists every
/// clique, known ones included.
std::optional<std::vector<VertexSet>> match_template(const UndirectedGraph& g,
                                                     const BlockPattern& pattern,
                                                     const MatchConstraints& constraints);

}  // namespace mstep
