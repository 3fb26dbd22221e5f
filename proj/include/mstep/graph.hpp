#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mstep/bits.hpp"

namespace mstep {

using Arc = std::pair<std::size_t, std::size_t>;

/// Simple digraph on vertices 0..n-1: no self-loops, at most one arc per
/// ordered pair. Arcs are the set bits of the adjacency rows.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  /// Throws std::invalid_argument if the diagonal is not clear.
  static Digraph from_matrix(BoolMatrix adjacency);
  static Digraph from_arcs(std::size_t n, const std::vector<Arc>& arcs);

  std::size_t size() const { return adjacency_.order(); }

  void add_arc(std::size_t from, std::size_t to);
  bool has_arc(std::size_t from, std::size_t to) const { return adjacency_.get(from, to); }
  VertexSet out_neighbors(std::size_t v) const { return adjacency_.row_set(v); }

  const BoolMatrix& adjacency() const { return adjacency_; }
  std::size_t arc_count() const { return adjacency_.count(); }
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  BoolMatrix adjacency_;
};

/// A digraph induced on a vertex subset, together with the map from local
/// to global vertex indices (ascending).
struct InducedDigraph {
  Digraph digraph;
  std::vector<std::size_t> to_global;
};

InducedDigraph induced_subdigraph(const Digraph& d, const VertexSet& vertices);

/// Simple undirected graph: symmetric adjacency with a clear diagonal.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n);

  /// Throws std::invalid_argument unless the matrix is symmetric with a
  /// clear diagonal.
  static UndirectedGraph from_matrix(BoolMatrix adjacency);

  std::size_t size() const { return adjacency_.order(); }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const { return adjacency_.get(u, v); }
  VertexSet neighbors(std::size_t v) const { return adjacency_.row_set(v); }

  const BoolMatrix& adjacency() const { return adjacency_; }
  std::size_t edge_count() const { return adjacency_.count() / 2; }
  /// Edges as pairs (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Copy of this graph restricted to `vertices`; edges leaving the set are
  /// dropped, vertex indices are unchanged.
  UndirectedGraph restricted_to(const VertexSet& vertices) const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  BoolMatrix adjacency_;
};

/// Re-embeds a graph on a subdigraph's local indices into a graph on
/// `global_size` vertices.
UndirectedGraph lift_to_global(const UndirectedGraph& local,
                               const std::vector<std::size_t>& to_global,
                               std::size_t global_size);

/// A partition (V_1, ..., V_k) of the vertex set with k >= 2 nonempty parts.
/// Only partition properties are checked here; compatibility with a digraph
/// is checked by validate_multipartite_tournament.
class PartiteStructure {
 public:
  PartiteStructure() = default;
  explicit PartiteStructure(std::vector<VertexSet> parts);

  std::size_t part_count() const { return parts_.size(); }
  std::size_t vertex_count() const { return part_of_.size(); }
  const std::vector<VertexSet>& parts() const { return parts_; }
  const VertexSet& part(std::size_t i) const { return parts_.at(i); }
  std::size_t part_of(std::size_t v) const { return part_of_.at(v); }

  friend bool operator==(const PartiteStructure& a, const PartiteStructure& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<VertexSet> parts_;
  std::vector<std::size_t> part_of_;
};

}  // namespace mstep
