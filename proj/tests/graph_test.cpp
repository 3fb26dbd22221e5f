#include <gtest/gtest.h>

#include <stdexcept>

#include "mstep/graph.hpp"

namespace mstep {
namespace {

TEST(Digraph, ArcsAndNeighbours) {
  const Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {3, 0}});
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.arc_count(), 3u);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_FALSE(d.has_arc(1, 0));
  EXPECT_EQ(d.out_neighbors(1), VertexSet(4, {2}));
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {3, 0}}));
}

TEST(Digraph, RejectsSelfLoops) {
  Digraph d(3);
  EXPECT_THROW(d.add_arc(1, 1), std::invalid_argument);
  BoolMatrix m(2);
  m.set(0, 0);
  EXPECT_THROW(Digraph::from_matrix(m), std::invalid_argument);
}

TEST(Digraph, InducedSubdigraphKeepsInternalArcs) {
  const Digraph d = Digraph::from_arcs(5, {{0, 2}, {2, 4}, {4, 0}, {1, 3}, {0, 1}});
  const InducedDigraph sub = induced_subdigraph(d, VertexSet(5, {0, 2, 4}));
  EXPECT_EQ(sub.to_global, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(sub.digraph.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(UndirectedGraph, EdgesAreSymmetric) {
  UndirectedGraph g(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 3}}));
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
}

TEST(UndirectedGraph, FromMatrixValidates) {
  BoolMatrix m(2);
  m.set(0, 1);
  EXPECT_THROW(UndirectedGraph::from_matrix(m), std::invalid_argument);
  m.set(1, 0);
  EXPECT_NO_THROW(UndirectedGraph::from_matrix(m));
  m.set(1, 1);
  EXPECT_THROW(UndirectedGraph::from_matrix(m), std::invalid_argument);
}

TEST(UndirectedGraph, RestrictionAndLift) {
  UndirectedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const UndirectedGraph r = g.restricted_to(VertexSet(4, {1, 2, 3}));
  EXPECT_EQ(r.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}}));

  UndirectedGraph local(2);
  local.add_edge(0, 1);
  const UndirectedGraph lifted = lift_to_global(local, {1, 3}, 5);
  EXPECT_EQ(lifted.size(), 5u);
  EXPECT_EQ(lifted.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}}));
}

TEST(PartiteStructure, ValidatesPartition) {
  EXPECT_THROW(PartiteStructure({VertexSet(3, {0, 1, 2})}), std::invalid_argument);
  EXPECT_THROW(PartiteStructure({VertexSet(3, {0, 1}), VertexSet(3, {1, 2})}),
               std::invalid_argument);
  EXPECT_THROW(PartiteStructure({VertexSet(3, {0}), VertexSet(3, {1})}), std::invalid_argument);
  EXPECT_THROW(PartiteStructure({VertexSet(3, {0, 1, 2}), VertexSet(3)}), std::invalid_argument);

  const PartiteStructure ps({VertexSet(4, {0, 3}), VertexSet(4, {1}), VertexSet(4, {2})});
  EXPECT_EQ(ps.part_count(), 3u);
  EXPECT_EQ(ps.vertex_count(), 4u);
  EXPECT_EQ(ps.part_of(3), 0u);
  EXPECT_EQ(ps.part_of(2), 2u);
}

}  // namespace
}  // namespace mstep
