#include "mstep/graph.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace mstep {

Digraph::Digraph(std::size_t n) : adjacency_(n) {}

Digraph Digraph::from_matrix(BoolMatrix adjacency) {
  for (std::size_t i = 0; i < adjacency.order(); ++i) {
    if (adjacency.get(i, i)) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    }
  }
  Digraph d;
  d.adjacency_ = std::move(adjacency);
  return d;
}

Digraph Digraph::from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
  Digraph d(n);
  for (const auto& [from, to] : arcs) d.add_arc(from, to);
  return d;
}

void Digraph::add_arc(std::size_t from, std::size_t to) {
  if (from == to) throw std::invalid_argument("self-loop at vertex " + std::to_string(from));
  adjacency_.set(from, to);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (std::size_t u = 0; u < size(); ++u) {
    out_neighbors(u).for_each([&](std::size_t v) { out.emplace_back(u, v); });
  }
  return out;
}

InducedDigraph induced_subdigraph(const Digraph& d, const VertexSet& vertices) {
  InducedDigraph out;
  out.to_global = vertices.members();
  constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> to_local(d.size(), kAbsent);
  for (std::size_t i = 0; i < out.to_global.size(); ++i) to_local[out.to_global[i]] = i;
  out.digraph = Digraph(out.to_global.size());
  for (std::size_t i = 0; i < out.to_global.size(); ++i) {
    (d.out_neighbors(out.to_global[i]) & vertices).for_each([&](std::size_t v) {
      out.digraph.add_arc(i, to_local[v]);
    });
  }
  return out;
}

UndirectedGraph::UndirectedGraph(std::size_t n) : adjacency_(n) {}

UndirectedGraph UndirectedGraph::from_matrix(BoolMatrix adjacency) {
  if (!adjacency.diagonal_clear()) {
    throw std::invalid_argument("undirected graph adjacency has a nonzero diagonal");
  }
  if (!adjacency.is_symmetric()) {
    throw std::invalid_argument("undirected graph adjacency is not symmetric");
  }
  UndirectedGraph g;
  g.adjacency_ = std::move(adjacency);
  return g;
}

void UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adjacency_.set(u, v);
  adjacency_.set(v, u);
}

std::vector<std::pair<std::size_t, std::size_t>> UndirectedGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    neighbors(u).for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

UndirectedGraph UndirectedGraph::restricted_to(const VertexSet& vertices) const {
  UndirectedGraph g(size());
  vertices.for_each([&](std::size_t u) {
    (neighbors(u) & vertices).for_each([&](std::size_t v) { g.adjacency_.set(u, v); });
  });
  return g;
}

UndirectedGraph lift_to_global(const UndirectedGraph& local,
                               const std::vector<std::size_t>& to_global,
                               std::size_t global_size) {
  if (local.size() != to_global.size()) {
    throw std::invalid_argument("lift_to_global: index map size mismatch");
  }
  UndirectedGraph g(global_size);
  for (const auto& [u, v] : local.edges()) g.add_edge(to_global[u], to_global[v]);
  return g;
}

PartiteStructure::PartiteStructure(std::vector<VertexSet> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) {
    throw std::invalid_argument("a partite structure needs at least two parts");
  }
  const std::size_t n = parts_.front().universe();
  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  part_of_.assign(n, kUnassigned);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].universe() != n) throw std::invalid_argument("parts over different universes");
    if (parts_[i].empty()) throw std::invalid_argument("part " + std::to_string(i) + " is empty");
    parts_[i].for_each([&](std::size_t v) {
      if (part_of_[v] != kUnassigned) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " lies in two parts");
      }
      part_of_[v] = i;
    });
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (part_of_[v] == kUnassigned) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " lies in no part");
    }
  }
}

}  // namespace mstep
