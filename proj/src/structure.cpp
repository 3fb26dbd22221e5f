#include "mstep/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace mstep {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::string pair_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

NotMultipartiteTournament::NotMultipartiteTournament(
    const std::string& message, std::optional<std::pair<std::size_t, std::size_t>> witness)
    : std::runtime_error(message), witness_(witness) {}

PartiteStructure infer_partite_sets(const Digraph& d) {
  const std::size_t n = d.size();
  const BoolMatrix& a = d.adjacency();
  const BoolMatrix at = a.transpose();

  // Parts: connected components of mutual non-adjacency.
  std::vector<std::size_t> label(n, kUnset);
  std::vector<VertexSet> parts;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] != kUnset) continue;
    VertexSet part(n);
    std::vector<std::size_t> stack{start};
    label[start] = parts.size();
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      part.insert(u);
      VertexSet strangers = VertexSet::full(n) - (a.row_set(u) | at.row_set(u));
      strangers.for_each([&](std::size_t v) {
        if (label[v] == kUnset) {
          label[v] = parts.size();
          stack.push_back(v);
        }
      });
    }
    parts.push_back(std::move(part));
  }
  if (parts.size() < 2) {
    // Everything collapsed into one part; any arc then lies inside it.
    const std::vector<Arc> arcs = d.arcs();
    if (!arcs.empty()) {
      const auto [u, v] = std::minmax(arcs.front().first, arcs.front().second);
      throw NotMultipartiteTournament(
          "arc between " + pair_text(u, v) + " inside the only partite set", std::pair{u, v});
    }
    throw NotMultipartiteTournament(
        "the non-adjacency relation leaves fewer than two partite sets", std::nullopt);
  }
  PartiteStructure result(std::move(parts));
  validate_multipartite_tournament(d, result);
  return result;
}

void validate_multipartite_tournament(const Digraph& d, const PartiteStructure& parts) {
  const std::size_t n = d.size();
  if (parts.vertex_count() != n) {
    throw NotMultipartiteTournament("partite sets cover " + std::to_string(parts.vertex_count()) +
                                        " vertices but the digraph has " + std::to_string(n),
                                    std::nullopt);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool forward = d.has_arc(u, v);
      const bool backward = d.has_arc(v, u);
      if (parts.part_of(u) == parts.part_of(v)) {
        if (forward || backward) {
          throw NotMultipartiteTournament(
              "arc between " + pair_text(u, v) + " inside one partite set", std::pair{u, v});
        }
      } else if (forward && backward) {
        throw NotMultipartiteTournament("arcs in both directions between " + pair_text(u, v),
                                        std::pair{u, v});
      } else if (!forward && !backward) {
        throw NotMultipartiteTournament(
            "no arc between " + pair_text(u, v) + " from different partite sets", std::pair{u, v});
      }
    }
  }
}

bool partite_related(const VertexSet& x, const VertexSet& y, const PartiteStructure& parts) {
  const VertexSet both = x | y;
  const std::optional<std::size_t> v = both.lowest();
  if (!v) return true;
  return both.is_subset_of(parts.part(parts.part_of(*v)));
}

VertexSet StrongDecomposition::span(std::size_t first, std::size_t last) const {
  VertexSet out(component_of.size());
  for (std::size_t i = first; i < last && i < components.size(); ++i) out |= components[i];
  return out;
}

StrongDecomposition ordered_strong_components(const Digraph& d) {
  const std::size_t n = d.size();

  // Iterative Tarjan.
  std::vector<std::size_t> index(n, kUnset);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> scc_of(n, kUnset);
  std::size_t scc_count = 0;
  std::size_t counter = 0;

  struct Frame {
    std::size_t vertex;
    std::vector<std::size_t> successors;
    std::size_t next;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> call{{root, d.out_neighbors(root).members(), 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const std::size_t u = frame.vertex;
      if (frame.next < frame.successors.size()) {
        const std::size_t v = frame.successors[frame.next++];
        if (index[v] == kUnset) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          call.push_back({v, d.out_neighbors(v).members(), 0});
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        std::size_t w = kUnset;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc_of[w] = scc_count;
        } while (w != u);
        ++scc_count;
      }
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[u]);
      }
    }
  }

  // Condensation, then Kahn's algorithm keyed by each component's lowest vertex.
  std::vector<VertexSet> members(scc_count, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) members[scc_of[v]].insert(v);
  std::vector<std::vector<std::size_t>> successors(scc_count);
  std::vector<std::size_t> indegree(scc_count, 0);
  for (std::size_t c = 0; c < scc_count; ++c) {
    VertexSet reach(n);
    members[c].for_each([&](std::size_t u) { reach |= d.out_neighbors(u); });
    reach -= members[c];
    std::vector<bool> seen(scc_count, false);
    reach.for_each([&](std::size_t v) {
      const std::size_t target = scc_of[v];
      if (!seen[target]) {
        seen[target] = true;
        successors[c].push_back(target);
        ++indegree[target];
      }
    });
  }

  using Key = std::pair<std::size_t, std::size_t>;  // (lowest vertex, scc id)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (std::size_t c = 0; c < scc_count; ++c) {
    if (indegree[c] == 0) ready.emplace(*members[c].lowest(), c);
  }
  StrongDecomposition out;
  out.component_of.assign(n, kUnset);
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    const std::size_t position = out.components.size();
    members[c].for_each([&](std::size_t v) { out.component_of[v] = position; });
    out.components.push_back(members[c]);
    for (std::size_t next : successors[c]) {
      if (--indegree[next] == 0) ready.emplace(*members[next].lowest(), next);
    }
  }
  for (std::size_t i = out.components.size(); i-- > 0;) {
    if (out.components[i].size() >= 2) {
      out.last_nontrivial = i;
      break;
    }
  }
  return out;
}

ImprimitivityProfile index_of_imprimitivity(const Digraph& d, const VertexSet& comp) {
  if (comp.universe() != d.size()) {
    throw std::invalid_argument("component is over a different vertex universe");
  }
  if (comp.size() < 2) {
    throw std::invalid_argument("index of imprimitivity needs a nontrivial component");
  }
  const std::size_t n = d.size();
  const std::size_t root = *comp.lowest();

  std::vector<std::size_t> level(n, kUnset);
  level[root] = 0;
  std::vector<std::size_t> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    (d.out_neighbors(u) & comp).for_each([&](std::size_t v) {
      if (level[v] == kUnset) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    });
  }
  if (queue.size() != comp.size()) {
    throw std::invalid_argument("component is not strongly connected");
  }
  // Every vertex must also reach the root.
  const BoolMatrix reverse = d.adjacency().transpose();
  VertexSet back(n);
  back.insert(root);
  std::vector<std::size_t> frontier{root};
  while (!frontier.empty()) {
    const std::size_t u = frontier.back();
    frontier.pop_back();
    ((reverse.row_set(u) & comp) - back).for_each([&](std::size_t v) {
      back.insert(v);
      frontier.push_back(v);
    });
  }
  if (back != comp) throw std::invalid_argument("component is not strongly connected");

  std::size_t g = 0;
  comp.for_each([&](std::size_t u) {
    (d.out_neighbors(u) & comp).for_each([&](std::size_t v) {
      const auto lu = static_cast<long long>(level[u]);
      const auto lv = static_cast<long long>(level[v]);
      g = std::gcd(g, static_cast<std::size_t>(std::llabs(lu + 1 - lv)));
    });
  });

  ImprimitivityProfile profile;
  profile.kappa = g;
  profile.classes.assign(g, VertexSet(n));
  comp.for_each([&](std::size_t v) { profile.classes[level[v] % g].insert(v); });
  return profile;
}

PartiteStructure align_partite_labels(const PartiteStructure& parts,
                                      const ImprimitivityProfile& profile,
                                      const VertexSet& t_comp) {
  const std::size_t kappa = profile.kappa;
  if (kappa < 2 || kappa > 4) {
    throw std::invalid_argument("label alignment needs kappa in {2, 3, 4}");
  }
  const std::size_t leading = kappa == 4 ? 2 : kappa;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < leading; ++i) {
    const std::size_t p = parts.part_of(*profile.classes[i].lowest());
    VertexSet expected = profile.classes[i];
    if (kappa == 4) expected |= profile.classes[i + 2];
    if ((parts.part(p) & t_comp) != expected ||
        std::find(chosen.begin(), chosen.end(), p) != chosen.end()) {
      throw InternalError("sets of imprimitivity do not align with the partite sets");
    }
    chosen.push_back(p);
  }
  std::vector<VertexSet> relabeled;
  for (std::size_t p : chosen) relabeled.push_back(parts.part(p));
  for (std::size_t p = 0; p < parts.part_count(); ++p) {
    if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) continue;
    if (parts.part(p).intersects(t_comp)) {
      throw InternalError("a partite set meets Q_t outside the sets of imprimitivity");
    }
    relabeled.push_back(parts.part(p));
  }
  return PartiteStructure(std::move(relabeled));
}

HeadData head_completing_index(const Digraph& d, const PartiteStructure& parts,
                               const StrongDecomposition& decomposition) {
  if (!decomposition.last_nontrivial) {
    throw std::invalid_argument("head completing index needs a nontrivial component");
  }
  const std::size_t t = *decomposition.last_nontrivial;
  const VertexSet& qt = decomposition.components[t];

  // Parts meeting Q_t; a partite set of Q_r is related to one of Q_t iff its
  // part meets Q_t.
  VertexSet related(d.size());
  for (const VertexSet& part : parts.parts()) {
    if (part.intersects(qt)) related |= part;
  }
  HeadData head;
  for (std::size_t i = t; i-- > 0;) {
    if (!decomposition.components[i].is_subset_of(related)) {
      head.r = i + 1;
      break;
    }
  }
  const VertexSet middle = decomposition.span(head.r, t + 1);
  head.a1 = parts.part(0) & middle;
  head.a2 = parts.part(1) & middle;
  return head;
}

StructureReport analyze(const Digraph& d) { return analyze(d, infer_partite_sets(d)); }

StructureReport analyze(const Digraph& d, const PartiteStructure& given) {
  validate_multipartite_tournament(d, given);
  StructureReport report{given, ordered_strong_components(d), std::nullopt, std::nullopt};
  if (!report.decomposition.last_nontrivial) return report;

  const VertexSet& qt = report.decomposition.components[*report.decomposition.last_nontrivial];
  ImprimitivityProfile profile = index_of_imprimitivity(d, qt);
  if (profile.kappa < 1 || profile.kappa > 4) {
    throw InternalError("index of imprimitivity " + std::to_string(profile.kappa) +
                        " outside {1, 2, 3, 4}");
  }
  if (profile.kappa >= 2) report.parts = align_partite_labels(report.parts, profile, qt);
  report.profile = std::move(profile);
  report.head = head_completing_index(d, report.parts, report.decomposition);
  return report;
}

}  // namespace mstep
