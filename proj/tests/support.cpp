#include "support.hpp"

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "mstep/io.hpp"

namespace mstep::testing {

Digraph digraph_from_text(const char* rows) { return parse_digraph(rows, GraphFormat::matrix); }

BoolMatrix competition_rows(const char* rows) {
  BoolMatrix m = parse_matrix_text(rows);
  m.clear_diagonal();
  return m;
}

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && coin(engine)) d.add_arc(i, j);
    }
  }
  return d;
}

std::vector<std::size_t> random_sizes(std::size_t k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<std::size_t> sizes(k, 1);
  for (std::size_t extra = k; extra < n; ++extra) ++sizes[engine() % k];
  return sizes;
}

namespace {

// Simple cycles through `start` using only vertices > start in `allowed`.
void cycles_from(const Digraph& d, const VertexSet& allowed, std::size_t start, std::size_t at,
                 std::vector<bool>& on_path, std::size_t length, std::size_t& g) {
  for (std::size_t next : d.out_neighbors(at).members()) {
    if (!allowed.contains(next)) continue;
    if (next == start) {
      g = std::gcd(g, length);
    } else if (next > start && !on_path[next]) {
      on_path[next] = true;
      cycles_from(d, allowed, start, next, on_path, length + 1, g);
      on_path[next] = false;
    }
  }
}

}  // namespace

std::size_t cycle_length_gcd(const Digraph& d, const VertexSet& vertices) {
  std::size_t g = 0;
  std::vector<bool> on_path(d.size(), false);
  for (std::size_t start : vertices.members()) {
    on_path[start] = true;
    cycles_from(d, vertices, start, start, on_path, 1, g);
    on_path[start] = false;
  }
  return g;
}

bool strongly_connected(const Digraph& d, const VertexSet& vertices) {
  const std::vector<std::size_t> members = vertices.members();
  const auto reach = [&](std::size_t from, bool forward) {
    std::set<std::size_t> seen{from};
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : members) {
        const bool arc = forward ? d.has_arc(u, v) : d.has_arc(v, u);
        if (arc && seen.insert(v).second) stack.push_back(v);
      }
    }
    return seen.size();
  };
  return !members.empty() && reach(members[0], true) == members.size() &&
         reach(members[0], false) == members.size();
}

std::vector<bool> divergence_flags(const StructureReport& report) {
  const auto& comps = report.decomposition.components;
  const std::size_t s = comps.size();
  std::size_t t = 0;  // 1-based, 0 = none
  for (std::size_t i = 0; i < s; ++i) {
    if (comps[i].size() >= 2) t = i + 1;
  }
  const bool a = s >= 2;
  const bool b = t != 0;
  const bool c = b && t < s;
  bool i_flag = false;
  bool ii_flag = false;
  bool iii_flag = false;
  if (c && report.profile) {
    const auto& u = report.profile->classes;
    const std::size_t kappa = u.size();
    const auto part_of_class = [&](std::size_t j) {  // 1-based, cyclic
      return report.parts.part_of(*u[(j - 1) % kappa].lowest());
    };
    // Every tail component is a single vertex.
    std::vector<std::size_t> tail_parts;
    for (std::size_t q = t; q < s; ++q) tail_parts.push_back(report.parts.part_of(*comps[q].lowest()));
    const auto all_in = [&](std::size_t first, std::size_t last, std::size_t part) {
      for (std::size_t k = first; k < last; ++k) {
        if (tail_parts[k] != part) return false;
      }
      return true;
    };
    if (kappa == 3) {
      for (std::size_t j = 1; j <= 3; ++j) {
        if (all_in(0, tail_parts.size(), part_of_class(j))) i_flag = true;
        for (std::size_t split = 1; split < tail_parts.size(); ++split) {
          if (all_in(0, split, part_of_class(j)) &&
              all_in(split, tail_parts.size(), part_of_class(j + 1))) {
            ii_flag = true;
          }
        }
      }
    }
    if (kappa == 4) {
      for (std::size_t j = 1; j <= 2; ++j) {
        if (all_in(0, tail_parts.size(), part_of_class(j))) iii_flag = true;
      }
    }
  }
  return {a, b, c, i_flag, ii_flag, iii_flag};
}

std::vector<VertexSet> phase_set_heads(const Digraph& d, const StructureReport& report) {
  const std::size_t n = d.size();
  const auto& dec = report.decomposition;
  const std::size_t t = *dec.last_nontrivial;
  const auto& u = report.profile->classes;
  const VertexSet head = dec.span(0, t);
  const VertexSet upto_t = dec.span(0, t + 1);

  std::vector<unsigned> phase(n, 0);  // bit c = class offset c
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t v : u[c].members()) phase[v] = 1u << c;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x : head.members()) {
      unsigned p = 0;
      for (std::size_t y : d.out_neighbors(x).members()) {
        if (!upto_t.contains(y)) continue;
        // shift every member back by one class
        p |= ((phase[y] >> 1) | (phase[y] << 2)) & 7u;
      }
      if (p != phase[x]) {
        phase[x] = p;
        changed = true;
      }
    }
  }
  std::vector<VertexSet> k(4, VertexSet(n));
  for (std::size_t x : head.members()) {
    switch (phase[x]) {
      case 7: k[0].insert(x); break;
      case 3: k[1].insert(x); break;
      case 5: k[2].insert(x); break;
      case 6: k[3].insert(x); break;
      default: break;  // left out, which makes the comparison fail loudly
    }
  }
  return k;
}

Instance random_strong_instance(std::span<const std::size_t> sizes, std::uint64_t seed) {
  for (std::uint64_t s = seed; s < seed + 100000; ++s) {
    Instance inst = random_multipartite_tournament(sizes, s);
    if (strongly_connected(inst.digraph, VertexSet::full(inst.digraph.size()))) return inst;
  }
  throw std::runtime_error("no strong instance found for these part sizes");
}

}  // namespace mstep::testing
