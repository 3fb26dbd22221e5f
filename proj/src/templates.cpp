#include "mstep/templates.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace mstep {

namespace {

void require_disjoint(const VertexGraph& g1, const VertexGraph& g2) {
  if (g1.vertices.universe() != g2.vertices.universe()) {
    throw std::invalid_argument("graphs live on different vertex ranges");
  }
  if (g1.vertices.intersects(g2.vertices)) {
    throw std::invalid_argument("graph union/join needs disjoint vertex sets");
  }
}

UndirectedGraph merged_edges(const VertexGraph& g1, const VertexGraph& g2) {
  UndirectedGraph out = g1.graph;
  for (const auto& [u, v] : g2.graph.edges()) out.add_edge(u, v);
  return out;
}

}  // namespace

VertexGraph complete_on(const VertexSet& z) {
  UndirectedGraph g(z.universe());
  const std::vector<std::size_t> members = z.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) g.add_edge(members[i], members[j]);
  }
  return {z, std::move(g)};
}

VertexGraph empty_on(const VertexSet& z) {
  return {z, UndirectedGraph(z.universe())};
}

VertexGraph graph_union(const VertexGraph& g1, const VertexGraph& g2) {
  require_disjoint(g1, g2);
  return {g1.vertices | g2.vertices, merged_edges(g1, g2)};
}

VertexGraph graph_join(const VertexGraph& g1, const VertexGraph& g2) {
  require_disjoint(g1, g2);
  UndirectedGraph g = merged_edges(g1, g2);
  g1.vertices.for_each([&](std::size_t u) {
    g2.vertices.for_each([&](std::size_t v) { g.add_edge(u, v); });
  });
  return {g1.vertices | g2.vertices, std::move(g)};
}

BlockPattern BlockPattern::from_rows(std::initializer_list<std::string_view> rows) {
  BlockPattern p;
  p.size_ = rows.size();
  p.join_.assign(p.size_ * p.size_, false);
  std::size_t i = 0;
  for (std::string_view row : rows) {
    if (row.size() != p.size_) throw std::invalid_argument("block pattern must be square");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 'J' && row[j] != 'O') {
        throw std::invalid_argument("block pattern entries are 'J' or 'O'");
      }
      p.join_[i * p.size_ + j] = row[j] == 'J';
    }
    ++i;
  }
  for (std::size_t a = 0; a < p.size_; ++a) {
    if (!p.join_[a * p.size_ + a]) throw std::invalid_argument("block pattern diagonal must be J");
    for (std::size_t b = 0; b < a; ++b) {
      if (p.join_[a * p.size_ + b] != p.join_[b * p.size_ + a]) {
        throw std::invalid_argument("block pattern must be symmetric");
      }
    }
  }
  return p;
}

bool BlockPattern::joined(std::size_t i, std::size_t j) const {
  if (i == 0 || j == 0 || i > size_ || j > size_) {
    throw std::out_of_range("clique index " + std::to_string(i == 0 || i > size_ ? i : j) +
                            " outside 1.." + std::to_string(size_));
  }
  return join_[(i - 1) * size_ + (j - 1)];
}

std::vector<std::pair<std::size_t, std::size_t>> BlockPattern::join_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= size_; ++i) {
    for (std::size_t j = i + 1; j <= size_; ++j) {
      if (joined(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

BlockPattern BlockPattern::with_joins(
    std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) const {
  BlockPattern p = *this;
  for (const auto& [i, j] : pairs) {
    (void)joined(i, j);  // range check
    p.join_[(i - 1) * size_ + (j - 1)] = true;
    p.join_[(j - 1) * size_ + (i - 1)] = true;
  }
  return p;
}

namespace {

const BlockPattern kM1 = BlockPattern::from_rows({
    "JJJ",
    "JJO",
    "JOJ",
});

const BlockPattern kM2 = BlockPattern::from_rows({
    "JJJJJJJ",
    "JJOJJOO",
    "JOJOOJJ",
    "JJOJOOO",
    "JJOOJOO",
    "JOJOOJO",
    "JOJOOOJ",
});

const BlockPattern kM3 = BlockPattern::from_rows({
    "JJJJJJJ",
    "JJJJJJO",
    "JJJJJOJ",
    "JJJJOJJ",
    "JJJOJOO",
    "JJOJOJO",
    "JOJJOOJ",
});

const BlockPattern kM4 = BlockPattern::from_rows({
    "JJJJJJJ",
    "JJOJJOO",
    "JOJOOJJ",
    "JJOJJOO",
    "JJOJJOO",
    "JOJOOJO",
    "JOJOOOJ",
});

const BlockPattern kM5 = BlockPattern::from_rows({
    "JJJJJJJ",
    "JJOJJOO",
    "JOJOOJJ",
    "JJOJOOO",
    "JJOOJOO",
    "JOJOOJJ",
    "JOJOOJJ",
});

const BlockPattern kG11 = BlockPattern::from_rows({
    "JJJJJJJ",
    "JJJJJJJ",
    "JJJJJJJ",
    "JJJJOJJ",
    "JJJOJOO",
    "JJJJOJJ",
    "JJJJOJJ",
});

const BlockPattern kG12 = BlockPattern::from_rows({
    "JJJJJJJ",
    "JJJJJJO",
    "JJJJJJJ",
    "JJJJJJJ",
    "JJJJJJO",
    "JJJJJJO",
    "JOJJOOJ",
});

const BlockPattern kG13 = BlockPattern::from_rows({
    "JJJJJJJ",
    "JJJJJJJ",
    "JJJJJOJ",
    "JJJJJJJ",
    "JJJJJOJ",
    "JJOJOJO",
    "JJJJJOJ",
});

// G_{2,1}: K5 v (K4 u K7); G_{2,2}: K7 v (K2 u K6); G_{2,3}: K6 v (K3 u K5).
const BlockPattern kG21 = kG11.with_joins({{5, 4}, {5, 7}});
const BlockPattern kG22 = kG12.with_joins({{7, 2}, {7, 6}});
const BlockPattern kG23 = kG13.with_joins({{6, 3}, {6, 5}});

}  // namespace

const BlockPattern& template_pattern(TemplateShape shape) {
  switch (shape) {
    case TemplateShape::g1: return kM1;
    case TemplateShape::g2: return kM2;
    case TemplateShape::g3: return kM3;
    case TemplateShape::g4: return kM4;
    case TemplateShape::g5: return kM5;
    case TemplateShape::g1_1: return kG11;
    case TemplateShape::g1_2: return kG12;
    case TemplateShape::g1_3: return kG13;
    case TemplateShape::g2_1: return kG21;
    case TemplateShape::g2_2: return kG22;
    case TemplateShape::g2_3: return kG23;
  }
  throw std::invalid_argument("unknown template shape");
}

std::string_view template_name(TemplateShape shape) {
  switch (shape) {
    case TemplateShape::g1: return "G1";
    case TemplateShape::g2: return "G2";
    case TemplateShape::g3: return "G3";
    case TemplateShape::g4: return "G4";
    case TemplateShape::g5: return "G5";
    case TemplateShape::g1_1: return "G1,1";
    case TemplateShape::g1_2: return "G1,2";
    case TemplateShape::g1_3: return "G1,3";
    case TemplateShape::g2_1: return "G2,1";
    case TemplateShape::g2_2: return "G2,2";
    case TemplateShape::g2_3: return "G2,3";
  }
  return "?";
}

TemplateShape periodic_shape(bool augmented, std::size_t i) {
  static constexpr TemplateShape plain[] = {TemplateShape::g1_1, TemplateShape::g1_2,
                                            TemplateShape::g1_3};
  static constexpr TemplateShape aug[] = {TemplateShape::g2_1, TemplateShape::g2_2,
                                          TemplateShape::g2_3};
  if (i < 1 || i > 3) throw std::out_of_range("periodic template index must be 1, 2 or 3");
  return augmented ? aug[i - 1] : plain[i - 1];
}

UndirectedGraph instantiate_template(const GraphTemplate& t, std::size_t total_vertices) {
  const BlockPattern& p = t.pattern;
  if (t.cliques.size() != p.size()) {
    throw std::invalid_argument("template has " + std::to_string(t.cliques.size()) +
                                " cliques but its pattern has " + std::to_string(p.size()));
  }
  std::vector<VertexSet> cliques;
  VertexSet used(total_vertices);
  for (const auto& c : t.cliques) {
    VertexSet k(total_vertices);
    if (c) {
      if (c->universe() != total_vertices) {
        throw std::invalid_argument("clique lives on a different vertex range");
      }
      if (c->intersects(used)) throw std::invalid_argument("template cliques overlap");
      k = *c;
      used |= k;
    }
    cliques.push_back(std::move(k));
  }

  UndirectedGraph g(total_vertices);
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (std::size_t j = i; j < cliques.size(); ++j) {
      if (!p.joined(i + 1, j + 1)) continue;
      cliques[i].for_each([&](std::size_t u) {
        cliques[j].for_each([&](std::size_t v) {
          if (u != v) g.add_edge(u, v);
        });
      });
    }
  }
  return g;
}

namespace {

// Adjacency of a closed-neighbourhood class towards a vertex set: all, none,
// or mixed (which no template can produce).
enum class Contact { none, all, mixed };

Contact contact(const UndirectedGraph& g, std::size_t representative, const VertexSet& target) {
  VertexSet closed = g.neighbors(representative);
  closed.insert(representative);
  const VertexSet hit = closed & target;
  if (hit.empty()) return Contact::none;
  return hit == target ? Contact::all : Contact::mixed;
}

struct MatchSearch {
  const UndirectedGraph& g;
  const BlockPattern& pattern;
  const std::vector<std::optional<VertexSet>>& known;
  std::vector<VertexSet> classes;
  std::vector<std::size_t> unknown;  // 1-based indices
  std::vector<std::size_t> assigned;  // per class, 1-based index
  std::vector<bool> taken;            // per position in `unknown`

  bool consistent(std::size_t c, std::size_t index) const {
    const std::size_t rep = *classes[c].lowest();
    for (std::size_t j = 1; j <= pattern.size(); ++j) {
      const auto& k = known[j - 1];
      if (!k || k->empty()) continue;
      const Contact want = pattern.joined(index, j) ? Contact::all : Contact::none;
      if (contact(g, rep, *k) != want) return false;
    }
    for (std::size_t other = 0; other < c; ++other) {
      const bool adjacent = g.has_edge(rep, *classes[other].lowest());
      if (adjacent != pattern.joined(index, assigned[other])) return false;
    }
    return true;
  }

  std::vector<VertexSet> cliques() const {
    std::vector<VertexSet> out;
    for (const auto& k : known) out.push_back(k ? *k : VertexSet(g.size()));
    for (std::size_t c = 0; c < classes.size(); ++c) out[assigned[c] - 1] = classes[c];
    return out;
  }

  bool reproduces_graph() const {
    GraphTemplate full{pattern, {}};
    for (auto& k : cliques()) full.cliques.emplace_back(std::move(k));
    return instantiate_template(full, g.size()) == g;
  }

  bool search(std::size_t c) {
    if (c == classes.size()) return reproduces_graph();
    for (std::size_t slot = 0; slot < unknown.size(); ++slot) {
      if (taken[slot] || !consistent(c, unknown[slot])) continue;
      taken[slot] = true;
      assigned[c] = unknown[slot];
      if (search(c + 1)) return true;
      taken[slot] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<VertexSet>> match_template(const UndirectedGraph& g,
                                                     const BlockPattern& pattern,
                                                     const MatchConstraints& constraints) {
  const std::size_t n = g.size();
  if (constraints.known.size() != pattern.size()) {
    throw std::invalid_argument("match constraints must list every clique of the pattern");
  }

  // Group pool vertices by closed neighbourhood, in order of lowest member.
  std::map<std::vector<Word>, std::size_t> class_of_key;
  std::vector<VertexSet> classes;
  constraints.pool.for_each([&](std::size_t v) {
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    std::vector<Word> key(closed.words().begin(), closed.words().end());
    auto [it, fresh] = class_of_key.emplace(std::move(key), classes.size());
    if (fresh) classes.emplace_back(n);
    classes[it->second].insert(v);
  });

  MatchSearch s{g, pattern, constraints.known, std::move(classes), {}, {}, {}};
  for (std::size_t i = 1; i <= pattern.size(); ++i) {
    if (!constraints.known[i - 1]) s.unknown.push_back(i);
  }
  if (s.classes.size() > s.unknown.size()) return std::nullopt;
  s.assigned.assign(s.classes.size(), 0);
  s.taken.assign(s.unknown.size(), false);
  if (!s.search(0)) return std::nullopt;
  return s.cliques();
}

}  // namespace mstep
