#include "mstep/classify.hpp"

#include <limits>
#include <utility>

namespace mstep {

std::string_view to_string(VerdictKind kind) {
  return kind == VerdictKind::converges ? "CONVERGES" : "DIVERGES";
}

std::string CaseTag::to_string() const {
  switch (kind) {
    case CaseKind::empty: return "empty";
    case CaseKind::last_kappa1: return "last-kappa1";
    case CaseKind::last_kappa2: return "last-kappa2";
    case CaseKind::last_kappa3: return "last-kappa3";
    case CaseKind::last_kappa4: return "last-kappa4";
    case CaseKind::kappa1: return "kappa1";
    case CaseKind::kappa2_bipartite_tail: return "kappa2-bipartite-tail";
    case CaseKind::kappa2_else: return "kappa2-else";
    case CaseKind::kappa4_else: return "kappa4-else";
    case CaseKind::kappa4_both: return "kappa4-both";
    case CaseKind::kappa4_single: return "kappa4-single(j=" + std::to_string(j) + ")";
    case CaseKind::kappa3_single: return "kappa3-single(j=" + std::to_string(j) + ")";
    case CaseKind::kappa3_dag:
      return "kappa3-dag(alpha=" + std::to_string(alpha) + ",j=" + std::to_string(j) + ")";
    case CaseKind::kappa3_else: return "kappa3-else";
  }
  return "?";
}

namespace {

constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

void check_inputs(const Digraph& d, const PartiteStructure& parts,
                  const StrongDecomposition& dec,
                  const std::optional<ImprimitivityProfile>& profile,
                  const std::optional<HeadData>& head) {
  const std::size_t n = d.size();
  if (parts.vertex_count() != n || dec.component_of.size() != n) {
    throw std::invalid_argument("structural data describes a different vertex count");
  }
  std::size_t covered = 0;
  for (const VertexSet& q : dec.components) {
    if (q.universe() != n) throw std::invalid_argument("component on a different vertex range");
    covered += q.size();
  }
  if (covered != n) throw std::invalid_argument("strong components do not partition the vertices");
  if (!dec.last_nontrivial) return;

  const std::size_t t = *dec.last_nontrivial;
  if (t >= dec.count() || dec.components[t].size() < 2) {
    throw std::invalid_argument("last nontrivial component index is wrong");
  }
  if (!profile || !head) {
    throw std::invalid_argument("imprimitivity profile and head data are required when a "
                                "nontrivial component exists");
  }
  if (profile->kappa != profile->classes.size() || profile->kappa < 1 || profile->kappa > 4) {
    throw std::invalid_argument("malformed imprimitivity profile");
  }
  VertexSet all(n);
  for (const VertexSet& u : profile->classes) all |= u;
  if (all != dec.components[t]) {
    throw std::invalid_argument("imprimitivity classes do not cover the last nontrivial component");
  }
  if (head->r > t) throw std::invalid_argument("head completing index exceeds t");

  const std::size_t kappa = profile->kappa;
  if (kappa == 1) return;
  if (parts.part_count() < (kappa == 4 ? 2 : kappa)) {
    throw std::invalid_argument("too few partite sets for kappa " + std::to_string(kappa));
  }
  for (std::size_t i = 0; i < kappa; ++i) {
    const std::size_t label = kappa == 4 ? i % 2 : i;
    if (!profile->classes[i].is_subset_of(parts.part(label))) {
      throw std::invalid_argument("partite sets are not aligned with the imprimitivity classes");
    }
  }
}

VertexSet localize(const VertexSet& global, const std::vector<std::size_t>& local_of,
                   std::size_t local_n) {
  VertexSet out(local_n);
  global.for_each([&](std::size_t v) {
    if (local_of[v] == kAbsent) throw std::logic_error("vertex outside the induced subdigraph");
    out.insert(local_of[v]);
  });
  return out;
}

VertexSet globalize(const VertexSet& local, const std::vector<std::size_t>& to_global,
                    std::size_t n) {
  VertexSet out(n);
  local.for_each([&](std::size_t v) { out.insert(to_global[v]); });
  return out;
}

// K^(1)..K^(4) of the kappa-3 templates: bind G_3 against the oracle limit of
// D_{1~t}, with K^(5..7) = U_1..U_3 fixed and the rest drawn from D_{1~t-1}.
std::vector<VertexSet> bind_kappa3_heads(const Digraph& d, const StrongDecomposition& dec,
                                         std::size_t t, const ImprimitivityProfile& profile,
                                         std::size_t budget) {
  const std::size_t n = d.size();
  const InducedDigraph sub = induced_subdigraph(d, dec.span(0, t + 1));
  const std::size_t local_n = sub.to_global.size();
  std::vector<std::size_t> local_of(n, kAbsent);
  for (std::size_t i = 0; i < local_n; ++i) local_of[sub.to_global[i]] = i;

  const auto report = detect_period(sub.digraph, budget);
  if (!report) {
    throw BudgetExhausted("oracle budget of " + std::to_string(budget) +
                             " steps exhausted while binding head cliques");
  }
  if (report->period != 1) {
    throw Discrepancy("D_{1~t} with kappa 3 does not converge (oracle period " +
                      std::to_string(report->period) + ")");
  }

  MatchConstraints constraints;
  constraints.known.assign(4, std::nullopt);
  for (const VertexSet& u : profile.classes) constraints.known.emplace_back(localize(u, local_of, local_n));
  constraints.pool = localize(dec.span(0, t), local_of, local_n);
  const auto match = match_template(report->cycle_graphs.front(),
                                    template_pattern(TemplateShape::g3), constraints);
  if (!match) throw Discrepancy("the kappa-3 head cliques could not be matched against G3");

  std::vector<VertexSet> heads;
  for (std::size_t i = 0; i < 4; ++i) heads.push_back(globalize((*match)[i], sub.to_global, n));
  return heads;
}

struct Builder {
  std::size_t n;
  Verdict v;

  void constant(UndirectedGraph g, std::string shape) {
    v.kind = VerdictKind::converges;
    v.period = 1;
    v.graphs.emplace(0, std::move(g));
    v.shapes.emplace(0, std::move(shape));
  }

  UndirectedGraph from_template(TemplateShape shape) const {
    GraphTemplate t{template_pattern(shape), {}};
    for (const VertexSet& k : v.cliques) t.cliques.emplace_back(k);
    return instantiate_template(t, n);
  }
};

}  // namespace

Verdict classify(const Digraph& d, const PartiteStructure& parts,
                 const StrongDecomposition& dec,
                 const std::optional<ImprimitivityProfile>& profile,
                 const std::optional<HeadData>& head, const ClassifyOptions& options) {
  check_inputs(d, parts, dec, profile, head);
  const std::size_t n = d.size();
  const std::size_t s = dec.count();
  Builder b{n, {}};
  DivergenceConditions& cond = b.v.conditions;
  cond.a = s >= 2;
  cond.b = dec.last_nontrivial.has_value();

  if (!dec.last_nontrivial) {
    b.v.tag = {CaseKind::empty};
    b.constant(UndirectedGraph(n), "I[D]");
  } else {
    const std::size_t t = *dec.last_nontrivial;
    cond.c = t + 1 < s;
    const std::size_t kappa = profile->kappa;
    const auto& u = profile->classes;
    const VertexSet& qt = dec.components[t];
    const VertexSet head_part = dec.span(0, head->r);
    const VertexSet upto_t = dec.span(0, t + 1);
    const VertexSet tail = dec.span(t + 1, s);
    const auto part = [&](std::size_t j) -> const VertexSet& { return parts.part(j - 1); };
    const std::string with_tail = cond.c ? " u I[tail]" : "";

    const auto complete_then_isolated = [&](CaseKind kind) {
      b.v.tag = {kind};
      b.constant(complete_on(upto_t).graph, cond.c ? "K[D1~t] u I[tail]" : "K[D]");
    };
    const auto g1_shape = [&](CaseKind kind) {
      b.v.tag = {kind};
      b.v.cliques = {head_part, head->a1, head->a2};
      b.constant(b.from_template(TemplateShape::g1), "G1" + with_tail);
    };

    if (kappa == 1) {
      complete_then_isolated(cond.c ? CaseKind::kappa1 : CaseKind::last_kappa1);
    } else if (kappa == 2) {
      if (!cond.c) {
        g1_shape(CaseKind::last_kappa2);
      } else if (tail.is_subset_of(part(1) | part(2))) {
        g1_shape(CaseKind::kappa2_bipartite_tail);
      } else {
        complete_then_isolated(CaseKind::kappa2_else);
      }
    } else if (kappa == 4) {
      const auto g2_cliques = [&] {
        b.v.cliques = {head_part, head->a1 - qt, head->a2 - qt, u[0], u[2], u[1], u[3]};
      };
      if (!cond.c) {
        b.v.tag = {CaseKind::last_kappa4};
        g2_cliques();
        b.constant(b.from_template(TemplateShape::g2), "G2");
      } else if (!tail.is_subset_of(part(1) | part(2))) {
        complete_then_isolated(CaseKind::kappa4_else);
      } else if (tail.intersects(part(1)) && tail.intersects(part(2))) {
        g1_shape(CaseKind::kappa4_both);
      } else {
        const std::size_t j = tail.is_subset_of(part(1)) ? 1 : 2;
        cond.iii = true;
        b.v.tag = {CaseKind::kappa4_single, j};
        g2_cliques();
        // tail in V_1: G_4 at even m; tail in V_2: G_4 at odd m.
        const std::size_t g4_residue = j == 1 ? 0 : 1;
        b.v.kind = VerdictKind::diverges;
        b.v.period = 2;
        b.v.graphs.emplace(g4_residue, b.from_template(TemplateShape::g4));
        b.v.graphs.emplace(1 - g4_residue, b.from_template(TemplateShape::g5));
        b.v.shapes.emplace(g4_residue, "G4 u I[tail]");
        b.v.shapes.emplace(1 - g4_residue, "G5 u I[tail]");
      }
    } else {  // kappa == 3
      std::size_t j = 0;
      std::size_t alpha = 0;
      if (cond.c) {
        for (std::size_t c = 1; c <= 3 && j == 0; ++c) {
          if (tail.is_subset_of(part(c))) {
            j = c;
            cond.i = true;
          }
        }
        // Split Q_{t+1..a-1} | Q_{a..s-1} (0-based), i.e. alpha = a in 1-based terms.
        for (std::size_t a = t + 2; a < s && j == 0; ++a) {
          const VertexSet first = dec.span(t + 1, a);
          const VertexSet second = dec.span(a, s);
          for (std::size_t c = 1; c <= 3 && j == 0; ++c) {
            if (partite_related(first, u[c - 1], parts) &&
                partite_related(second, u[c % 3], parts)) {
              j = c;
              alpha = a;
              cond.ii = true;
            }
          }
        }
      }
      if (cond.c && j == 0) {
        complete_then_isolated(CaseKind::kappa3_else);
      } else {
        b.v.cliques = bind_kappa3_heads(d, dec, t, *profile, options.step_budget);
        b.v.cliques.insert(b.v.cliques.end(), {u[0], u[1], u[2]});
        if (!cond.c) {
          b.v.tag = {CaseKind::last_kappa3};
          b.constant(b.from_template(TemplateShape::g3), "G3");
        } else {
          b.v.tag = cond.i ? CaseTag{CaseKind::kappa3_single, j}
                           : CaseTag{CaseKind::kappa3_dag, j, alpha};
          b.v.kind = VerdictKind::diverges;
          b.v.period = 3;
          for (std::size_t residue = 0; residue < 3; ++residue) {
            // i = m - j + 1 (mod 3), taken in {1, 2, 3}
            const std::size_t i = (residue + 3 - j % 3) % 3 + 1;
            const TemplateShape shape = periodic_shape(cond.ii, i);
            b.v.graphs.emplace(residue, b.from_template(shape));
            b.v.shapes.emplace(residue, std::string(template_name(shape)) + " u I[tail]");
          }
        }
      }
    }
  }

  if (options.certify_bound) {
    if (const auto report = detect_period(d, options.step_budget)) {
      b.v.stabilization_bound = report->preperiod;
    }
  }
  return std::move(b.v);
}

Verdict classify(const Digraph& d, const StructureReport& report, const ClassifyOptions& options) {
  return classify(d, report.parts, report.decomposition, report.profile, report.head, options);
}

Verdict classify(const Digraph& d, const ClassifyOptions& options) {
  return classify(d, analyze(d), options);
}

}  // namespace mstep
