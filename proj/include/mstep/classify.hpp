#pragma once

// Closed-form classification of {C^m(D)} for a multipartite tournament D:
// whether it converges, and the limit graph or the periodic family.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mstep/oracle.hpp"
#include "mstep/structure.hpp"
#include "mstep/templates.hpp"

namespace mstep {

enum class VerdictKind { converges, diverges };

std::string_view to_string(VerdictKind kind);

enum class CaseKind {
  empty,                  // no nontrivial component
  last_kappa1,            // t = s
  last_kappa2,
  last_kappa3,
  last_kappa4,
  kappa1,                 // t < s from here on
  kappa2_bipartite_tail,
  kappa2_else,
  kappa4_else,
  kappa4_both,
  kappa4_single,
  kappa3_single,
  kappa3_dag,
  kappa3_else,
};

/// Which branch of the case analysis produced a verdict. `j` is set for the
/// single-part and split cases, `alpha` (a 1-based component index) for the
/// split case only.
struct CaseTag {
  CaseKind kind = CaseKind::empty;
  std::size_t j = 0;
  std::size_t alpha = 0;

  /// e.g. "kappa3-dag(alpha=2,j=2)", "kappa4-single(j=1)", "last-kappa2".
  std::string to_string() const;
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// The divergence criterion, flag by flag. (a) s >= 2, (b) some strong
/// component is nontrivial, (c) t < s; (i) kappa 3 with the tail inside one
/// V_j, (ii) kappa 3 with the tail split across U_j, U_{j+1}, (iii) kappa 4
/// with the tail inside V_1 or V_2.
struct DivergenceConditions {
  bool a = false;
  bool b = false;
  bool c = false;
  bool i = false;
  bool ii = false;
  bool iii = false;

  bool diverges() const { return a && b && c && (i || ii || iii); }
  friend bool operator==(const DivergenceConditions&, const DivergenceConditions&) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::converges;
  /// 1 when converging, 2 or 3 when diverging.
  std::size_t period = 1;
  /// C^m(D) for all large m, keyed by m mod period.
  std::map<std::size_t, UndirectedGraph> graphs;
  /// Human-readable shape per residue, e.g. "G1,2 u I[tail]".
  std::map<std::size_t, std::string> shapes;
  CaseTag tag;
  /// Oracle-certified N with C^m(D) = graphs[m % period] for m >= N.
  std::optional<std::size_t> stabilization_bound;
  DivergenceConditions conditions;
  /// Cliques K^(1), K^(2), ... of the template in use; empty when the
  /// answer is K[.] u I[.].
  std::vector<VertexSet> cliques;

  const UndirectedGraph& graph_at(std::size_t m) const { return graphs.at(m % period); }
};

struct ClassifyOptions {
  /// Run the oracle to fill Verdict::stabilization_bound.
  bool certify_bound = true;
  /// Step budget for every oracle call made while classifying.
  std::size_t step_budget = kDefaultStepBudget;
};

/// The classifier's predicted graph disagrees with the oracle, or a template
/// could not be bound on a legal instance.
class Discrepancy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument when the structural inputs do not belong to
/// `d` (sizes, missing profile or head data, unaligned parts), Discrepancy
/// when the kappa-3 head cliques cannot be bound, and BudgetExhausted when
/// binding needs an oracle call that exhausts its budget.
Verdict classify(const Digraph& d, const PartiteStructure& parts,
                 const StrongDecomposition& decomposition,
                 const std::optional<ImprimitivityProfile>& profile,
                 const std::optional<HeadData>& head, const ClassifyOptions& options = {});

Verdict classify(const Digraph& d, const StructureReport& report,
                 const ClassifyOptions& options = {});

/// analyze() followed by classify().
Verdict classify(const Digraph& d, const ClassifyOptions& options = {});

}  // namespace mstep
