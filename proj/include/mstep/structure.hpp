#pragma once

// Structural quantities of a multipartite tournament D that the limit
// classification consumes: partite sets, ordered strong components Q_1..Q_s,
// the last nontrivial component Q_t, its index of imprimitivity and sets of
// imprimitivity, and the head completing index r with A_1 and A_2.
//
// Indexing convention: components are stored 0-based, so Q_i of the usual
// 1-based notation is components[i-1]. The head completing index r is kept
// as a count, which reads the same in both conventions: D_{1~r} is the union
// of the first r components, and r == 0 means "no such component".

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mstep/graph.hpp"

namespace mstep {

/// The input is not an orientation of a complete multipartite graph. The
/// witness, when present, is a vertex pair violating the structure.
class NotMultipartiteTournament : public std::runtime_error {
 public:
  NotMultipartiteTournament(const std::string& message,
                            std::optional<std::pair<std::size_t, std::size_t>> witness);

  const std::optional<std::pair<std::size_t, std::size_t>>& witness() const { return witness_; }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> witness_;
};

/// A structural result contradicts a known property of multipartite
/// tournaments (e.g. kappa > 4, or imprimitivity classes that cannot be
/// aligned with the partite sets).
/// Indicates a bug upstream, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parts are the connected components of the "no arc either way" relation,
/// ordered by their lowest vertex. Throws NotMultipartiteTournament if the
/// result is not a valid k-partition with k >= 2 and exactly one arc between
/// every cross-part pair.
PartiteStructure infer_partite_sets(const Digraph& d);

/// Throws NotMultipartiteTournament unless `parts` matches `d`: no arcs
/// inside a part, exactly one arc between each cross-part pair.
void validate_multipartite_tournament(const Digraph& d, const PartiteStructure& parts);

/// True iff some single part contains both x and y. The empty set is a
/// subset of every part.
bool partite_related(const VertexSet& x, const VertexSet& y, const PartiteStructure& parts);

struct StrongDecomposition {
  /// Q_1..Q_s: no arc goes from a later component to an earlier one.
  std::vector<VertexSet> components;
  /// 0-based index of the last nontrivial component, if any.
  std::optional<std::size_t> last_nontrivial;
  /// component_of[v] is the index of the component containing v.
  std::vector<std::size_t> component_of;

  std::size_t count() const { return components.size(); }
  /// Union of components[first..last); empty when first >= last.
  VertexSet span(std::size_t first, std::size_t last) const;
};

/// Tarjan's algorithm followed by a topological order of the condensation.
/// Among components that are ready at the same time, the one with the
/// smallest lowest vertex comes first.
StrongDecomposition ordered_strong_components(const Digraph& d);

struct ImprimitivityProfile {
  std::size_t kappa = 1;
  /// U_1..U_kappa in cyclic order: every arc inside the component goes from
  /// classes[i] to classes[(i+1) % kappa]. classes[0] holds the component's
  /// lowest vertex.
  std::vector<VertexSet> classes;
};

/// kappa is the gcd of level(u) + 1 - level(v) over arcs u->v inside `comp`,
/// with BFS levels from the lowest vertex; classes are the level residues
/// mod kappa. Throws std::invalid_argument unless `comp` induces a strongly
/// connected subdigraph on at least two vertices.
ImprimitivityProfile index_of_imprimitivity(const Digraph& d, const VertexSet& comp);

/// Relabels the parts so that V_i meets Q_t in U_i (kappa 2 or 3) or in
/// U_i and U_{i+2} (kappa 4). Parts not meeting Q_t follow in their original
/// relative order. Throws std::invalid_argument for kappa == 1 and
/// InternalError when no consistent relabeling exists.
PartiteStructure align_partite_labels(const PartiteStructure& parts,
                                      const ImprimitivityProfile& profile,
                                      const VertexSet& t_comp);

struct HeadData {
  /// Head completing index: the largest r < t such that Q_r has a partite
  /// set related to no partite set of Q_t, or 0.
  std::size_t r = 0;
  /// V_1 and V_2 intersected with Q_{r+1} .. Q_t.
  VertexSet a1;
  VertexSet a2;
};

/// Requires decomposition.last_nontrivial. `parts` should already be
/// aligned, since A_1/A_2 are read from the first two parts.
HeadData head_completing_index(const Digraph& d, const PartiteStructure& parts,
                               const StrongDecomposition& decomposition);

/// Everything above, computed in order. `parts` is aligned whenever the
/// last nontrivial component is imprimitive.
struct StructureReport {
  PartiteStructure parts;
  StrongDecomposition decomposition;
  std::optional<ImprimitivityProfile> profile;
  std::optional<HeadData> head;
};

/// Infers (or validates the given) partite sets and runs the full analysis.
/// Throws NotMultipartiteTournament for invalid input and InternalError if
/// kappa falls outside {1, 2, 3, 4}.
StructureReport analyze(const Digraph& d);
StructureReport analyze(const Digraph& d, const PartiteStructure& given);

}  // namespace mstep
