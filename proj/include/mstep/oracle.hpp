#pragma once

// Ground truth for {C^m(D)}: direct Boolean-matrix computation and detection
// of the eventual period. Nothing here depends on structural theory, and it
// accepts arbitrary digraphs, not only multipartite tournaments.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mstep/graph.hpp"

namespace mstep {

inline constexpr std::size_t kDefaultStepBudget = 10000;

/// Period-detection budget: TD_BUDGET from the environment when it holds a
/// positive integer, kDefaultStepBudget otherwise.
std::size_t step_budget_from_env();

/// A computation that needs the oracle could not finish within its budget.
/// The answer is undetermined, not wrong.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// u ~ v iff u != v and they have a common m-step prey. Throws for m == 0.
UndirectedGraph m_step_competition_graph(const Digraph& d, std::size_t m);

/// C^1(D), ..., C^{m_max}(D), computed incrementally.
std::vector<UndirectedGraph> competition_sequence(const Digraph& d, std::size_t m_max);

struct SequenceReport {
  /// Least N0 >= 1 with C^m = C^{m+p} for all m >= N0.
  std::size_t preperiod = 1;
  /// Minimal period p of the competition-graph sequence.
  std::size_t period = 1;
  /// C^{N0}, ..., C^{N0+p-1}.
  std::vector<UndirectedGraph> cycle_graphs;
  /// Preperiod and period of the power sequence A^m itself.
  std::size_t power_preperiod = 1;
  std::size_t power_period = 1;

  /// C^m(D) for m >= preperiod.
  const UndirectedGraph& graph_at(std::size_t m) const;
};

/// Iterates P <- P * A from P = A, hashing every state, until some A^m
/// repeats; the C-sequence period is then the least divisor of the power
/// period that fits, and its preperiod is found by walking back from the
/// power preperiod. Returns nullopt when no repeat occurs within `max_steps`
/// powers. Throws for max_steps == 0.
std::optional<SequenceReport> detect_period(const Digraph& d, std::size_t max_steps);

/// Reference check by dynamic programming over walk lengths: whether u and
/// v share an m-step prey. Kept deliberately naive. Throws
/// std::invalid_argument when n > 12 or m > 64.
bool walk_count_reference(const Digraph& d, std::size_t m, std::size_t u, std::size_t v);

}  // namespace mstep
