#pragma once

// Batch cross-check of the classifier against the oracle on a seeded corpus
// of random multipartite tournaments.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mstep/classify.hpp"
#include "mstep/generator.hpp"

namespace mstep {

struct CorpusSpec {
  std::size_t count = 1000;
  /// Vertex counts are drawn from [k, max_n].
  std::size_t max_n = 12;
  /// Part counts are drawn from [2, max_parts] (capped at max_n).
  std::size_t max_parts = 5;
  std::uint64_t seed = 1;
};

/// Instance `index` of the corpus. Depends only on (spec.seed, index, max_n,
/// max_parts): part count, sizes and the bias of the ranked generator are
/// drawn from an mt19937_64 seeded with a mix of seed and index. Biases cycle
/// through 0.5, 0.7, 0.85 and 0.95 so that long trivial tails, and with them
/// the diverging cases, show up regularly. Throws std::invalid_argument when
/// max_n < 2 or max_parts < 2.
Instance corpus_instance(const CorpusSpec& spec, std::size_t index);

/// Compares a verdict with the oracle's report: period, kind, the graph at
/// every residue, and isolation of the tail vertices when `tail` is given.
/// Returns a description of the first disagreement, or nullopt.
std::optional<std::string> compare_with_oracle(const Verdict& verdict,
                                               const SequenceReport& report,
                                               const std::optional<VertexSet>& tail);

struct InstanceOutcome {
  std::size_t index = 0;
  bool agree = false;
  std::string case_tag;
  std::size_t period = 0;
  /// Set on disagreement or on an exception from either side.
  std::string reason;
};

/// Classifies instance `index`, runs the oracle and compares.
InstanceOutcome verify_instance(const CorpusSpec& spec, std::size_t index,
                                std::size_t step_budget);

struct VerificationSummary {
  std::size_t total = 0;
  std::size_t agreed = 0;
  std::size_t diverging = 0;
  std::map<std::string, std::size_t> tag_counts;
  /// Failing outcomes in index order.
  std::vector<InstanceOutcome> failures;

  bool all_agree() const { return agreed == total; }
};

/// Spreads the corpus over `jobs` threads (0 means hardware concurrency);
/// outcomes are merged by instance index, so the summary does not depend on
/// the job count.
VerificationSummary run_verification(const CorpusSpec& spec, std::size_t jobs,
                                     std::size_t step_budget);

}  // namespace mstep
