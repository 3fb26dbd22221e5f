#include <gtest/gtest.h>

#include "mstep/verify.hpp"
#include "support.hpp"

namespace mstep {
namespace {

TEST(Corpus, InstancesAreReproducibleAndInRange) {
  const CorpusSpec spec{50, 9, 4, 77};
  for (std::size_t i = 0; i < spec.count; ++i) {
    const Instance a = corpus_instance(spec, i);
    EXPECT_EQ(a.digraph, corpus_instance(spec, i).digraph);
    EXPECT_LE(a.digraph.size(), 9u);
    EXPECT_GE(a.parts.part_count(), 2u);
    EXPECT_LE(a.parts.part_count(), 4u);
    EXPECT_NO_THROW(validate_multipartite_tournament(a.digraph, a.parts));
  }
  EXPECT_THROW(corpus_instance({1, 1, 2, 0}, 0), std::invalid_argument);
  EXPECT_THROW(corpus_instance({1, 5, 1, 0}, 0), std::invalid_argument);
}

TEST(Verification, SummaryDoesNotDependOnJobs) {
  const CorpusSpec spec{120, 10, 5, 3};
  const VerificationSummary one = run_verification(spec, 1, kDefaultStepBudget);
  const VerificationSummary four = run_verification(spec, 4, kDefaultStepBudget);
  EXPECT_EQ(one.total, 120u);
  EXPECT_TRUE(one.all_agree());
  EXPECT_EQ(one.agreed, four.agreed);
  EXPECT_EQ(one.diverging, four.diverging);
  EXPECT_EQ(one.tag_counts, four.tag_counts);
}

TEST(Verification, EmptyCorpus) {
  const VerificationSummary s = run_verification({0, 12, 5, 1}, 2, kDefaultStepBudget);
  EXPECT_EQ(s.total, 0u);
  EXPECT_TRUE(s.all_agree());
}

TEST(Verification, ExhaustedBudgetIsReported) {
  const CorpusSpec spec{40, 12, 5, 1};
  const InstanceOutcome o = verify_instance(spec, 0, 1);
  EXPECT_FALSE(o.agree);
  EXPECT_FALSE(o.reason.empty());
  EXPECT_TRUE(verify_instance(spec, 0, kDefaultStepBudget).agree);
}

TEST(CompareWithOracle, DetectsInjectedMismatches) {
  const Digraph d = testing::digraph_from_text(testing::kA1);
  ClassifyOptions opts;
  opts.certify_bound = false;
  const Verdict good = classify(d, opts);
  const SequenceReport report = *detect_period(d, 1000);
  EXPECT_FALSE(compare_with_oracle(good, report, std::nullopt).has_value());

  Verdict wrong_graph = good;
  BoolMatrix adj = wrong_graph.graphs.at(0).adjacency();
  adj.set(4, 5, !adj.get(4, 5));
  adj.set(5, 4, !adj.get(5, 4));
  wrong_graph.graphs.at(0) = UndirectedGraph::from_matrix(adj);
  const auto graph_reason = compare_with_oracle(wrong_graph, report, std::nullopt);
  ASSERT_TRUE(graph_reason.has_value());
  EXPECT_NE(graph_reason->find("residue 0"), std::string::npos) << *graph_reason;

  Verdict wrong_period = good;
  wrong_period.period = 1;
  wrong_period.kind = VerdictKind::converges;
  EXPECT_TRUE(compare_with_oracle(wrong_period, report, std::nullopt).has_value());

  // vertex 0 has neighbours in every residue, so it is not an isolated tail
  EXPECT_TRUE(compare_with_oracle(good, report, VertexSet(6, {0})).has_value());
}

}  // namespace
}  // namespace mstep
