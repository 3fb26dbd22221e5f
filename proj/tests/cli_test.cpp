#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mstep/io.hpp"
#include "mstep/verify.hpp"
#include "support.hpp"

namespace mstep {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mstep");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mstep-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, ClassifyDivergingReference) {
  const Result r = run_cli({"classify", write("a1.txt", testing::kA1)});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("DIVERGES period=3 case=kappa3-dag(alpha=2,j=2)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("kappa=3"), std::string::npos);
  // structure comes before the verdict
  EXPECT_LT(r.out.find("partite sets:"), r.out.find("DIVERGES"));
}

TEST_F(CliTest, ClassifyConvergingReferenceAsJson) {
  const Result r = run_cli({"classify", write("a2.txt", testing::kA2), "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"case_tag\": \"kappa3-else\""), std::string::npos) << r.out;
  const Result plain = run_cli({"classify", write("a2b.txt", testing::kA2)});
  EXPECT_NE(plain.out.find("CONVERGES case=kappa3-else"), std::string::npos) << plain.out;
}

TEST_F(CliTest, InvalidInputExitsWithTwo) {
  const Result cyclic = run_cli({"classify", write("bad.txt", "011\n101\n110\n")});
  EXPECT_EQ(cyclic.code, 2);
  EXPECT_NE(cyclic.err.find("not a multipartite tournament"), std::string::npos) << cyclic.err;

  const Result parse = run_cli({"classify", write("bad2.txt", "01\n1x\n")});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("parse error"), std::string::npos);

  EXPECT_EQ(run_cli({"classify", (dir_ / "missing.txt").string()}).code, 2);
}

TEST_F(CliTest, UsageErrorsExitWithOne) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"classify"}).code, 1);
  EXPECT_EQ(run_cli({"simulate", "f.txt", "--m-max", "0"}).code, 1);
  EXPECT_EQ(run_cli({"classify", "f.txt", "--format", "xml"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, VerifyEmptyAndSmallCorpora) {
  const Result empty = run_cli({"verify", "--count", "0", "--dump-dir", dir_.string()});
  EXPECT_EQ(empty.code, 0) << empty.err;
  EXPECT_NE(empty.out.find("0/0 agree"), std::string::npos) << empty.out;

  const Result small = run_cli({"verify", "--count", "30", "--max-n", "8", "--parts", "4",
                                "--seed", "5", "--jobs", "2", "--dump-dir", dir_.string()});
  EXPECT_EQ(small.code, 0) << small.out;
  EXPECT_NE(small.out.find("30/30 agree"), std::string::npos) << small.out;
  EXPECT_TRUE(fs::is_empty(dir_));
}

TEST_F(CliTest, GenerateIsDeterministicAndReadable) {
  const Result a = run_cli({"generate", "--parts", "3,2,2", "--seed", "9"});
  const Result b = run_cli({"generate", "--parts", "3,2,2", "--seed", "9"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run_cli({"generate", "--parts", "3,2,2", "--seed", "10"}).out);

  const Result c = run_cli({"classify", write("gen.json", a.out)});
  EXPECT_EQ(c.code, 0) << c.err;

  EXPECT_EQ(run_cli({"generate", "--parts", "4"}).code, 2);
}

TEST_F(CliTest, ExportToDotHasOneClusterPerPart) {
  const Result r = run_cli({"export", write("fig.txt", testing::kThreeParts), "--to", "dot"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cluster_2"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("cluster_3"), std::string::npos) << r.out;

  const Result back = run_cli({"classify", write("fig.dot", r.out)});
  EXPECT_EQ(back.code, 0) << back.err;
}

TEST_F(CliTest, SimulatePrintsOneMatrixPerStep) {
  const Result r = run_cli({"simulate", write("a1.txt", testing::kA1), "--m-max", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string steps = r.out.substr(0, r.out.find("preperiod="));
  EXPECT_NE(steps.find("C^1:"), std::string::npos) << r.out;
  EXPECT_EQ(steps.find("C^2:"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("period=3"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExhaustedBudgetLeavesTheBoundOpen) {
  ::setenv("TD_BUDGET", "1", 1);
  const Result r = run_cli({"classify", write("a2.txt", testing::kA2)});
  ::unsetenv("TD_BUDGET");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("CONVERGES"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("N undetermined"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExhaustedBudgetWhileBindingIsUndetermined) {
  // first corpus instance whose head cliques come from the oracle
  std::string text;
  for (std::size_t i = 0; text.empty(); ++i) {
    const Instance inst = corpus_instance(CorpusSpec{}, i);
    ClassifyOptions opts;
    opts.certify_bound = false;
    const Verdict v = classify(inst.digraph, opts);
    const bool kappa3 = v.tag.kind == CaseKind::kappa3_single || v.tag.kind == CaseKind::kappa3_dag ||
                        v.tag.kind == CaseKind::kappa3_else;
    if (kappa3 && v.cliques.size() == 7) {
      text = serialize(inst.digraph, GraphFormat::matrix);
    }
  }
  ::setenv("TD_BUDGET", "1", 1);
  const Result r = run_cli({"classify", write("head.txt", text)});
  ::unsetenv("TD_BUDGET");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("UNDETERMINED"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace mstep
