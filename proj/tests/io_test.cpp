#include <gtest/gtest.h>

#include "mstep/generator.hpp"
#include "mstep/io.hpp"
#include "support.hpp"

namespace mstep {
namespace {

TEST(MatrixFormat, RoundTrip) {
  const Digraph d = testing::digraph_from_text(testing::kA1);
  EXPECT_EQ(d.arc_count(), 12u);
  EXPECT_EQ(serialize(d, GraphFormat::matrix), testing::kA1);
}

TEST(MatrixFormat, AcceptsCrlfAndTrailingBlankLines) {
  const Digraph d = parse_digraph("01\r\n10\r\n\n\n", GraphFormat::matrix);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_TRUE(d.has_arc(1, 0));
}

TEST(MatrixFormat, ReportsPositionOfBadCharacter) {
  try {
    parse_digraph("010\n0x0\n000\n", GraphFormat::matrix);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(MatrixFormat, RejectsRaggedRowsAndLoops) {
  EXPECT_THROW(parse_digraph("01\n1\n", GraphFormat::matrix), ParseError);
  EXPECT_THROW(parse_digraph("", GraphFormat::matrix), ParseError);
  try {
    parse_digraph("10\n00\n", GraphFormat::matrix);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 1u);
  }
  // the generic reader keeps the diagonal
  EXPECT_TRUE(parse_matrix_text("10\n00\n").get(0, 0));
}

TEST(JsonFormat, RoundTripWithPartiteSets) {
  const std::size_t sizes[] = {1, 3, 2};
  const Instance inst = random_multipartite_tournament(sizes, 5);
  const std::string text = serialize(inst.digraph, GraphFormat::json, inst.parts);
  const DigraphDocument doc = parse_document(text, GraphFormat::json);
  EXPECT_EQ(doc.digraph, inst.digraph);
  ASSERT_TRUE(doc.partite_sets.has_value());
  EXPECT_EQ(*doc.partite_sets, inst.parts);
}

TEST(JsonFormat, PartiteSetsAreOptional) {
  const DigraphDocument doc =
      parse_document(R"({"n": 3, "arcs": [[0, 1], [2, 1]]})", GraphFormat::json);
  EXPECT_EQ(doc.digraph.arc_count(), 2u);
  EXPECT_FALSE(doc.partite_sets.has_value());
}

TEST(JsonFormat, SyntaxErrorHasLineAndColumn) {
  try {
    parse_document("{\n  \"n\": 3,\n  \"arcs\": [[0, 1],]\n}", GraphFormat::json);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(JsonFormat, SemanticErrorsNameTheArc) {
  try {
    parse_document(R"({"n": 2, "arcs": [[0, 1], [1, 5]]})", GraphFormat::json);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("arcs[1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_document(R"({"n": 2, "arcs": [[1, 1]]})", GraphFormat::json), ParseError);
  EXPECT_THROW(parse_document(R"({"arcs": []})", GraphFormat::json), ParseError);
  EXPECT_THROW(
      parse_document(R"({"n": 2, "arcs": [], "partite_sets": [[0, 1]]})", GraphFormat::json),
      ParseError);
}

TEST(DotFormat, ClustersBecomePartiteSets) {
  const Digraph d = testing::digraph_from_text(testing::kThreeParts);
  const PartiteStructure parts({VertexSet(6, {0}), VertexSet(6, {1, 2, 3}), VertexSet(6, {4, 5})});
  const std::string dot = serialize(d, GraphFormat::dot, parts);
  EXPECT_NE(dot.find("subgraph cluster_2"), std::string::npos);
  const DigraphDocument doc = parse_document(dot, GraphFormat::dot);
  EXPECT_EQ(doc.digraph, d);
  ASSERT_TRUE(doc.partite_sets.has_value());
  EXPECT_EQ(*doc.partite_sets, parts);
}

TEST(DotFormat, AcceptsAttributesCommentsAndChains) {
  const char* text = R"(
    // leading comment
    strict digraph "g" {
      node [shape=circle];
      0 [label="a"];
      0 -> 1 -> 2 [color=red];
      /* block */ 3;
    }
  )";
  const Digraph d = parse_digraph(text, GraphFormat::dot);
  EXPECT_EQ(d.size(), 4u);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_TRUE(d.has_arc(1, 2));
  EXPECT_EQ(d.arc_count(), 2u);
}

TEST(DotFormat, RejectsUndirectedEdgesAndBadTokens) {
  EXPECT_THROW(parse_digraph("digraph { 0 -- 1; }", GraphFormat::dot), ParseError);
  EXPECT_THROW(parse_digraph("graph { 0; }", GraphFormat::dot), ParseError);
  try {
    parse_digraph("digraph {\n  0 -> 1;\n  @\n}", GraphFormat::dot);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(DotFormat, UndirectedGraphExport) {
  UndirectedGraph g(3);
  g.add_edge(0, 2);
  const std::string dot = to_dot(g, "C");
  EXPECT_NE(dot.find("graph C"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 2"), std::string::npos);
}

TEST(FormatNames, DotInIsAnAlias) {
  EXPECT_EQ(graph_format_from_name("dot-in"), GraphFormat::dot);
  EXPECT_EQ(graph_format_from_name("matrix"), GraphFormat::matrix);
  EXPECT_FALSE(graph_format_from_name("xml").has_value());
  EXPECT_EQ(graph_format_name(GraphFormat::json), "json");
}

}  // namespace
}  // namespace mstep
