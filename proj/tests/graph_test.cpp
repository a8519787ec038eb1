#include "starseq/graph.hpp"

#include <gtest/gtest.h>

#include "starseq/error.hpp"
#include "starseq/oracle.hpp"

namespace starseq {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

TEST(ParseEdgeList, SingleEdge) {
  const auto g = parse_edge_list("2\n0 1\n");
  EXPECT_EQ(g.vertex_count(), 2U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(ParseEdgeList, PathWithCommentsAndBlanks) {
  const auto g = parse_edge_list("# P_4\n\n4\n0 1\n  # middle\n2 1\n2 3\n\n");
  EXPECT_EQ(g.vertex_count(), 4U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(ParseEdgeList, IsolatedVertexOnly) {
  const auto g = parse_edge_list("1\n");
  EXPECT_EQ(g.vertex_count(), 1U);
  EXPECT_EQ(g.edge_count(), 0U);
}

TEST(ParseEdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("3\n0 0\n"), 2U);                // self-loop
  EXPECT_EQ(error_line("3\n0 1\n# c\n1 3\n"), 4U);      // out of range
  EXPECT_EQ(error_line("3\n0 1\n1 2\n1 0\n"), 4U);      // duplicate
  EXPECT_EQ(error_line("3\n0 1 2\n"), 2U);              // malformed
  EXPECT_EQ(error_line("3\n0 x\n"), 2U);
  EXPECT_EQ(error_line("3\n-1 2\n"), 2U);
  EXPECT_EQ(error_line("# only a comment\n0\n"), 2U);  // n = 0
  EXPECT_EQ(error_line("3 4\n"), 1U);
}

TEST(ParseEdgeList, MissingHeader) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# nothing\n\n"), ParseError);
}

TEST(ParseEdgeList, SelfLoopMessage) {
  try {
    parse_edge_list("3\n0 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "line 2: self-loop at vertex 0");
  }
}

TEST(ParseGraph6, Examples) {
  EXPECT_EQ(parse_graph6("A_"), Graph(2, {{0, 1}}));
  EXPECT_EQ(parse_graph6("A?"), Graph(2, {}));
  const auto k4 = parse_graph6("C~");
  EXPECT_EQ(k4.vertex_count(), 4U);
  EXPECT_EQ(k4.edge_count(), 6U);
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), k4);
  EXPECT_EQ(parse_graph6("@"), Graph(1, {}));
}

TEST(ParseGraph6, HandBuiltAdjacency) {
  // Bit order is the upper triangle column by column: (0,1) (0,2) (1,2)
  // (0,3) (1,3) (2,3), six bits per character, most significant first.
  EXPECT_EQ(parse_graph6("Bw"), Graph(3, {{0, 1}, {0, 2}, {1, 2}}));  // 111000
  EXPECT_EQ(parse_graph6("BW"), Graph(3, {{0, 2}, {1, 2}}));          // 011000
  EXPECT_EQ(parse_graph6("B_"), Graph(3, {{0, 1}}));                  // 100000
  EXPECT_EQ(parse_graph6("Ch"), Graph(4, {{0, 1}, {1, 2}, {2, 3}}));  // 101001
  EXPECT_EQ(parse_graph6("Cs"), Graph(4, {{0, 1}, {0, 2}, {0, 3}}));  // 110100
  EXPECT_EQ(parse_graph6("Cl"), Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));  // 101101
}

TEST(ParseGraph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);       // truncated
  EXPECT_THROW(parse_graph6("C~~"), ParseError);     // trailing
  EXPECT_THROW(parse_graph6("C~ x"), ParseError);    // invalid character
  EXPECT_THROW(parse_graph6("A\x7f"), ParseError);
  EXPECT_THROW(parse_graph6("~?@~"), ParseError);    // n > 62 needs a long size
  EXPECT_THROW(parse_graph6("?"), ParseError);       // n = 0
}

TEST(Graph6, RoundTripsAllSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    }
  }
}

TEST(Graph, RejectsInvalidConstruction) {
  EXPECT_THROW(Graph(0, {}), DomainError);
  EXPECT_THROW(Graph(3, {{1, 1}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 3}}), DomainError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), DomainError);
}

TEST(Degrees, Examples) {
  EXPECT_EQ(degrees(Graph(2, {{0, 1}})), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(degrees(Graph(4, {{0, 1}, {1, 2}, {2, 3}})),
            (std::vector<std::size_t>{1, 2, 2, 1}));
  EXPECT_EQ(degrees(Graph(4, {{0, 1}, {0, 2}, {0, 3}})),
            (std::vector<std::size_t>{3, 1, 1, 1}));
}

TEST(FrequencySequence, Examples) {
  using C = std::vector<std::uint64_t>;
  EXPECT_EQ(frequency_sequence(Graph(2, {{0, 1}})).counts(), (C{0, 2}));
  EXPECT_EQ(frequency_sequence(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).counts(),
            (C{0, 2, 2, 0}));
  EXPECT_EQ(frequency_sequence(Graph(3, {{0, 1}})).counts(), (C{1, 2, 0}));
  EXPECT_EQ(frequency_sequence(Graph(1, {})).counts(), (C{1}));
}

TEST(FrequencySequence, HandshakingAndConsistency) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      const auto f = frequency_sequence(g);
      const auto deg = degrees(g);
      ASSERT_EQ(f.size(), n);
      EXPECT_EQ(f.total(), n);
      EXPECT_EQ(f.degree_sum(), 2 * g.edge_count());
      for (std::size_t i = 0; i < n; ++i)
        EXPECT_EQ(f[i], static_cast<std::uint64_t>(
                            std::count(deg.begin(), deg.end(), i)));
    }
  }
}

}  // namespace
}  // namespace starseq
