#include "starseq/star.hpp"

#include <gtest/gtest.h>

#include "starseq/error.hpp"
#include "starseq/oracle.hpp"
#include "test_graphs.hpp"

namespace starseq {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::edgeless;
using testing::k2_plus_isolated;
using testing::path_graph;
using testing::star_graph;

std::vector<BigInt> raw(const StarSequence& s) {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < s.vertex_count(); ++k) out.push_back(s[k]);
  return out;
}

FrequencySequence freq(std::vector<std::uint64_t> counts) {
  return FrequencySequence(std::move(counts));
}

TEST(StarSequence, Examples) {
  EXPECT_EQ(raw(star_sequence(path_graph(4))), (std::vector<BigInt>{3, 2, 0}));
  EXPECT_EQ(raw(star_sequence(star_graph(3))), (std::vector<BigInt>{3, 3, 1}));
  const auto single = star_sequence(edgeless(1));
  EXPECT_TRUE(single.adjusted_sequence().empty());
  EXPECT_EQ(single[1], 0);
}

TEST(StarSequence, AdjustedFirstEntry) {
  const auto s = star_sequence(star_graph(3));
  EXPECT_EQ(s.s1(), 3);
  EXPECT_EQ(s.adjusted_first(), 6);
  EXPECT_EQ(s.adjusted_sequence(), (std::vector<BigInt>{6, 3, 1}));
  EXPECT_EQ(s.adjusted(1), 6);
  EXPECT_EQ(s.adjusted(2), 3);
  EXPECT_EQ(s[7], 0);
  EXPECT_THROW((void)s[0], DomainError);
}

TEST(StarSequence, RejectsStarsTooLargeForVertexCount) {
  EXPECT_THROW(StarSequence(3, 1, {0, 5}), InconsistentSequence);
  EXPECT_THROW(StarSequence(1, 1, {}), InconsistentSequence);
  EXPECT_NO_THROW(StarSequence(3, 1, {0, 0}));
}

TEST(StarSequence, CrudeUpperBound) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      const auto s = star_sequence(g);
      for (std::size_t k = 1; k < n; ++k)
        ASSERT_LE(s[k], binomial(n - 1, k) * static_cast<unsigned long>(n));
    }
  }
}

TEST(StarFromFrequency, Examples) {
  EXPECT_EQ(raw(star_from_frequency(freq({0, 2}))), (std::vector<BigInt>{1}));
  EXPECT_EQ(raw(star_from_frequency(freq({0, 3, 0, 1}))),
            (std::vector<BigInt>{3, 3, 1}));
  EXPECT_EQ(raw(star_from_frequency(freq({0, 2, 2, 0}))),
            (std::vector<BigInt>{3, 2, 0}));
}

TEST(StarFromFrequency, OddDegreeSumIsRejected) {
  EXPECT_THROW(star_from_frequency(freq({0, 1, 1})), InconsistentSequence);
  EXPECT_THROW(star_from_frequency(freq({})), DomainError);
}

TEST(FrequencyFromStar, Examples) {
  using C = std::vector<std::uint64_t>;
  EXPECT_EQ(frequency_from_star(StarSequence(4, 3, {3, 1})).counts(),
            (C{0, 3, 0, 1}));
  EXPECT_EQ(frequency_from_star(StarSequence(2, 1, {})).counts(), (C{0, 2}));
  EXPECT_EQ(frequency_from_star(StarSequence(4, 3, {2, 0})).counts(),
            (C{0, 2, 2, 0}));
  EXPECT_EQ(frequency_from_star(StarSequence(1, 0, {})).counts(), (C{1}));
}

TEST(FrequencyFromStar, InconsistentSequences) {
  // f_2 = 0 - 3 < 0
  EXPECT_THROW(frequency_from_star(StarSequence(4, 3, {0, 1})),
               InconsistentSequence);
  // two edges on two vertices: f_1 = 4, f_0 = -2
  EXPECT_THROW(frequency_from_star(StarSequence(2, 2, {})),
               InconsistentSequence);
}

TEST(StarInversion, RoundTripsOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      const auto f = frequency_sequence(g);
      const auto s = star_sequence(g);
      ASSERT_EQ(star_from_frequency(f), s);
      ASSERT_EQ(frequency_from_star(s), f);
      ASSERT_EQ(frequency_from_star(star_from_frequency(f)), f);
      ASSERT_EQ(star_from_frequency(frequency_from_star(s)), s);
    }
  }
}

TEST(AlternatingMoment, Examples) {
  const auto k13 = star_sequence(star_graph(3));
  EXPECT_EQ(alternating_moment(k13, 0), 4);
  EXPECT_EQ(alternating_moment(star_sequence(k2_plus_isolated()), 0), 2);
  EXPECT_EQ(alternating_moment(k13, 1), 3);
}

TEST(MomentIdentityRhs, Examples) {
  EXPECT_EQ(moment_identity_rhs(frequency_sequence(star_graph(3)), 1), 3);
  EXPECT_EQ(moment_identity_rhs(freq({0, 2}), 2), 2);
  EXPECT_EQ(alternating_moment(StarSequence(2, 1, {}), 2), 2);
  // f_k = 0 for every k <= m
  EXPECT_EQ(moment_identity_rhs(frequency_sequence(complete_graph(5)), 3), 0);
  EXPECT_THROW(moment_identity_rhs(freq({0, 2}), 0), DomainError);
}

TEST(MomentIdentityRhs, NegatedVariantDisagreesOnStar) {
  const auto f = frequency_sequence(star_graph(3));
  EXPECT_EQ(moment_identity_rhs_negated(f, 1), -3);
  EXPECT_EQ(alternating_moment(star_sequence(star_graph(3)), 1), 3);
}

TEST(MomentIdentity, HoldsOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      const auto f = frequency_sequence(g);
      const auto s = star_sequence(g);
      ASSERT_EQ(alternating_moment(s, 0), static_cast<unsigned long>(n - f[0]));
      for (std::uint64_t m = 1; m <= 6; ++m)
        ASSERT_EQ(alternating_moment(s, m), moment_identity_rhs(f, m)) << m;
    }
  }
}

TEST(InverseDegreeEdgeSum, Examples) {
  EXPECT_EQ(inverse_degree_edge_sum(star_graph(3)), 4);
  EXPECT_EQ(inverse_degree_edge_sum(k2_plus_isolated()), 2);
  EXPECT_EQ(inverse_degree_edge_sum(edgeless(4)), 0);
  // fractional terms: P_3 gives 2 * (1/1 + 1/2) = 3
  EXPECT_EQ(inverse_degree_edge_sum(path_graph(3)), 3);
}

TEST(InverseDegreeEdgeSum, EqualsNonIsolatedCount) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      const auto f = frequency_sequence(g);
      ASSERT_EQ(inverse_degree_edge_sum(g),
                Rational(static_cast<unsigned long>(n - f[0])));
      ASSERT_EQ(isolated_count_from_star(star_sequence(g)), f[0]);
    }
  }
}

TEST(IsolatedCountFromStar, Examples) {
  EXPECT_EQ(isolated_count_from_star(StarSequence(3, 1, {0})), 1U);
  EXPECT_EQ(isolated_count_from_star(star_sequence(star_graph(3))), 0U);
  EXPECT_EQ(isolated_count_from_star(StarSequence(5, 0, {})), 5U);
  EXPECT_THROW(isolated_count_from_star(StarSequence(2, 3, {})),
               InconsistentSequence);
}

TEST(Classify, Examples) {
  using K = Classification::Kind;
  EXPECT_EQ(classify(StarSequence(4, 3, {2, 0})).kind, K::path);
  EXPECT_EQ(classify(StarSequence(4, 4, {4, 0})),
            (Classification{K::regular, 2}));
  EXPECT_EQ(classify(star_sequence(star_graph(3))).kind, K::other);
}

TEST(Classify, Families) {
  using K = Classification::Kind;
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_EQ(classify(star_sequence(path_graph(n))).kind, K::path) << n;
    EXPECT_EQ(classify(star_sequence(cycle_graph(n))),
              (Classification{K::regular, 2}))
        << n;
  }
  for (std::size_t n = 3; n <= 6; ++n)
    EXPECT_EQ(classify(star_sequence(complete_graph(n))),
              (Classification{K::regular, n - 1}));
}

TEST(Classify, EdgeCases) {
  using K = Classification::Kind;
  // P_2 is also 1-regular; path takes precedence
  EXPECT_EQ(classify(star_sequence(path_graph(2))).kind, K::path);
  // perfect matching on 4 vertices
  EXPECT_EQ(classify(star_sequence(Graph(4, {{0, 1}, {2, 3}}))),
            (Classification{K::regular, 1}));
  // a triangle plus an isolated vertex is not regular
  EXPECT_EQ(classify(star_sequence(Graph(4, {{0, 1}, {1, 2}, {0, 2}}))).kind,
            K::other);
  EXPECT_EQ(classify(star_sequence(edgeless(3))).kind, K::other);
  EXPECT_EQ(classify(star_sequence(edgeless(1))).kind, K::other);
  EXPECT_EQ(Classification({K::regular, 3}).to_string(), "regular(3)");
  EXPECT_EQ(Classification({K::path, 0}).to_string(), "path");
}

TEST(Classify, RegularExactlyWhenAllDegreesEqual) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      const auto deg = degrees(g);
      const bool regular =
          deg[0] > 0 && std::all_of(deg.begin(), deg.end(),
                                    [&](auto d) { return d == deg[0]; });
      const auto c = classify(star_sequence(g));
      if (c.kind == Classification::Kind::path) continue;
      ASSERT_EQ(c.kind == Classification::Kind::regular, regular);
      if (regular) ASSERT_EQ(c.degree, deg[0]);
    }
  }
}

}  // namespace
}  // namespace starseq
