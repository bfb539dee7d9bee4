#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "xpk/error.hpp"
#include "xpk/expansion.hpp"
#include "xpk/extraction.hpp"

#include <numbers>

using namespace xpk;

TEST(VertexExpansion, Examples) {
  EXPECT_EQ(vertex_expansion_exact(make::complete(4)).gamma, Rational(1));
  ExpansionProfile c8 = vertex_expansion_exact(make::cycle(8));
  EXPECT_EQ(c8.gamma, Rational(1, 2));
  EXPECT_EQ(c8.worst_set, VertexSet({0, 1, 2, 3}));
  Graph iso = make::disjoint_union(make::complete(4), make::empty(1));
  EXPECT_EQ(vertex_expansion_exact(iso).gamma, Rational(0));
  EXPECT_EQ(vertex_expansion_exact(iso).worst_set, VertexSet({4}));
}

TEST(VertexExpansion, Limits) {
  EXPECT_THROW(vertex_expansion_exact(make::empty(1)), Error);
  try {
    vertex_expansion_exact(make::cycle(25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(VertexExpansion, MatchesOracleAndWitness) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 2 + seed % 13;
    Graph g = corpus::random_graph(n, 0.15 + 0.05 * double(seed % 8), seed);
    ExpansionProfile p = vertex_expansion_exact(g);
    EXPECT_EQ(p.gamma, oracle::vertex_expansion(g)) << seed;
    ASSERT_FALSE(p.worst_set.empty());
    EXPECT_LE(2 * p.worst_set.size(), n);
    SubsetStats s = subset_stats(g, p.worst_set);
    EXPECT_EQ(Rational(long(s.ext_neighborhood.size()), long(p.worst_set.size())), p.gamma);
    EXPECT_EQ(p.gamma == 0, !is_connected(g)) << seed;
  }
}

TEST(MinSeparator, Examples) {
  auto p3 = min_separator_exact(make::path(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->s, VertexSet({1}));
  EXPECT_FALSE(min_separator_exact(make::complete(4)));
  auto c6 = min_separator_exact(make::cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->s.size(), 2u);
}

TEST(MinSeparator, ValidAndMinimal) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 3 + seed % 9;
    Graph g = corpus::random_connected(n, 0.3, seed);
    auto sep = min_separator_exact(g);
    auto truth = oracle::min_separator_size(g);
    ASSERT_EQ(bool(sep), bool(truth)) << seed;
    if (!sep) continue;
    EXPECT_EQ(sep->s.size(), *truth) << seed;
    EXPECT_EQ(sep->a.size() + sep->b.size() + sep->s.size(), n);
    EXPECT_FALSE(sep->a.empty());
    EXPECT_FALSE(sep->b.empty());
    EXPECT_LE(3 * sep->a.size(), 2 * n);
    EXPECT_LE(3 * sep->b.size(), 2 * n);
    for (Vertex a : sep->a) {
      for (Vertex b : sep->b) EXPECT_FALSE(g.has_edge(a, b));
    }
  }
}

TEST(SeparatorLowerBound, Examples) {
  EXPECT_EQ(separator_lower_bound(Rational(1), 12), Rational(2));
  EXPECT_EQ(separator_lower_bound(Rational(0), 12), Rational(0));
  EXPECT_EQ(separator_lower_bound(Rational(2, 3), 6), Rational(4, 5));
  EXPECT_THROW(separator_lower_bound(Rational(-1), 5), Error);
}

TEST(SeparatorLowerBound, HoldsOnCorpus) {
  auto graphs = corpus::connected_corpus(150, 3, 12, 9);
  for (const Graph& g : graphs) {
    auto sep = min_separator_exact(g);
    if (!sep) continue;
    Rational gamma = vertex_expansion_exact(g).gamma;
    EXPECT_GE(Rational(long(sep->s.size())), separator_lower_bound(gamma, g.num_vertices()));
  }
}

TEST(SpectralCertificate, NeverExceedsExactExpansion) {
  EXPECT_NEAR(certify_spectral_expansion(make::complete(4)), 2.0 / 9.0, 1e-10);
  EXPECT_NEAR(certify_spectral_expansion(make::cycle(8)), (1 - std::cos(std::numbers::pi / 4)) / 4, 1e-10);
  EXPECT_EQ(certify_spectral_expansion(make::disjoint_union(make::cycle(3), make::cycle(4))), 0.0);
  auto graphs = corpus::connected_corpus(150, 2, 16, 31);
  for (const Graph& g : graphs) {
    const double lb = certify_spectral_expansion(g);
    EXPECT_LE(lb, to_double(vertex_expansion_exact(g).gamma));
  }
}
