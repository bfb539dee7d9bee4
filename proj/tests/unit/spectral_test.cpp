#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "corpus.hpp"
#include "oracles.hpp"
#include "xpk/error.hpp"
#include "xpk/spectral.hpp"

using namespace xpk;

namespace {

Graph two_triangles_bridge() {
  return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

SpectralOptions iterative() {
  SpectralOptions o;
  o.method = EigenMethod::Iterative;
  return o;
}

}  // namespace

TEST(Lambda1, ClosedForms) {
  EXPECT_NEAR(lambda1(make::complete(2)).lambda1, 2.0, 1e-12);
  EXPECT_NEAR(lambda1(make::cycle(4)).lambda1, 1.0, 1e-10);
  EXPECT_NEAR(lambda1(make::complete(4)).lambda1, 4.0 / 3.0, 1e-10);
  for (std::size_t n : {5u, 9u, 16u}) {
    EXPECT_NEAR(lambda1(make::complete(n)).lambda1, double(n) / double(n - 1), 1e-10) << n;
  }
  EXPECT_NEAR(lambda1(make::cycle(8)).lambda1, 1.0 - std::cos(std::numbers::pi / 4), 1e-10);
  // Petersen: adjacency eigenvalue 1 -> 1 - 1/3.
  EXPECT_NEAR(lambda1(make::petersen()).lambda1, 2.0 / 3.0, 1e-10);
}

TEST(Lambda1, Preconditions) {
  EXPECT_THROW(lambda1(make::empty(1)), Error);
  try {
    lambda1(make::disjoint_union(make::complete(3), make::empty(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IsolatedVertex);
  }
}

TEST(Lambda1, ResultInvariants) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = corpus::random_connected(4 + seed % 40, 0.15, seed);
    SpectralResult r = lambda1(g);
    double norm2 = 0.0, along = 0.0, vol = 0.0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      norm2 += r.eigvec[v] * r.eigvec[v];
      along += r.eigvec[v] * std::sqrt(double(g.degree(v)));
      vol += double(g.degree(v));
    }
    EXPECT_NEAR(norm2, 1.0, 1e-12);
    EXPECT_LE(std::fabs(along) / std::sqrt(vol), 1e-8);
    EXPECT_GE(r.lambda1, -1e-12);
    EXPECT_LE(r.lambda1, 2.0 + r.residual);
    EXPECT_LE(r.residual, 1e-8);
  }
}

TEST(Lambda1, MatchesEigenOracle) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    Graph g = corpus::random_connected(3 + seed % 30, 0.2, seed);
    auto spectrum = oracle::laplacian_spectrum(g);
    EXPECT_NEAR(lambda1(g).lambda1, spectrum[1], 1e-8) << "seed " << seed;
  }
}

TEST(Lambda1, ZeroIffDisconnected) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 4 + seed % 20;
    Graph g = corpus::random_graph(n, 2.5 / double(n), seed);
    if (!isolated_vertices(g).empty()) continue;
    SpectralResult r = lambda1(g);
    EXPECT_EQ(r.lambda1 <= 1e-8, !is_connected(g)) << "seed " << seed << " lambda " << r.lambda1;
  }
}

TEST(Lambda1, IterativeAgreesWithDense) {
  SpectralOptions dense;
  dense.method = EigenMethod::Dense;
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 16 + (seed * 7) % 49;
    Graph g = corpus::random_connected(n, (seed % 3 == 0) ? 0.02 : 0.1, seed);
    SpectralResult a = lambda1(g, dense);
    SpectralResult b = lambda1(g, iterative());
    EXPECT_NEAR(a.lambda1, b.lambda1, 1e-8) << "seed " << seed << " n " << n;
    EXPECT_LE(b.residual, 1e-8);
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Lambda1, IterativeOnLargerGraphs) {
  Graph grid = make::grid(30, 30);
  Graph g = corpus::random_connected(300, 0.01, 3);
  auto spectrum = oracle::laplacian_spectrum(g);
  EXPECT_NEAR(lambda1(g).lambda1, spectrum[1], 1e-8);
  EXPECT_NEAR(lambda1(make::cycle(500)).lambda1, 1.0 - std::cos(2 * std::numbers::pi / 500), 1e-8);
  // Irregular degrees: no closed form, so compare with the dense oracle.
  EXPECT_NEAR(lambda1(grid).lambda1, oracle::laplacian_spectrum(grid)[1], 1e-8);
}

TEST(Lambda1, DisconnectedNullVector) {
  Graph g = make::disjoint_union(make::complete(3), make::complete(3));
  SpectralResult r = lambda1(g);
  EXPECT_NEAR(r.lambda1, 0.0, 1e-14);
  EXPECT_LE(r.residual, 1e-14);
}

TEST(SweepCut, TwoTrianglesBridge) {
  Graph g = two_triangles_bridge();
  SweepCut cut = sweep_cut(g, lambda1(g));
  EXPECT_EQ(cut.cut_set.size(), 3u);
  EXPECT_TRUE(cut.cut_set == VertexSet({0, 1, 2}) || cut.cut_set == VertexSet({3, 4, 5}));
  EXPECT_EQ(cut.edge_boundary, 1u);
  EXPECT_EQ(cut.vol_w, 7u);
  EXPECT_NEAR(cut.conductance, 1.0 / 7.0, 1e-15);
  EXPECT_EQ(Rational(1, 7), oracle::min_conductance(g));
}

TEST(SweepCut, DisconnectedTriangles) {
  Graph g = make::disjoint_union(make::complete(3), make::complete(3));
  SpectralResult r = lambda1(g);
  SweepCut cut = sweep_cut(g, r);
  EXPECT_EQ(cut.edge_boundary, 0u);
  EXPECT_TRUE(cut.cut_set == VertexSet({0, 1, 2}) || cut.cut_set == VertexSet({3, 4, 5}));
}

TEST(SweepCut, Cycle8) {
  Graph g = make::cycle(8);
  SweepCut cut = sweep_cut(g, lambda1(g));
  EXPECT_EQ(cut.cut_set.size(), 4u);
  EXPECT_EQ(cut.edge_boundary, 2u);
  EXPECT_NEAR(cut.conductance, 0.25, 1e-15);
  EXPECT_EQ(oracle::min_conductance(g), Rational(1, 4));
  // Consecutive on the cycle: exactly two boundary edges already implies it.
  EXPECT_EQ(subset_stats(g, cut.cut_set).within, 3u);
}

TEST(SweepCut, GuaranteeOnCorpus) {
  auto graphs = corpus::connected_corpus(150, 4, 30, 21);
  for (const Graph& g : graphs) {
    SpectralResult r = lambda1(g);
    SweepCut cut = sweep_cut(g, r);
    SubsetStats s = subset_stats(g, cut.cut_set);
    EXPECT_EQ(s.boundary, cut.edge_boundary);
    EXPECT_EQ(s.volume, cut.vol_w);
    EXPECT_LE(2 * s.volume, g.volume());
    EXPECT_LE(double(s.boundary), std::sqrt(2 * r.lambda1) * s.volume + 1e-9 * s.volume);
    EXPECT_FALSE(cut.cut_set.empty());
    EXPECT_LT(cut.cut_set.size(), g.num_vertices());
  }
}

TEST(CheegerExact, Examples) {
  EXPECT_EQ(cheeger_exact(make::complete(2)).h, Rational(1));
  CheegerResult c4 = cheeger_exact(make::cycle(4));
  EXPECT_EQ(c4.h, Rational(1, 2));
  EXPECT_EQ(c4.witness.size(), 2u);
  EXPECT_TRUE(make::cycle(4).has_edge(c4.witness[0], c4.witness[1]));
  EXPECT_EQ(cheeger_exact(two_triangles_bridge()).h, Rational(1, 7));
}

TEST(CheegerExact, DisconnectedAndLimits) {
  CheegerResult r = cheeger_exact(make::disjoint_union(make::complete(4), make::complete(2)));
  EXPECT_EQ(r.h, Rational(0));
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.witness, VertexSet({4, 5}));
  EXPECT_THROW(cheeger_exact(make::cycle(21)), Error);
}

TEST(CheegerExact, MatchesOracleAndSandwich) {
  auto graphs = corpus::connected_corpus(120, 4, 12, 77);
  for (const Graph& g : graphs) {
    CheegerResult c = cheeger_exact(g);
    EXPECT_EQ(c.h, oracle::min_conductance(g));
    SubsetStats s = subset_stats(g, c.witness);
    const std::size_t denom = std::min(s.volume, g.volume() - s.volume);
    EXPECT_EQ(Rational(long(s.boundary), long(denom)), c.h);
    const double h = to_double(c.h);
    const double lam = lambda1(g).lambda1;
    EXPECT_LE(h * h / 2 - 1e-9, lam);
    EXPECT_LE(lam, 2 * h + 1e-9);
  }
  const double c4 = lambda1(make::cycle(4)).lambda1;
  EXPECT_NEAR(c4, 2 * to_double(cheeger_exact(make::cycle(4)).h), 1e-9);
}

TEST(Jacobi, DiagonalizesSmallMatrix) {
  // [[2,1],[1,2]] has eigenvalues 1 and 3.
  auto e = linalg::jacobi_eigen({2, 1, 1, 2}, 2);
  EXPECT_NEAR(e.values[0], 1.0, 1e-14);
  EXPECT_NEAR(e.values[1], 3.0, 1e-14);
  EXPECT_NEAR(std::fabs(e.vectors[0][0]), std::sqrt(0.5), 1e-14);
}
