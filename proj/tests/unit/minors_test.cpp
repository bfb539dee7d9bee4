#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "xpk/error.hpp"
#include "xpk/minors.hpp"

using namespace xpk;

namespace {

Graph icosahedron() {
  std::vector<Edge> e;
  // apex 0, upper ring 1..5, lower ring 6..10, apex 11
  for (Vertex i = 0; i < 5; ++i) {
    Vertex u = 1 + i, un = 1 + (i + 1) % 5, l = 6 + i, ln = 6 + (i + 1) % 5;
    e.push_back({0, u});
    e.push_back({u, un});
    e.push_back({u, l});
    e.push_back({un, l});
    e.push_back({l, ln});
    e.push_back({l, 11});
  }
  return build_graph(12, e);
}

}  // namespace

TEST(MinorExact, CompleteGraph) {
  auto m = clique_minor_exact(make::complete(5), 5);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->order(), 5u);
  for (const VertexSet& s : m->branch_sets) EXPECT_EQ(s.size(), 1u);
  EXPECT_FALSE(clique_minor_exact(make::complete(5), 6));
}

TEST(MinorExact, Cycle) {
  auto m = clique_minor_exact(make::cycle(5), 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(model_defect(make::cycle(5), *m), "");
  EXPECT_FALSE(clique_minor_exact(make::cycle(5), 4));
}

TEST(MinorExact, Petersen) {
  EXPECT_TRUE(clique_minor_exact(make::petersen(), 5));
  EXPECT_FALSE(clique_minor_exact(make::petersen(), 6));
  EXPECT_EQ(max_clique_minor_exact(make::petersen()).order(), 5u);
}

TEST(MinorExact, PlanarHasNoK5) {
  Graph g = icosahedron();
  EXPECT_EQ(g.num_edges(), 30u);
  EXPECT_TRUE(clique_minor_exact(g, 4));
  EXPECT_FALSE(clique_minor_exact(g, 5));
}

TEST(MinorExact, TooLarge) {
  try {
    clique_minor_exact(make::path(13), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(MinorExact, AgreesWithLabelingOracle) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Graph g = corpus::random_graph(3 + s % 5, 0.2 + 0.1 * double(s % 6), s);
    EXPECT_EQ(int(max_clique_minor_exact(g).order()), oracle::max_clique_minor(g)) << s;
  }
}

TEST(MinorExact, Monotone) {
  for (const Graph& g : corpus::connected_corpus(40, 4, 10, 21)) {
    bool prev = true;
    for (std::size_t t = 1; t <= g.num_vertices(); ++t) {
      bool has = clique_minor_exact(g, t).has_value();
      EXPECT_TRUE(prev || !has);
      prev = has;
    }
  }
}

TEST(MinorGreedy, Fixtures) {
  for (std::size_t t = 1; t <= 7; ++t) EXPECT_EQ(clique_minor_greedy(make::complete(t), 1).order(), t);
  EXPECT_EQ(clique_minor_greedy(make::path(9), 1).order(), 2u);
  EXPECT_EQ(clique_minor_greedy(make::star(6), 2).order(), 2u);
  EXPECT_EQ(clique_minor_greedy(make::cycle(8), 2).order(), 3u);
  std::size_t pet = clique_minor_greedy(make::petersen(), 3, 10).order();
  EXPECT_GE(pet, 4u);
  EXPECT_LE(pet, 5u);
}

TEST(MinorGreedy, Errors) {
  EXPECT_THROW(clique_minor_greedy(make::disjoint_union(make::path(3), make::path(3)), 1), Error);
  EXPECT_THROW(clique_minor_greedy(make::path(3), 1, 0), Error);
}

TEST(MinorGreedy, DeterministicAndParallelSafe) {
  Graph g = corpus::random_connected(40, 0.1, 5);
  MinorModel a = clique_minor_greedy(g, 9, 8, 1);
  MinorModel b = clique_minor_greedy(g, 9, 8, 4);
  EXPECT_EQ(a.branch_sets, b.branch_sets);
  EXPECT_EQ(model_defect(g, a), "");
}

TEST(MinorGreedy, DominatedByExact) {
  for (const Graph& g : corpus::connected_corpus(80, 3, 10, 33)) {
    MinorModel m = clique_minor_greedy(g, 4, 5);
    EXPECT_EQ(model_defect(g, m), "");
    EXPECT_LE(m.order(), max_clique_minor_exact(g).order());
  }
}

TEST(ModelDefect, RejectsBadModels) {
  Graph g = make::cycle(5);
  EXPECT_NE(model_defect(g, {{VertexSet({0}), VertexSet({0, 1})}}), "");
  EXPECT_NE(model_defect(g, {{VertexSet({0, 2})}}), "");
  EXPECT_NE(model_defect(g, {{VertexSet({0}), VertexSet({2})}}), "");
  EXPECT_NE(model_defect(g, {{VertexSet({0}), VertexSet{}}}), "");
  EXPECT_EQ(model_defect(g, {{VertexSet({0}), VertexSet({1}), VertexSet({2, 3, 4})}}), "");
}
