#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "xpk/error.hpp"
#include "xpk/expansion.hpp"
#include "xpk/extraction.hpp"

using namespace xpk;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an xpk::Error";
  return ErrorCode::ParseError;
}

void expect_trace_invariants(const Graph& g, const ExtractionParams& p, const ExtractionOutcome& o) {
  const Thresholds t = derive_thresholds(p);
  const auto& trace = trace_of(o);
  ASSERT_FALSE(trace.empty());
  EXPECT_LE(trace.size(), g.num_vertices() + 1);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& s = trace[i];
    if (i > 0) EXPECT_LT(s.vertices, trace[i - 1].vertices);
    EXPECT_GE(Rational(long(s.edges)), t.c2 * long(s.vertices));
    if (Rational(long(s.vertices)) > t.alpha_n(g.num_vertices())) {
      EXPECT_GE(s.density, to_double(t.c1) - double(s.keep_steps) * t.delta_thm2 - 1e-9);
      EXPECT_LE(s.keep_steps, t.k_steps);
    }
  }
}

}  // namespace

TEST(Thresholds, Example) {
  Thresholds t = derive_thresholds({2, 1.5, 0.25, 4});
  EXPECT_EQ(t.levels, 2);
  EXPECT_EQ(t.delta_thm1, Rational(1, 4));
  EXPECT_EQ(t.gamma_thm1, Rational(1, 16));
  // log(0.25) / log(0.875) = 10.3817861393688..., evaluated with mpmath.
  EXPECT_NEAR(t.k_thm2, 10.3817861393688, 1e-12);
  EXPECT_NEAR(t.delta_thm2, 0.5 / (2 * 10.3817861393688), 1e-14);
  EXPECT_NEAR(t.delta_thm2, 0.02408, 5e-6);
  EXPECT_EQ(t.k_steps, 11u);
  EXPECT_EQ(t.beta(t.levels), t.c2);
  EXPECT_LE(t.gamma_alg, to_double(t.gamma_thm1));
  EXPECT_GT(t.lambda_star, 0.0);
}

TEST(Thresholds, DecimalParametersAreExact) {
  Thresholds t = derive_thresholds({1.5, 1.3, 0.25, 4});
  EXPECT_EQ(t.gamma_thm1, Rational(1, 40));
  EXPECT_EQ(t.beta(2), Rational(13, 10));
  Thresholds odd = derive_thresholds({1.9, 1.5, 0.1, 4});
  EXPECT_EQ(odd.levels, 4);
  EXPECT_EQ(odd.beta(odd.levels), Rational(3, 2));
}

TEST(Thresholds, PropertiesOverGrid) {
  for (double c1 : {1.2, 1.5, 2.0, 3.0}) {
    for (double c2 : {1.05, 1.1, 1.19}) {
      for (double alpha : {0.001, 0.01, 0.1, 0.25, 0.4, 0.5}) {
        for (std::size_t d : {1u, 3u, 8u, 40u}) {
          Thresholds t = derive_thresholds({c1, c2, alpha, d});
          EXPECT_GT(t.delta_thm1, 0);
          EXPECT_GT(t.delta_thm2, 0);
          EXPECT_GT(t.gamma_alg, 0);
          EXPECT_EQ(t.beta(t.levels), t.c2);
          EXPECT_LE(t.gamma_alg, to_double(t.gamma_thm1));
          EXPECT_LE(Rational(1), t.alpha * (BigInt(1) << t.levels).convert_to<long>());
        }
      }
    }
  }
}

TEST(Thresholds, GammaOrderingNeedsSmallAlpha) {
  // With alpha near 1 the keep-step bound k drops below 1 and the
  // algorithmic gamma overtakes the existential one.
  Thresholds t = derive_thresholds({1.5, 1.05, 0.9, 1});
  EXPECT_LT(t.k_thm2, 1.0);
  EXPECT_GT(t.gamma_alg, to_double(t.gamma_thm1));
}

TEST(Thresholds, Invalid) {
  EXPECT_EQ(code_of([] { derive_thresholds({1.2, 1.5, 0.1, 3}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { derive_thresholds({1.5, 1.0, 0.1, 3}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { derive_thresholds({1.5, 1.2, 1.0, 3}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { derive_thresholds({1.5, 1.2, 0.1, 0}); }), ErrorCode::InvalidParams);
}

TEST(LocalSparsityAlpha, Formula) {
  EXPECT_NEAR(local_sparsity_alpha(2, 1.5), 0.003375, 1e-15);
  EXPECT_NEAR(local_sparsity_alpha(1.2, 1.1), std::pow(1.1 / 6, 11), 1e-20);
  EXPECT_LT(local_sparsity_alpha(1.2, 1.1) * 100, 1.0);
}

TEST(Extract, CliqueWithIsolatedVertex) {
  Graph g = make::disjoint_union(make::complete(5), make::empty(1));
  ExtractionParams p{1.5, 1.2, 0.5, 4};
  ExtractionOutcome o = extract_expander(g, p);
  ASSERT_TRUE(std::holds_alternative<ExpanderCertificate>(o));
  const auto& cert = std::get<ExpanderCertificate>(o);
  EXPECT_EQ(cert.vertices, VertexSet({0, 1, 2, 3, 4}));
  EXPECT_NEAR(cert.lambda_achieved, 1.25, 1e-10);
  EXPECT_NEAR(cert.gamma_lower_bound, 1.25 / 8, 1e-10);
  ASSERT_EQ(cert.trace.size(), 2u);
  EXPECT_EQ(cert.trace[0].branch, Branch::IsolatedRemoved);
  EXPECT_EQ(cert.trace[1].branch, Branch::Certificate);
  EXPECT_TRUE(verify_outcome(g, p, o).ok);
  expect_trace_invariants(g, p, o);
}

TEST(Extract, CliqueWithPathGivesDenseWitness) {
  Graph g = make::clique_with_path(25, 475);
  EXPECT_EQ(g.density(), Rational(775, 500));
  // The bridge endpoint has degree 25, so the degree cap must be 25.
  EXPECT_EQ(code_of([&] { extract_expander(g, {1.5, 1.2, 0.1, 24}); }), ErrorCode::PreconditionDegree);
  ExtractionParams p{1.5, 1.2, 0.1, 25};
  ExtractionOutcome o = extract_expander(g, p);
  ASSERT_TRUE(std::holds_alternative<DenseWitness>(o));
  const auto& w = std::get<DenseWitness>(o);
  std::vector<Vertex> clique(25);
  for (Vertex v = 0; v < 25; ++v) clique[v] = v;
  EXPECT_EQ(w.w, VertexSet(clique));
  EXPECT_EQ(w.spanned_edges, 300u);
  EXPECT_TRUE(verify_outcome(g, p, o).ok);
  expect_trace_invariants(g, p, o);
}

TEST(Extract, GridEitherBranchVerifies) {
  Graph g = make::grid(20, 20);
  ExtractionParams p{1.9, 1.5, 0.1, 4};
  ExtractionOutcome o = extract_expander(g, p);
  OutcomeCheck check = verify_outcome(g, p, o);
  EXPECT_TRUE(check.ok) << check.detail;
  expect_trace_invariants(g, p, o);
}

TEST(Extract, Preconditions) {
  EXPECT_EQ(code_of([] { extract_expander(make::cycle(10), {1.5, 1.2, 0.1, 4}); }),
            ErrorCode::PreconditionDensity);
  EXPECT_EQ(code_of([] { extract_expander(make::complete(6), {1.5, 1.2, 0.1, 4}); }),
            ErrorCode::PreconditionDegree);
}

TEST(Extract, RandomBoundedDegreeGraphsVerify) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 20 + seed * 5;
    Graph g = corpus::random_bounded_degree(n, (n * 8) / 5, 6, seed);
    ExtractionParams p{1.5, 1.2, 0.2, 6};
    if (g.density() < Rational(3, 2)) continue;
    ExtractionOutcome o = extract_expander(g, p);
    OutcomeCheck check = verify_outcome(g, p, o);
    EXPECT_TRUE(check.ok) << "seed " << seed << ": " << check.detail;
    expect_trace_invariants(g, p, o);
    if (n <= 20) {
      if (const auto* c = std::get_if<ExpanderCertificate>(&o)) {
        Graph h = induced_subgraph(g, c->vertices).graph;
        EXPECT_GE(to_double(vertex_expansion_exact(h).gamma), derive_thresholds(p).gamma_alg);
      }
    }
  }
}

TEST(Verify, RejectsForgedOutcomes) {
  Graph g = make::clique_with_path(25, 475);
  ExtractionParams p{1.5, 1.2, 0.1, 25};
  DenseWitness forged{VertexSet({0, 1, 2}), 3, {}};
  EXPECT_FALSE(verify_outcome(g, p, forged).ok);
  DenseWitness miscounted{VertexSet({0, 1, 2, 3}), 7, {}};
  EXPECT_FALSE(verify_outcome(g, p, miscounted).ok);
  // Clique plus 50 path vertices away from the bridge: disconnected, lambda 0.
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < 25; ++v) ids.push_back(v);
  for (Vertex v = 100; v < 150; ++v) ids.push_back(v);
  ExpanderCertificate weak{VertexSet(ids), 0.5, 0.01, {}};
  EXPECT_FALSE(verify_outcome(g, p, weak).ok);
  ExpanderCertificate small{VertexSet({0, 1, 2}), 1.5, 0.01, {}};
  EXPECT_FALSE(verify_outcome(g, p, small).ok);
}

TEST(SpectralExpansion, Isolated) {
  EXPECT_EQ(code_of([] { certify_spectral_expansion(make::disjoint_union(make::cycle(3), make::empty(1))); }),
            ErrorCode::IsolatedVertex);
}

TEST(Existential, CompleteGraphK6) {
  ExtractionParams p{2, 1.5, 0.5, 5};
  ExistentialResult r = existential_oracle(make::complete(6), p);
  // K5 already has density 2 = beta_0 and is the smallest such subgraph.
  EXPECT_EQ(r.subgraph, VertexSet({0, 1, 2, 3, 4}));
  EXPECT_EQ(r.gamma_verified, Rational(3, 2));
  EXPECT_EQ(derive_thresholds(p).gamma_thm1, Rational(1, 10));
  EXPECT_GE(r.gamma_verified, derive_thresholds(p).gamma_thm1);
}

TEST(Existential, TwoK4WithBridge) {
  Graph k4s = make::disjoint_union(make::complete(4), make::complete(4));
  std::vector<Edge> edges = k4s.edges();
  edges.push_back({3, 4});
  Graph g = build_graph(8, edges);
  ASSERT_EQ(g.num_edges(), 13u);
  ExtractionParams p{1.5, 1.3, 0.25, 4};
  ExistentialResult r = existential_oracle(g, p);
  EXPECT_GE(r.subgraph.size(), 2u);
  EXPECT_GE(r.gamma_verified, Rational(1, 40));
  EXPECT_EQ(r.gamma_verified, oracle::vertex_expansion(induced_subgraph(g, r.subgraph).graph));
}

TEST(Existential, ForestViolatesHypothesis) {
  try {
    existential_oracle(make::path(8), {1.5, 1.3, 0.25, 4});
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisViolated);
    EXPECT_EQ(e.witness().size(), 8u);
  }
}

TEST(Existential, LocalDensityViolationHasWitness) {
  // K4 inside: 4 vertices spanning 6 >= 1.3 * 4 edges with alpha n = 4.
  Graph g = make::disjoint_union(make::complete(4), make::complete(4));
  try {
    existential_oracle(g, {1.5, 1.3, 0.5, 4});
    FAIL();
  } catch (const HypothesisViolation& e) {
    SubsetStats s = subset_stats(g, e.witness());
    EXPECT_GE(Rational(long(s.within)), Rational(13, 10) * long(e.witness().size()));
  }
  EXPECT_EQ(code_of([] { existential_oracle(make::cycle(15), {1.5, 1.3, 0.25, 4}); }), ErrorCode::TooLarge);
}
