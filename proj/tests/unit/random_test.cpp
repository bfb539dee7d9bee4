#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "xpk/error.hpp"
#include "xpk/random.hpp"
#include "xpk/rng.hpp"

using namespace xpk;

TEST(Gnp, Extremes) {
  EXPECT_EQ(gnp({50, 0.0, 1}).num_edges(), 0u);
  EXPECT_EQ(gnp({30, 1.0, 1}), make::complete(30));
  EXPECT_EQ(gnp({1, 0.5, 1}).num_edges(), 0u);
  EXPECT_THROW(gnp({10, 1.5, 1}), Error);
  EXPECT_THROW(gnp({10, -0.1, 1}), Error);
}

TEST(Gnp, Deterministic) {
  for (double p : {0.01, 0.3}) {
    EXPECT_EQ(gnp({400, p, 42}), gnp({400, p, 42}));
    EXPECT_NE(gnp({400, p, 42}), gnp({400, p, 43}));
  }
}

TEST(Gnp, MeanEdgeCount) {
  const std::size_t n = 10000;
  const double p = 2.0 / n;
  const double pairs = double(n) * (n - 1) / 2;
  double total = 0;
  for (std::uint64_t s = 0; s < 100; ++s) total += double(gnp({n, p, derive_seed(5, s)}).num_edges());
  const double mean = total / 100;
  const double sd_of_mean = std::sqrt(pairs * p * (1 - p) / 100);
  EXPECT_NEAR(mean, pairs * p, 3 * sd_of_mean);
}

TEST(Gnp, PairsAreUniformUnderSkipping) {
  // Every pair of K_12 should appear with frequency p under both samplers.
  for (double p : {0.08, 0.2}) {
    const std::size_t n = 12, runs = 4000;
    std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
    for (std::uint64_t s = 0; s < runs; ++s) {
      for (const Edge& e : gnp({n, p, s}).edges()) ++count[e.u][e.v];
    }
    const double sd = std::sqrt(runs * p * (1 - p));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) EXPECT_NEAR(count[u][v], runs * p, 5 * sd) << u << "," << v;
    }
  }
}

TEST(Wilson, KnownValues) {
  RateEstimate zero = wilson_interval(0, 20);
  EXPECT_EQ(zero.rate, 0.0);
  EXPECT_NEAR(zero.hi, 1.96 * 1.96 / (20 + 1.96 * 1.96), 1e-12);
  RateEstimate half = wilson_interval(50, 100);
  EXPECT_NEAR(half.lo + half.hi, 1.0, 1e-12);
  EXPECT_LT(half.lo, 0.5);
}

TEST(Prop1, VacuousRange) {
  Prop1Report r = monte_carlo_prop1(100, 1.2, 1.1, 5, 1000, 3);
  EXPECT_LT(r.alpha * 100, 1.0);
  EXPECT_NEAR(r.alpha, std::pow(1.1 / 6, 11), 1e-20);
  for (const TrialRow& row : r.rows) EXPECT_EQ(row.status, VerdictStatus::PassExact);
  EXPECT_EQ(r.violations.hits, 0u);
}

TEST(Prop1, InvalidParams) {
  EXPECT_THROW(monte_carlo_prop1(100, 1.5, 1.5, 1, 10, 0), Error);
  EXPECT_THROW(monte_carlo_prop1(100, 1.5, 1.6, 1, 10, 0), Error);
}

TEST(Prop1, SmallRunHasNoViolations) {
  Prop1Report r = monte_carlo_prop1(20000, 2, 1.5, 4, 200000, 9, 2);
  EXPECT_EQ(r.max_size, 67u);
  EXPECT_EQ(r.violations.hits, 0u);
  EXPECT_EQ(r.rows.size(), 4u);
}

TEST(Prop2, Parameters) {
  Prop2Report r = monte_carlo_prop2(100000, 2, 0.01, 1, 1);
  EXPECT_EQ(r.m, 217u);
  EXPECT_EQ(r.t, 1000u);
  EXPECT_THROW(monte_carlo_prop2(100, 2, 0.5, 1, 1), Error);
  EXPECT_THROW(monte_carlo_prop2(100, -1, 0.1, 1, 1), Error);
}

TEST(Prop2, VacuousCases) {
  Prop2Report tiny = monte_carlo_prop2(50, 2, 0.01, 5, 1);
  EXPECT_EQ(tiny.m, 0u);
  EXPECT_EQ(tiny.violations.hits, 0u);
  Prop2Report empty = monte_carlo_prop2(2000, 0, 0.05, 5, 1);
  EXPECT_EQ(empty.violations.hits, 0u);
  for (const TrialRow& row : empty.rows) EXPECT_EQ(row.edges, 0u);
}

TEST(Prop2, ParallelMatchesSerial) {
  Prop2Report a = monte_carlo_prop2(5000, 2, 0.05, 8, 77, 1);
  Prop2Report b = monte_carlo_prop2(5000, 2, 0.05, 8, 77, 4);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].seed, b.rows[i].seed);
    EXPECT_EQ(a.rows[i].edges, b.rows[i].edges);
    EXPECT_EQ(a.rows[i].status, b.rows[i].status);
  }
}

TEST(GiantPipeline, Accounting) {
  const std::size_t n = 20000;
  ExtractionParams p = corollary1_params(0.3, n, n / 2);
  PipelineReport r = giant_pipeline(n, 0.3, 4, p);
  const double y = oracle::giant_fraction(1.3);
  EXPECT_NEAR(double(r.giant_size) / n, y, 0.04);
  EXPECT_EQ(r.giant_density, Rational(long(r.giant_edges), long(r.giant_size)));
  EXPECT_EQ(r.trimmed_size, r.giant_size - r.trim_count);
  EXPECT_EQ(r.trimmed_density, r.trimmed.density());
  EXPECT_EQ(r.trim_count, std::size_t(std::floor(0.027 / (2 * std::log(1 / 0.3)) * n)));
  // Either extraction ran and re-verified, or it reported why not.
  EXPECT_TRUE(r.error || (r.check && r.check->ok));
}

TEST(GiantPipeline, InvalidEps) {
  ExtractionParams p{1.5, 1.2, 0.1, 4};
  EXPECT_THROW(giant_pipeline(100, -0.5, 1, p), Error);
  EXPECT_THROW(giant_pipeline(100, 1.0, 1, p), Error);
}

TEST(GiantFractionOracle, FixedPoint) {
  const double y = oracle::giant_fraction(1.2);
  EXPECT_NEAR(y, 1 - std::exp(-1.2 * y), 1e-12);
  EXPECT_NEAR(y, 0.3137, 1e-4);
}
