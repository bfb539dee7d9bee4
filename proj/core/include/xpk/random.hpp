#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xpk/extraction.hpp"
#include "xpk/graph.hpp"
#include "xpk/sparsity.hpp"

namespace xpk {

struct GnpSpec {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// G(n, p) from Rng seeded with spec.seed. For p <= 0.1 pairs are visited by
// geometric skipping (expected O(n + p n^2) time); otherwise one Bernoulli
// draw per pair in lexicographic order. Errors: InvalidParams.
Graph gnp(const GnpSpec& spec);

struct RateEstimate {
  std::size_t hits = 0;
  std::size_t trials = 0;
  double rate = 0.0;
  double lo = 0.0;  // Wilson 95% interval
  double hi = 0.0;
};

RateEstimate wilson_interval(std::size_t hits, std::size_t trials, double z = 1.96);

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  VerdictStatus status = VerdictStatus::Inconclusive;
  double best_density = 0.0;
  std::uint64_t effort_used = 0;
  double seconds = 0.0;
};

struct Prop1Report {
  std::size_t n = 0;
  double c1 = 0.0, c2 = 0.0;
  double alpha = 0.0;     // (c2 / (5 c1))^(c2 / (c2 - 1))
  std::size_t max_size = 0;  // floor(alpha n)
  RateEstimate violations;
  RateEstimate inconclusive;
  std::vector<TrialRow> rows;
};

// Trial i draws G(n, c1/n) with seed derive_seed(seed, i) and runs
// local_sparsity_verdict with the Proposition 1 alpha. Errors: InvalidParams.
Prop1Report monte_carlo_prop1(std::size_t n, double c1, double c2, std::size_t trials,
                              std::uint64_t effort, std::uint64_t seed, std::size_t jobs = 1);

struct Prop2Report {
  std::size_t n = 0;
  double c = 0.0, delta = 0.0;
  std::size_t m = 0;  // floor(delta n / ln(1/delta))
  std::size_t t = 0;  // ceil(delta n)
  RateEstimate violations;
  RateEstimate inconclusive;
  std::vector<TrialRow> rows;
};

// Trial i draws G(n, C/n) and runs touch_bound_verdict(m, t).
// Errors: InvalidParams (C < 0, delta outside (0, 1/e)).
Prop2Report monte_carlo_prop2(std::size_t n, double c, double delta, std::size_t trials,
                              std::uint64_t seed, std::size_t jobs = 1);

struct PipelineReport {
  std::size_t n = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  std::size_t giant_size = 0;
  std::size_t giant_edges = 0;
  Rational giant_density;
  std::size_t trim_count = 0;  // floor(eps^3 / (2 ln(1/eps)) n)
  std::size_t trimmed_size = 0;
  std::size_t trimmed_edges = 0;
  Rational trimmed_density;
  std::size_t trimmed_max_degree = 0;
  ExtractionParams params;  // as used
  std::optional<ExtractionOutcome> outcome;
  std::optional<OutcomeCheck> check;   // verify_outcome on the trimmed graph
  std::optional<std::string> error;    // extraction error, e.g. a failed precondition
  Graph trimmed;                       // G_0, compacted
};

// Giant component of G(n, (1+eps)/n), minus its highest-degree vertices,
// then extract_expander. Extraction errors are captured in the report.
// Without params, corollary1_params for the trimmed size.
// Errors: InvalidParams (eps outside (0, 1)).
PipelineReport giant_pipeline(std::size_t n, double eps, std::uint64_t seed,
                              std::optional<ExtractionParams> params = std::nullopt,
                              const SpectralOptions& spectral = {});

// The constants the Corollary 1 argument feeds to Theorem 1:
// c1 = 1 + eps^2/7, c2 = 1 + eps^2/10, delta = floor(4 ln(1/eps)), and alpha
// from Proposition 1 with (1 + eps, 1 + eps^2/10), rescaled from n to the
// trimmed size.
ExtractionParams corollary1_params(double eps, std::size_t n, std::size_t trimmed_size);

}  // namespace xpk
