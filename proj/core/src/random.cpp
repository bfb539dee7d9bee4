#include "xpk/random.hpp"

#include <chrono>
#include <cmath>

#include "xpk/error.hpp"
#include "xpk/parallel.hpp"
#include "xpk/rng.hpp"

namespace xpk {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t count_status(const std::vector<TrialRow>& rows, VerdictStatus s) {
  std::size_t c = 0;
  for (const TrialRow& r : rows) c += r.status == s;
  return c;
}

}  // namespace

Graph gnp(const GnpSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw Error(ErrorCode::InvalidParams, "p must lie in [0, 1]");
  const std::size_t n = spec.n;
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  if (spec.p == 0.0 || n < 2) return build_graph(n, edges);

  if (spec.p <= 0.1) {
    // Batagelj-Brandes: walk the lower triangle (v, w), w < v, jumping by
    // geometric gaps.
    edges.reserve(static_cast<std::size_t>(spec.p * double(n) * double(n - 1) / 2 * 1.1) + 16);
    const double log_q = std::log1p(-spec.p);
    std::size_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
      const double r = rng.uniform01();
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= static_cast<std::int64_t>(v) && v < n) {
        w -= static_cast<std::int64_t>(v);
        ++v;
      }
      if (v < n) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  } else {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.bernoulli(spec.p)) edges.push_back({u, v});
      }
    }
  }
  return build_graph(n, edges);
}

RateEstimate wilson_interval(std::size_t hits, std::size_t trials, double z) {
  RateEstimate r;
  r.hits = hits;
  r.trials = trials;
  if (trials == 0) {
    r.hi = 1.0;
    return r;
  }
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / nt;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * nt)) / (1 + z2 / nt);
  const double half = z * std::sqrt(p * (1 - p) / nt + z2 / (4 * nt * nt)) / (1 + z2 / nt);
  r.rate = p;
  r.lo = std::max(0.0, centre - half);
  r.hi = std::min(1.0, centre + half);
  return r;
}

Prop1Report monte_carlo_prop1(std::size_t n, double c1, double c2, std::size_t trials,
                              std::uint64_t effort, std::uint64_t seed, std::size_t jobs) {
  if (!(decimal(c2) > 1) || !(decimal(c1) > decimal(c2))) {
    throw Error(ErrorCode::InvalidParams, "need c1 > c2 > 1");
  }
  Prop1Report report;
  report.n = n;
  report.c1 = c1;
  report.c2 = c2;
  report.alpha = local_sparsity_alpha(c1, c2);
  report.max_size = static_cast<std::size_t>(std::floor(report.alpha * double(n)));
  report.rows.resize(trials);
  const double p = std::min(1.0, c1 / double(n));
  parallel_for(trials, jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    TrialRow& row = report.rows[i];
    row.trial = i;
    row.seed = derive_seed(seed, i);
    Graph g = gnp({n, p, row.seed});
    row.edges = g.num_edges();
    SparsityVerdict v;
    if (report.alpha * double(n) < 1.0) {
      v.status = VerdictStatus::PassExact;  // no set size in range
    } else {
      SparsityOptions opt;
      opt.effort = effort;
      opt.seed = derive_seed(row.seed, 1);
      v = local_sparsity_verdict(g, c2, report.alpha, opt);
    }
    row.status = v.status;
    row.best_density = v.best_density;
    row.effort_used = v.effort_used;
    row.seconds = seconds_since(start);
  });
  report.violations = wilson_interval(count_status(report.rows, VerdictStatus::Violation), trials);
  report.inconclusive = wilson_interval(count_status(report.rows, VerdictStatus::Inconclusive), trials);
  return report;
}

Prop2Report monte_carlo_prop2(std::size_t n, double c, double delta, std::size_t trials,
                              std::uint64_t seed, std::size_t jobs) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw Error(ErrorCode::InvalidParams, "need C >= 0");
  if (!(delta > 0.0 && delta < std::exp(-1.0))) {
    throw Error(ErrorCode::InvalidParams, "need 0 < delta < 1/e");
  }
  Prop2Report report;
  report.n = n;
  report.c = c;
  report.delta = delta;
  report.m = static_cast<std::size_t>(
      std::max<std::int64_t>(0, floor_tolerant(delta * double(n) / std::log(1.0 / delta))));
  report.t = static_cast<std::size_t>(ceil_tolerant(delta * double(n)));
  report.rows.resize(trials);
  const double p = n == 0 ? 0.0 : std::min(1.0, c / double(n));
  parallel_for(trials, jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    TrialRow& row = report.rows[i];
    row.trial = i;
    row.seed = derive_seed(seed, i);
    Graph g = gnp({n, p, row.seed});
    row.edges = g.num_edges();
    SparsityVerdict v = touch_bound_verdict(g, report.m, report.t);
    row.status = v.status;
    row.best_density = v.best_density;
    row.effort_used = v.effort_used;
    row.seconds = seconds_since(start);
  });
  report.violations = wilson_interval(count_status(report.rows, VerdictStatus::Violation), trials);
  report.inconclusive = wilson_interval(count_status(report.rows, VerdictStatus::Inconclusive), trials);
  return report;
}

PipelineReport giant_pipeline(std::size_t n, double eps, std::uint64_t seed,
                              std::optional<ExtractionParams> params, const SpectralOptions& spectral) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::InvalidParams, "need 0 < eps < 1");
  PipelineReport r;
  r.n = n;
  r.eps = eps;
  r.seed = seed;
  Graph g = gnp({n, std::min(1.0, (1.0 + eps) / double(n)), seed});
  r.edges = g.num_edges();

  auto parts = connected_components(g);
  if (parts.empty()) {
    r.error = "empty graph";
    return r;
  }
  InducedSubgraph giant = induced_subgraph(g, parts.front());
  r.giant_size = giant.graph.num_vertices();
  r.giant_edges = giant.graph.num_edges();
  r.giant_density = giant.graph.density();

  const double trim = eps * eps * eps / (2.0 * std::log(1.0 / eps)) * double(n);
  r.trim_count = std::min<std::size_t>(r.giant_size - 1,
                                       static_cast<std::size_t>(std::max<std::int64_t>(0, floor_tolerant(trim))));
  TrimResult trimmed = trim_high_degree(giant.graph, r.trim_count);
  r.trimmed = induced_subgraph(trimmed.graph, trimmed.removed.complement(r.giant_size)).graph;
  r.trimmed_size = r.trimmed.num_vertices();
  r.trimmed_edges = r.trimmed.num_edges();
  r.trimmed_density = r.trimmed.density();
  r.trimmed_max_degree = r.trimmed.max_degree();

  r.params = params ? *params : corollary1_params(eps, n, r.trimmed_size);
  try {
    r.outcome = extract_expander(r.trimmed, r.params, spectral);
    r.check = verify_outcome(r.trimmed, r.params, *r.outcome, spectral);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

ExtractionParams corollary1_params(double eps, std::size_t n, std::size_t trimmed_size) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::InvalidParams, "need 0 < eps < 1");
  ExtractionParams p;
  p.c1 = 1.0 + eps * eps / 7.0;
  p.c2 = 1.0 + eps * eps / 10.0;
  const double alpha = local_sparsity_alpha(1.0 + eps, p.c2);
  p.alpha = std::min(0.5, alpha * double(n) / double(std::max<std::size_t>(trimmed_size, 1)));
  p.delta_cap = static_cast<std::size_t>(std::max(1.0, std::floor(4.0 * std::log(1.0 / eps))));
  return p;
}

}  // namespace xpk
