#include "xpk/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xpk/expansion.hpp"
#include "xpk/small_graph.hpp"

namespace xpk {
namespace {

Rational times(const Rational& r, std::size_t k) { return r * static_cast<long>(k); }

std::vector<Vertex> to_original(const InducedSubgraph& sub, const VertexSet& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.original[v]);
  return out;
}

[[noreturn]] void invariant_failure(const std::string& what, std::size_t iteration) {
  throw Error(ErrorCode::InternalInvariantViolated,
              what + " at iteration " + std::to_string(iteration));
}

}  // namespace

void validate(const ExtractionParams& p) {
  if (!std::isfinite(p.c1) || !std::isfinite(p.c2) || !std::isfinite(p.alpha)) {
    throw Error(ErrorCode::InvalidParams, "non-finite parameter");
  }
  if (!(decimal(p.c2) > 1) || !(decimal(p.c1) > decimal(p.c2))) {
    throw Error(ErrorCode::InvalidParams, "need c1 > c2 > 1");
  }
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw Error(ErrorCode::InvalidParams, "need 0 < alpha < 1");
  if (p.delta_cap < 1) throw Error(ErrorCode::InvalidParams, "need delta >= 1");
}

Thresholds derive_thresholds(const ExtractionParams& p) {
  validate(p);
  Thresholds t;
  t.c1 = decimal(p.c1);
  t.c2 = decimal(p.c2);
  t.alpha = decimal(p.alpha);
  t.delta_cap = p.delta_cap;

  // Smallest L with alpha * 2^L >= 1, computed exactly.
  Rational scaled = t.alpha;
  while (scaled < 1) {
    scaled *= 2;
    ++t.levels;
  }
  const Rational gap = t.c1 - t.c2;
  t.delta_thm1 = gap / t.levels;
  t.gamma_thm1 = gap / (static_cast<long>(p.delta_cap) * t.levels);

  const double delta = static_cast<double>(p.delta_cap);
  t.k_thm2 = std::log(to_double(t.alpha)) / std::log1p(-1.0 / (2.0 * delta));
  t.k_steps = static_cast<std::size_t>(ceil_tolerant(t.k_thm2));
  t.delta_thm2 = to_double(gap) / (2.0 * t.k_thm2);
  t.lambda_star = t.delta_thm2 * t.delta_thm2 / (2.0 * delta * delta);
  t.gamma_alg = t.lambda_star / (2.0 * delta);
  return t;
}

double local_sparsity_alpha(double c1, double c2) {
  if (!(c2 > 1.0) || !(c1 > c2)) throw Error(ErrorCode::InvalidParams, "need c1 > c2 > 1");
  return std::pow(c2 / (5.0 * c1), c2 / (c2 - 1.0));
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::IsolatedRemoved: return "isolated_removed";
    case Branch::Delete: return "delete";
    case Branch::Keep: return "keep";
    case Branch::Certificate: return "certificate";
    case Branch::DenseWitness: return "dense_witness";
  }
  return "unknown";
}

const std::vector<TraceStep>& trace_of(const ExtractionOutcome& o) {
  return std::visit([](const auto& x) -> const std::vector<TraceStep>& { return x.trace; }, o);
}

ExtractionOutcome extract_expander(const Graph& g, const ExtractionParams& p,
                                   const SpectralOptions& spectral) {
  const Thresholds t = derive_thresholds(p);
  const std::size_t n = g.num_vertices();
  if (n == 0 || g.density() < t.c1) {
    throw Error(ErrorCode::PreconditionDensity,
                "density " + to_string(g.density()) + " below c1 = " + to_string(t.c1));
  }
  if (g.max_degree() > p.delta_cap) {
    throw Error(ErrorCode::PreconditionDegree, "max degree " + std::to_string(g.max_degree()) +
                                                   " exceeds " + std::to_string(p.delta_cap));
  }
  const Rational alpha_n = t.alpha_n(n);

  std::vector<TraceStep> trace;
  VertexSet current = VertexSet::all(n);
  std::size_t keeps = 0;

  for (std::size_t iter = 0;; ++iter) {
    if (iter > n) invariant_failure("no progress", iter);
    InducedSubgraph sub = induced_subgraph(g, current);
    const Graph& gi = sub.graph;
    const std::size_t size = gi.num_vertices();
    const std::size_t edges = gi.num_edges();

    TraceStep step;
    step.iteration = iter;
    step.vertices = size;
    step.edges = edges;
    step.density = gi.density_value();
    step.keep_steps = keeps;

    // Every iteration must keep d_i >= c2; while |V_i| > alpha n, also
    // d_i >= c1 - keeps * delta and keeps <= ceil(k).
    if (Rational(static_cast<long>(edges)) < times(t.c2, size)) {
      invariant_failure("density fell below c2", iter);
    }

    if (Rational(static_cast<long>(size)) <= alpha_n) {
      step.branch = Branch::DenseWitness;
      trace.push_back(step);
      return DenseWitness{current, edges, std::move(trace)};
    }

    const double floor_density = to_double(t.c1) - static_cast<double>(keeps) * t.delta_thm2;
    if (step.density < floor_density - 1e-9 * std::max(1.0, floor_density)) {
      invariant_failure("density below c1 - keeps * delta", iter);
    }
    if (keeps > t.k_steps) invariant_failure("too many keep steps", iter);

    VertexSet isolated = isolated_vertices(gi);
    if (!isolated.empty()) {
      step.branch = Branch::IsolatedRemoved;
      step.removed = isolated.size();
      trace.push_back(step);
      VertexSet keep_local = isolated.complement(size);
      current = VertexSet(to_original(sub, keep_local));
      continue;
    }

    SpectralResult spec = lambda1(gi, spectral);
    SweepCut cut = sweep_cut(gi, spec);
    SubsetStats ws = subset_stats(gi, cut.cut_set);
    const std::size_t wsize = cut.cut_set.size();
    step.lambda = spec.lambda1;
    step.cut_size = wsize;
    step.cut_boundary = ws.boundary;
    step.cut_touching = ws.touching;

    // touching <= d_i |W|, i.e. touching * |V_i| <= |E_i| * |W|.
    if (ws.touching * size <= edges * wsize) {
      step.branch = Branch::Delete;
      step.removed = wsize;
      trace.push_back(step);
      current = VertexSet(to_original(sub, cut.cut_set.complement(size)));
      continue;
    }
    if (static_cast<double>(ws.boundary) <= t.delta_thm2 * static_cast<double>(wsize)) {
      step.branch = Branch::Keep;
      step.removed = size - wsize;
      trace.push_back(step);
      current = VertexSet(to_original(sub, cut.cut_set));
      ++keeps;
      continue;
    }

    // boundary > delta |W| and boundary <= sqrt(2 lambda) Delta |W| force
    // lambda > lambda_star.
    if (spec.lambda1 < t.lambda_star) invariant_failure("sweep bound failed below lambda*", iter);
    step.branch = Branch::Certificate;
    trace.push_back(step);
    const double delta = static_cast<double>(p.delta_cap);
    return ExpanderCertificate{current, spec.lambda1, spec.lambda1 / (2.0 * delta),
                               std::move(trace)};
  }
}

OutcomeCheck verify_outcome(const Graph& g, const ExtractionParams& p, const ExtractionOutcome& o,
                            const SpectralOptions& spectral) {
  const Thresholds t = derive_thresholds(p);
  const std::size_t n = g.num_vertices();
  const Rational alpha_n = t.alpha_n(n);
  std::ostringstream detail;

  auto in_range = [&](const VertexSet& s) {
    return !s.empty() && s.members().back() < n;
  };

  if (const auto* w = std::get_if<DenseWitness>(&o)) {
    if (!in_range(w->w)) return {false, "witness empty or out of range"};
    const std::size_t within = subset_stats(g, w->w).within;
    detail << "|W|=" << w->w.size() << " within=" << within;
    if (within != w->spanned_edges) return {false, detail.str() + " (reported count differs)"};
    if (Rational(static_cast<long>(w->w.size())) > alpha_n) return {false, detail.str() + " (|W| > alpha n)"};
    if (Rational(static_cast<long>(within)) < times(t.c2, w->w.size())) {
      return {false, detail.str() + " (spans fewer than c2 |W| edges)"};
    }
    return {true, detail.str()};
  }

  const auto& cert = std::get<ExpanderCertificate>(o);
  if (!in_range(cert.vertices)) return {false, "certificate empty or out of range"};
  if (Rational(static_cast<long>(cert.vertices.size())) < alpha_n) {
    return {false, "certificate smaller than alpha n"};
  }
  InducedSubgraph sub = induced_subgraph(g, cert.vertices);
  try {
    SpectralResult fresh = lambda1(sub.graph, spectral);
    detail << "|V*|=" << cert.vertices.size() << " lambda=" << fresh.lambda1
           << " lambda*=" << t.lambda_star;
    // The fresh value carries its own solver error; allow exactly that.
    if (fresh.lambda1 + fresh.residual < t.lambda_star) {
      return {false, detail.str() + " (lambda below lambda*)"};
    }
    return {true, detail.str()};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

double certify_spectral_expansion(const Graph& g) {
  SpectralResult r = lambda1(g);
  if (!is_connected(g)) return 0.0;
  const double lower = r.lambda1 * (1.0 - 1e-12) - r.residual;
  return std::max(0.0, lower / (2.0 * static_cast<double>(g.max_degree())));
}

ExistentialResult existential_oracle(const Graph& g, const ExtractionParams& p) {
  const Thresholds t = derive_thresholds(p);
  const SmallGraph s = to_small(g, 14);
  const std::size_t n = s.n;

  if (n == 0 || g.density() < t.c1) {
    throw HypothesisViolation("density " + to_string(g.density()) + " below c1", VertexSet::all(n));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > p.delta_cap) {
      throw HypothesisViolation("vertex " + std::to_string(v) + " has degree above delta",
                                VertexSet({v}));
    }
  }
  const Rational alpha_n = t.alpha_n(n);
  for (std::size_t k = 1; Rational(static_cast<long>(k)) <= alpha_n && k <= n; ++k) {
    for (Mask w = (Mask{1} << k) - 1; w != 0; w = next_same_size(w, n)) {
      if (Rational(s.within(w)) >= times(t.c2, k)) {
        throw HypothesisViolation("a set of size " + std::to_string(k) + " spans at least c2 |W| edges",
                                  to_vertex_set(w));
      }
    }
  }

  // Lexicographically first subset of `universe` of the smallest size in
  // [lo, hi] whose induced edge count is at least ratio * |W|.
  auto first_dense = [&](Mask universe, const Rational& ratio, std::size_t lo,
                         std::size_t hi) -> Mask {
    std::vector<Vertex> ids;
    for (Mask rest = universe; rest; rest &= rest - 1) ids.push_back(std::countr_zero(rest));
    const std::size_t u = ids.size();
    for (std::size_t k = std::max<std::size_t>(lo, 1); k <= std::min(hi, u); ++k) {
      Mask best = 0;
      for (Mask sel = (Mask{1} << k) - 1; sel != 0; sel = next_same_size(sel, u)) {
        Mask w = 0;
        for (Mask rest = sel; rest; rest &= rest - 1) w |= Mask{1} << ids[std::countr_zero(rest)];
        const int spanned = s.within(w);
        if (Rational(spanned) >= times(ratio, k) && (best == 0 || lex_less_same_size(w, best))) {
          best = w;
        }
      }
      if (best != 0) return best;
    }
    return 0;
  };

  ExistentialResult result;
  Mask gi = s.full();
  for (int i = 0;; ++i) {
    if (i >= t.levels) {
      throw Error(ErrorCode::InternalInvariantViolated,
                  "density iteration reached level " + std::to_string(i));
    }
    // H_i: smallest, hence inclusion-minimal, induced subgraph of G_i with
    // density >= beta_i.
    const Mask hi = first_dense(gi, t.beta(i), 1, n);
    if (hi == 0) {
      throw Error(ErrorCode::InternalInvariantViolated, "G_i lost density beta_i");
    }
    result.levels.push_back({i, to_vertex_set(gi), to_vertex_set(hi)});

    // Update rule: W within U_i, alpha n <= |W| <= |U_i| / 2, spanning at
    // least beta_{i+1} |W| edges of H_i (induced, so the same as in G).
    const std::size_t ui = static_cast<std::size_t>(popcount(hi));
    std::size_t lo = 1;
    while (Rational(static_cast<long>(lo)) < alpha_n) ++lo;
    const Mask w = first_dense(hi, t.beta(i + 1), lo, ui / 2);
    if (w == 0) {
      result.subgraph = to_vertex_set(hi);
      break;
    }
    gi = w;
  }

  InducedSubgraph h = induced_subgraph(g, result.subgraph);
  result.gamma_verified = vertex_expansion_exact(h.graph).gamma;
  return result;
}

}  // namespace xpk
