#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "xpk/error.hpp"
#include "xpk/graph.hpp"
#include "xpk/rational.hpp"
#include "xpk/spectral.hpp"

namespace xpk {

// Densities c1 > c2 > 1, size fraction 0 < alpha < 1, degree bound
// delta_cap >= 1. Decimal inputs are read as the decimal fractions they
// denote (see decimal()).
struct ExtractionParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double alpha = 0.0;
  std::size_t delta_cap = 0;
};

void validate(const ExtractionParams& p);

struct Thresholds {
  Rational c1, c2, alpha;  // exact decimal values of the parameters
  std::size_t delta_cap = 0;

  int levels = 0;          // ceil(log2(1 / alpha))
  Rational delta_thm1;     // (c1 - c2) / levels
  Rational gamma_thm1;     // (c1 - c2) / (delta_cap * levels)

  double k_thm2 = 0.0;     // log(alpha) / log(1 - 1/(2 delta_cap))
  std::size_t k_steps = 0;  // ceil(k_thm2): bound on keep-steps
  double delta_thm2 = 0.0;  // (c1 - c2) / (2 k_thm2)
  // Below lambda_star the sweep cut's boundary sqrt(2 lambda) vol(W) is at
  // most delta_thm2 |W|; at or above it the Cheeger chain gives expansion
  // gamma_alg = lambda_star / (2 delta_cap).
  double lambda_star = 0.0;
  double gamma_alg = 0.0;

  Rational beta(int i) const { return c1 - i * delta_thm1; }
  // alpha * n as an exact rational.
  Rational alpha_n(std::size_t n) const { return alpha * static_cast<long>(n); }
};

// Errors: InvalidParams.
Thresholds derive_thresholds(const ExtractionParams& p);

// (c2 / (5 c1))^(c2 / (c2 - 1)): the subset-size fraction below which
// G(n, c1/n) is locally c2-sparse with high probability.
double local_sparsity_alpha(double c1, double c2);

enum class Branch { IsolatedRemoved, Delete, Keep, Certificate, DenseWitness };
std::string_view to_string(Branch b);

struct TraceStep {
  std::size_t iteration = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double density = 0.0;
  Branch branch = Branch::Delete;
  double lambda = -1.0;  // -1 when no eigenvalue was computed this step
  std::size_t cut_size = 0;
  std::size_t cut_boundary = 0;
  std::size_t cut_touching = 0;
  std::size_t keep_steps = 0;  // keep-steps taken before this step
  std::size_t removed = 0;     // vertices dropped by this step
};

struct ExpanderCertificate {
  VertexSet vertices;  // original ids
  double lambda_achieved = 0.0;
  double gamma_lower_bound = 0.0;  // lambda_achieved / (2 delta_cap)
  std::vector<TraceStep> trace;
};

struct DenseWitness {
  VertexSet w;  // original ids
  std::size_t spanned_edges = 0;
  std::vector<TraceStep> trace;
};

using ExtractionOutcome = std::variant<ExpanderCertificate, DenseWitness>;

const std::vector<TraceStep>& trace_of(const ExtractionOutcome& o);

// Spectral peeling. Starting from V, each iteration on G_i = G[V_i]:
//   |V_i| <= alpha n                 -> DenseWitness(V_i)
//   isolated vertices                -> drop them all
//   sweep cut W of lambda(G_i):
//     W touches <= d_i |W| edges      -> V_{i+1} = V_i \ W  (density cannot drop)
//     e(W, V_i \ W) <= delta_thm2 |W| -> V_{i+1} = W        (density drops < delta_thm2)
//     otherwise lambda(G_i) > lambda_star -> ExpanderCertificate(V_i)
// Errors: InvalidParams, PreconditionDensity, PreconditionDegree,
// InternalInvariantViolated.
ExtractionOutcome extract_expander(const Graph& g, const ExtractionParams& p,
                                   const SpectralOptions& spectral = {});

struct OutcomeCheck {
  bool ok = false;
  std::string detail;
};

// Independent re-verification: exact within-edge count for a witness, a
// fresh eigenvalue computation on the induced subgraph for a certificate.
OutcomeCheck verify_outcome(const Graph& g, const ExtractionParams& p, const ExtractionOutcome& o,
                            const SpectralOptions& spectral = {});

// lambda(G) / (2 Delta(G)), shaved by the eigen residual so floating error
// never overstates it. Every W with |W| <= n/2 has |N(W)| >= this * |W|.
// Errors: IsolatedVertex, TooSmall.
double certify_spectral_expansion(const Graph& g);

class HypothesisViolation : public Error {
 public:
  HypothesisViolation(const std::string& what, VertexSet witness)
      : Error(ErrorCode::HypothesisViolated, what), witness_(std::move(witness)) {}
  const VertexSet& witness() const { return witness_; }

 private:
  VertexSet witness_;
};

struct ExistentialLevel {
  int level = 0;
  VertexSet graph;    // vertex set of G_i (original ids)
  VertexSet minimal;  // H_i: minimal induced subgraph with density >= beta_i
};

struct ExistentialResult {
  VertexSet subgraph;  // original ids
  Rational gamma_verified;
  std::vector<ExistentialLevel> levels;
};

// Density-halving iteration run literally with exhaustive searches; n <= 14.
// Checks all three hypotheses first (HypothesisViolation with a witness
// set), then returns the final H_i and its exact vertex expansion.
ExistentialResult existential_oracle(const Graph& g, const ExtractionParams& p);

}  // namespace xpk
