#pragma once

#include <cstddef>
#include <vector>

#include "xpk/graph.hpp"
#include "xpk/rational.hpp"

namespace xpk {

enum class EigenMethod { Auto, Dense, Iterative };

struct SpectralOptions {
  // Convergence: ||L x - lambda x||_2 <= tol for the returned unit vector.
  // The normalized Laplacian has norm at most 2, so this is a relative
  // backward error.
  double tol = 1e-8;
  EigenMethod method = EigenMethod::Auto;
  std::size_t dense_limit = 64;
  // Iterative path: operator applications per restart, and restarts.
  std::size_t max_applications = 10000;
  std::size_t max_restarts = 10;
};

struct SpectralResult {
  double lambda1 = 0.0;         // Rayleigh quotient of eigvec
  std::vector<double> eigvec;   // unit, orthogonal to D^{1/2} 1
  double residual = 0.0;        // ||L eigvec - lambda1 eigvec||_2
  EigenMethod method = EigenMethod::Dense;
  std::size_t applications = 0;  // Laplacian-vector products spent
};

// Second-smallest eigenvalue of the normalized Laplacian
// L = I - D^{-1/2} A D^{-1/2}. Disconnected graphs get an exact null vector
// supported on the component of least volume. Connected graphs on at most
// dense_limit vertices use a dense Jacobi eigensolver; larger ones use
// Lanczos on the pseudo-inverse (conjugate-gradient inner solves) with the
// trivial eigenvector D^{1/2} 1 deflated.
// Errors: TooSmall (n < 2), IsolatedVertex, NoConvergence.
SpectralResult lambda1(const Graph& g, const SpectralOptions& options = {});

struct SweepCut {
  VertexSet cut_set;
  std::size_t edge_boundary = 0;
  std::size_t vol_w = 0;
  double conductance = 0.0;
};

// Prefix sweep over vertices sorted by eigvec[v] / sqrt(deg v); returns the
// minimum-conductance prefix cut oriented so vol(W) <= vol(V)/2.
SweepCut sweep_cut(const Graph& g, const SpectralResult& spec);

struct CheegerResult {
  Rational h;
  VertexSet witness;
  bool connected = true;
};

// Exhaustive Cheeger constant for 2 <= n <= 20. A disconnected graph yields
// h = 0 with its smallest component as witness and connected = false.
CheegerResult cheeger_exact(const Graph& g);

// Normalized Laplacian applied to x (degree-0 rows act as identity).
std::vector<double> apply_normalized_laplacian(const Graph& g, const std::vector<double>& x);

namespace linalg {

struct SymmetricEigen {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi on a dense symmetric matrix stored row-major (n x n).
SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n);

}  // namespace linalg
}  // namespace xpk
