#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace oracle {
namespace {

std::vector<std::vector<bool>> adjacency_matrix(const xpk::Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const xpk::Edge& e : g.edges()) {
    a[e.u][e.v] = true;
    a[e.v][e.u] = true;
  }
  return a;
}

bool bit(std::uint64_t mask, std::size_t i) { return ((mask >> i) & 1) != 0; }

}  // namespace

std::vector<double> laplacian_spectrum(const xpk::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (const xpk::Edge& e : g.edges()) {
    const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u) * g.degree(e.v)));
    l(e.u, e.v) = -w;
    l(e.v, e.u) = -w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

xpk::Rational min_conductance(const xpk::Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("oracle limit");
  const auto a = adjacency_matrix(g);
  const long total = static_cast<long>(2 * g.num_edges());
  std::optional<xpk::Rational> best;
  for (std::uint64_t w = 1; w + 1 < (std::uint64_t{1} << n); ++w) {
    long cut = 0, vol = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!bit(w, i)) continue;
      vol += static_cast<long>(g.degree(static_cast<xpk::Vertex>(i)));
      for (std::size_t j = 0; j < n; ++j) cut += (a[i][j] && !bit(w, j)) ? 1 : 0;
    }
    const long denom = std::min(vol, total - vol);
    if (denom == 0) continue;
    xpk::Rational r(cut, denom);
    if (!best || r < *best) best = r;
  }
  return best.value_or(xpk::Rational(0));
}

xpk::Rational vertex_expansion(const xpk::Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("oracle limit");
  const auto a = adjacency_matrix(g);
  std::optional<xpk::Rational> best;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    long size = 0;
    for (std::size_t i = 0; i < n; ++i) size += bit(w, i) ? 1 : 0;
    if (2 * static_cast<std::size_t>(size) > n) continue;
    long ext = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (bit(w, j)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (bit(w, i) && a[i][j]) {
          ++ext;
          break;
        }
      }
    }
    xpk::Rational r(ext, size);
    if (!best || r < *best) best = r;
  }
  return *best;
}

std::optional<std::size_t> min_separator_size(const xpk::Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 13) throw std::invalid_argument("oracle limit");
  const auto edges = g.edges();
  std::vector<int> label(n, 0);  // 0 = S, 1 = A, 2 = B
  std::optional<std::size_t> best;
  for (;;) {
    std::size_t ca = 0, cb = 0;
    for (int l : label) {
      ca += l == 1;
      cb += l == 2;
    }
    if (ca > 0 && cb > 0 && 3 * ca <= 2 * n && 3 * cb <= 2 * n) {
      bool ok = true;
      for (const xpk::Edge& e : edges) {
        if (label[e.u] + label[e.v] == 3) {
          ok = false;
          break;
        }
      }
      const std::size_t s = n - ca - cb;
      if (ok && (!best || s < *best)) best = s;
    }
    std::size_t i = 0;
    while (i < n && label[i] == 2) label[i++] = 0;
    if (i == n) break;
    ++label[i];
  }
  return best;
}

int max_clique_minor(const xpk::Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 8) throw std::invalid_argument("oracle limit");
  if (n == 0) return 0;
  const auto a = adjacency_matrix(g);
  auto has_minor = [&](int t) {
    std::vector<int> label(n, 0);
    for (;;) {
      // Check: every label 1..t used, connected, pairwise adjacent.
      bool ok = true;
      for (int c = 1; c <= t && ok; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i) {
          if (label[i] == c) members.push_back(i);
        }
        if (members.empty()) {
          ok = false;
          break;
        }
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{members[0]};
        seen[members[0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
          std::size_t u = stack.back();
          stack.pop_back();
          for (std::size_t v = 0; v < n; ++v) {
            if (a[u][v] && label[v] == c && !seen[v]) {
              seen[v] = true;
              ++reached;
              stack.push_back(v);
            }
          }
        }
        ok = reached == members.size();
      }
      for (int c = 1; c <= t && ok; ++c) {
        for (int d = c + 1; d <= t && ok; ++d) {
          bool joined = false;
          for (std::size_t i = 0; i < n && !joined; ++i) {
            for (std::size_t j = 0; j < n && !joined; ++j) {
              joined = label[i] == c && label[j] == d && a[i][j];
            }
          }
          ok = joined;
        }
      }
      if (ok) return true;
      std::size_t i = 0;
      while (i < n && label[i] == t) label[i++] = 0;
      if (i == n) return false;
      ++label[i];
    }
  };
  int best = 1;
  for (int t = 2; t <= static_cast<int>(n); ++t) {
    if (static_cast<std::size_t>(t * (t - 1) / 2) > g.num_edges()) break;
    if (!has_minor(t)) break;
    best = t;
  }
  return best;
}

std::size_t max_within(const xpk::Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("oracle limit");
  std::size_t best = 0;
  const auto edges = g.edges();
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (static_cast<std::size_t>(__builtin_popcountll(w)) != k) continue;
    std::size_t c = 0;
    for (const xpk::Edge& e : edges) c += bit(w, e.u) && bit(w, e.v);
    best = std::max(best, c);
  }
  return best;
}

std::size_t max_touching(const xpk::Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("oracle limit");
  std::size_t best = 0;
  const auto edges = g.edges();
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (static_cast<std::size_t>(__builtin_popcountll(w)) != k) continue;
    std::size_t c = 0;
    for (const xpk::Edge& e : edges) c += bit(w, e.u) || bit(w, e.v);
    best = std::max(best, c);
  }
  return best;
}

double giant_fraction(double c) {
  double lo = 1e-9, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    // f(y) = 1 - exp(-c y) - y is positive below the root, negative above.
    if (1.0 - std::exp(-c * mid) - mid > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
