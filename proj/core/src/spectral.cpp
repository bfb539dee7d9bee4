#include "xpk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "xpk/error.hpp"
#include "xpk/rng.hpp"
#include "xpk/small_graph.hpp"

namespace xpk {
namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

void scale(Vec& x, double s) {
  for (double& v : x) v *= s;
}

void project_out(Vec& x, const Vec& unit) { axpy(-dot(unit, x), unit, x); }

void check_spectral_preconditions(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw Error(ErrorCode::TooSmall, "normalized Laplacian needs at least 2 vertices");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");
    }
  }
}

// D^{1/2} 1 normalized: the eigenvector of eigenvalue 0.
Vec trivial_vector(const Graph& g) {
  Vec u(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) u[v] = std::sqrt(static_cast<double>(g.degree(v)));
  scale(u, 1.0 / norm(u));
  return u;
}

// Normalizes x, fixes a deterministic sign, and fills lambda and residual.
SpectralResult finish(const Graph& g, Vec x, const Vec& u0, EigenMethod method,
                      std::size_t applications) {
  project_out(x, u0);
  scale(x, 1.0 / norm(x));
  auto first = std::find_if(x.begin(), x.end(), [](double v) { return std::fabs(v) > 1e-12; });
  if (first != x.end() && *first < 0) scale(x, -1.0);
  Vec lx = apply_normalized_laplacian(g, x);
  SpectralResult r;
  r.lambda1 = dot(x, lx);
  axpy(-r.lambda1, x, lx);
  r.residual = norm(lx);
  r.eigvec = std::move(x);
  r.method = method;
  r.applications = applications + 1;
  return r;
}

SpectralResult disconnected_null_vector(const Graph& g, const std::vector<VertexSet>& parts,
                                        const Vec& u0) {
  // Component of least volume; ties toward the smaller first member.
  const VertexSet* pick = &parts.front();
  std::size_t pick_vol = subset_stats(g, *pick).volume;
  for (const VertexSet& p : parts) {
    std::size_t vol = subset_stats(g, p).volume;
    if (vol < pick_vol || (vol == pick_vol && p[0] < (*pick)[0])) {
      pick = &p;
      pick_vol = vol;
    }
  }
  const double rest_vol = static_cast<double>(g.volume() - pick_vol);
  Vec x(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    x[v] = -std::sqrt(static_cast<double>(g.degree(v))) / rest_vol;
  }
  for (Vertex v : *pick) x[v] = std::sqrt(static_cast<double>(g.degree(v))) / static_cast<double>(pick_vol);
  return finish(g, std::move(x), u0, EigenMethod::Dense, 0);
}

SpectralResult dense_lambda1(const Graph& g, const Vec& u0) {
  const std::size_t n = g.num_vertices();
  // L + 3 u0 u0^T moves the trivial eigenvalue above the spectrum (<= 2),
  // so the smallest eigenpair is the one we want.
  Vec m(n * n, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    m[v * n + v] = 1.0;
    for (Vertex u : g.neighbors(v)) {
      m[v * n + u] = -1.0 / std::sqrt(static_cast<double>(g.degree(v) * g.degree(u)));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] += 3.0 * u0[i] * u0[j];
  auto eig = linalg::jacobi_eigen(std::move(m), n);
  return finish(g, std::move(eig.vectors.front()), u0, EigenMethod::Dense, 0);
}

struct CgStats {
  std::size_t applications = 0;
};

// Solves L y = b for b orthogonal to u0 on a connected graph.
Vec solve_laplacian(const Graph& g, const Vec& b, const Vec& u0, CgStats& stats) {
  const std::size_t n = b.size();
  const double bnorm = norm(b);
  Vec y(n, 0.0);
  if (bnorm == 0.0) return y;
  Vec r = b;
  Vec p = r;
  double rr = dot(r, r);
  const double target = 1e-13 * bnorm;
  const std::size_t cap = 20 * n + 2000;
  for (std::size_t it = 0; it < cap && std::sqrt(rr) > target; ++it) {
    Vec q = apply_normalized_laplacian(g, p);
    ++stats.applications;
    project_out(q, u0);
    const double pq = dot(p, q);
    if (pq <= 0.0) break;
    const double alpha = rr / pq;
    axpy(alpha, p, y);
    axpy(-alpha, q, r);
    const double rr_new = dot(r, r);
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    if (it % 50 == 49) project_out(p, u0);
  }
  project_out(y, u0);
  return y;
}

SpectralResult iterative_lambda1(const Graph& g, const Vec& u0, const SpectralOptions& opt) {
  const std::size_t n = g.num_vertices();
  const std::size_t krylov_max = std::min<std::size_t>(n - 1, 40);

  Rng rng(0x5eed5eedULL);
  Vec start(n);
  for (double& v : start) v = rng.uniform01() - 0.5;
  project_out(start, u0);
  scale(start, 1.0 / norm(start));

  CgStats stats;
  std::size_t total = 0;
  SpectralResult best;
  best.residual = std::numeric_limits<double>::infinity();

  for (std::size_t restart = 0; restart <= opt.max_restarts; ++restart) {
    std::vector<Vec> q{start};
    Vec alpha, beta;
    std::size_t outer = 0;
    for (std::size_t j = 0; j < krylov_max && outer < opt.max_applications; ++j) {
      Vec w = solve_laplacian(g, q[j], u0, stats);
      ++outer;
      const double a = dot(q[j], w);
      alpha.push_back(a);
      // Full reorthogonalization, twice.
      for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& qi : q) project_out(w, qi);
        project_out(w, u0);
      }
      const double b = norm(w);
      const bool breakdown = b < 1e-12 * std::max(1.0, std::fabs(a));
      const std::size_t k = alpha.size();
      if (k % 5 == 0 || breakdown || j + 1 == krylov_max || outer == opt.max_applications) {
        Vec t(k * k, 0.0);
        for (std::size_t i = 0; i < k; ++i) {
          t[i * k + i] = alpha[i];
          if (i + 1 < k) t[i * k + i + 1] = t[(i + 1) * k + i] = beta[i];
        }
        auto eig = linalg::jacobi_eigen(std::move(t), k);
        const Vec& s = eig.vectors.back();  // largest eigenvalue of L^+
        Vec x(n, 0.0);
        for (std::size_t i = 0; i < k; ++i) axpy(s[i], q[i], x);
        auto cand = finish(g, std::move(x), u0, EigenMethod::Iterative, 0);
        if (cand.residual < best.residual) best = std::move(cand);
        if (best.residual <= opt.tol) {
          best.applications = stats.applications + total + 1;
          return best;
        }
      }
      if (breakdown) break;
      beta.push_back(b);
      scale(w, 1.0 / b);
      q.push_back(std::move(w));
    }
    total += outer;
    start = best.eigvec;
    // Nudge the restart vector so a Krylov space that broke down early
    // can grow in new directions.
    for (double& v : start) v += 1e-6 * (rng.uniform01() - 0.5);
    project_out(start, u0);
    scale(start, 1.0 / norm(start));
  }
  throw Error(ErrorCode::NoConvergence,
              "best residual " + std::to_string(best.residual) + " above tol " + std::to_string(opt.tol));
}

}  // namespace

std::vector<double> apply_normalized_laplacian(const Graph& g, const std::vector<double>& x) {
  const std::size_t n = g.num_vertices();
  Vec inv_sqrt(n);
  for (Vertex v = 0; v < n; ++v) {
    inv_sqrt[v] = g.degree(v) ? 1.0 / std::sqrt(static_cast<double>(g.degree(v))) : 0.0;
  }
  Vec y(n);
  for (Vertex v = 0; v < n; ++v) {
    double s = 0.0;
    for (Vertex u : g.neighbors(v)) s += x[u] * inv_sqrt[u];
    y[v] = x[v] - s * inv_sqrt[v];
  }
  return y;
}

SpectralResult lambda1(const Graph& g, const SpectralOptions& options) {
  check_spectral_preconditions(g);
  const Vec u0 = trivial_vector(g);
  auto parts = connected_components(g);
  if (parts.size() > 1) return disconnected_null_vector(g, parts, u0);

  bool dense = options.method == EigenMethod::Dense ||
               (options.method == EigenMethod::Auto && g.num_vertices() <= options.dense_limit);
  if (dense) return dense_lambda1(g, u0);
  return iterative_lambda1(g, u0, options);
}

SweepCut sweep_cut(const Graph& g, const SpectralResult& spec) {
  check_spectral_preconditions(g);
  const std::size_t n = g.num_vertices();
  if (spec.eigvec.size() != n) {
    throw Error(ErrorCode::InvalidParams, "eigenvector length does not match graph");
  }
  std::vector<double> key(n);
  for (Vertex v = 0; v < n; ++v) key[v] = spec.eigvec[v] / std::sqrt(static_cast<double>(g.degree(v)));
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return key[a] < key[b] || (key[a] == key[b] && a < b);
  });

  const std::uint64_t total = g.volume();
  std::vector<char> in(n, 0);
  std::uint64_t boundary = 0, vol = 0;
  std::uint64_t best_num = 0, best_den = 0;
  std::size_t best_len = 0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Vertex v = order[j];
    std::uint64_t inside = 0;
    for (Vertex u : g.neighbors(v)) inside += in[u];
    in[v] = 1;
    boundary = boundary + g.degree(v) - 2 * inside;
    vol += g.degree(v);
    const std::uint64_t den = std::min(vol, total - vol);
    const bool better = best_len == 0 || boundary * best_den < best_num * den ||
                        (boundary * best_den == best_num * den && den < best_den);
    if (better) {
      best_num = boundary;
      best_den = den;
      best_len = j + 1;
    }
  }

  std::vector<Vertex> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_len));
  std::uint64_t prefix_vol = 0;
  for (Vertex v : prefix) prefix_vol += g.degree(v);
  VertexSet w(std::move(prefix));
  if (2 * prefix_vol > total) w = w.complement(n);

  SweepCut cut;
  cut.cut_set = std::move(w);
  cut.edge_boundary = best_num;
  cut.vol_w = best_den;
  cut.conductance = static_cast<double>(best_num) / static_cast<double>(best_den);
  return cut;
}

CheegerResult cheeger_exact(const Graph& g) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::TooSmall, "Cheeger constant needs n >= 2");
  SmallGraph s = to_small(g, 20);
  auto parts = connected_components(g);
  if (parts.size() > 1) {
    const VertexSet* pick = &parts.front();
    for (const VertexSet& p : parts) {
      if (p.size() < pick->size() || (p.size() == pick->size() && p[0] < (*pick)[0])) pick = &p;
    }
    return {Rational(0), *pick, false};
  }

  const int total = s.volume(s.full());
  std::int64_t best_num = -1, best_den = 1;
  Mask best = 0;
  for (Mask w = 1; w < s.full(); ++w) {
    const int vol = s.volume(w);
    const std::int64_t num = s.boundary(w);
    const std::int64_t den = std::min(vol, total - vol);
    bool better = false;
    if (best_num < 0 || num * best_den < best_num * den) {
      better = true;
    } else if (num * best_den == best_num * den) {
      better = popcount(w) < popcount(best) ||
               (popcount(w) == popcount(best) && lex_less_same_size(w, best));
    }
    if (better) {
      best_num = num;
      best_den = den;
      best = w;
    }
  }
  return {Rational(best_num, best_den), to_vertex_set(best), true};
}

namespace linalg {

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t n) {
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  double frob = 0.0;
  for (double x : a) frob += x * x;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off <= 1e-34 * frob || off == 0.0) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] < a[y * n + y] || (a[x * n + x] == a[y * n + y] && x < y);
  });
  SymmetricEigen out;
  for (std::size_t k : idx) {
    out.values.push_back(a[k * n + k]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace linalg
}  // namespace xpk
