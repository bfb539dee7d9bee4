#include "xpk/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xpk/error.hpp"
#include "xpk/rational.hpp"
#include "xpk/rng.hpp"
#include "xpk/small_graph.hpp"

namespace xpk {
namespace {

std::int64_t floor_of(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q.convert_to<std::int64_t>();
}

// Smallest within-edge count that makes a k-set violate.
struct Thresholds {
  std::vector<std::int64_t> t;  // t[k] for k in [0, kmax]

  Thresholds(const Rational& c2, std::size_t kmax, bool strict) : t(kmax + 1, 0) {
    for (std::size_t k = 1; k <= kmax; ++k) {
      const Rational bound = c2 * static_cast<long>(k);
      const std::int64_t f = floor_of(bound);
      // strict: within >= c2 k; non-strict: within > c2 k.
      t[k] = strict ? (Rational(f) == bound ? f : f + 1) : f + 1;
    }
  }

  bool violates(std::size_t k, std::size_t within) const {
    return k >= 1 && k < t.size() && static_cast<std::int64_t>(within) >= t[k];
  }
  // No k-set can reach t[k] edges.
  bool impossible(std::size_t k, std::int64_t max_edges) const { return max_edges < t[k]; }
};

std::int64_t choose2(std::size_t k) { return static_cast<std::int64_t>(k * (k - 1) / 2); }

struct Peeling {
  std::vector<Vertex> order;          // removal order, min degree first
  std::vector<std::size_t> core;      // core number per vertex
  std::size_t degeneracy = 0;
};

// Matula-Beck bucket peeling. `on_step(remaining_size, remaining_edges, i)`
// is called before removing order[i].
template <typename F>
Peeling peel(const Graph& g, F&& on_step) {
  const std::size_t n = g.num_vertices();
  Peeling p;
  p.core.assign(n, 0);
  std::vector<std::size_t> deg(n);
  std::size_t maxd = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    maxd = std::max(maxd, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(maxd + 1);
  for (Vertex v = n; v-- > 0;) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::size_t edges = g.num_edges();
  std::size_t low = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Removing a min-degree vertex lowers neighbor degrees by at most one.
    if (low > 0) --low;
    Vertex v = kNoVertex;
    while (v == kNoVertex) {
      auto& b = buckets[low];
      while (!b.empty() && v == kNoVertex) {
        const Vertex c = b.back();
        b.pop_back();
        if (!removed[c] && deg[c] == low) v = c;
      }
      if (v == kNoVertex) ++low;
    }
    on_step(n - i, edges, i, p.order);
    p.degeneracy = std::max(p.degeneracy, deg[v]);
    p.core[v] = p.degeneracy;
    removed[v] = 1;
    p.order.push_back(v);
    edges -= deg[v];
    for (Vertex u : g.neighbors(v)) {
      if (!removed[u]) buckets[--deg[u]].push_back(u);
    }
  }
  return p;
}

VertexSet suffix_set(const Graph& g, const std::vector<Vertex>& removed_prefix) {
  std::vector<char> gone(g.num_vertices(), 0);
  for (Vertex v : removed_prefix) gone[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

// ESU enumeration of connected sets of size <= kmax; stops at the first
// violating set.
struct ConnectedSearch {
  ConnectedSearch(const Graph& graph, const Thresholds& thresholds, std::size_t size_cap)
      : g(graph), th(thresholds), kmax(size_cap) {}

  const Graph& g;
  const Thresholds& th;
  std::size_t kmax;
  std::uint64_t effort = 0;
  double best_density = 0.0;
  std::vector<Vertex> sub;
  std::vector<int> in_sub;     // 1 when in sub
  std::vector<int> near;       // number of sub members adjacent (or in sub)
  std::optional<VertexSet> found;

  bool extend(std::vector<Vertex> ext, Vertex root, std::size_t within) {
    ++effort;
    const std::size_t k = sub.size();
    best_density = std::max(best_density, static_cast<double>(within) / static_cast<double>(k));
    if (th.violates(k, within)) {
      found = VertexSet(sub);
      return true;
    }
    if (k == kmax) return false;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      std::size_t gain = 0;
      // Exclusive neighbors of w (not in or next to the current set) join
      // the extension; everything else is reachable along another branch.
      for (Vertex u : g.neighbors(w)) {
        if (in_sub[u]) {
          ++gain;
        } else if (u > root && near[u] == 0) {
          next.push_back(u);
        }
      }
      // Mark w and its neighborhood.
      sub.push_back(w);
      in_sub[w] = 1;
      ++near[w];
      for (Vertex u : g.neighbors(w)) ++near[u];
      const bool hit = extend(std::move(next), root, within + gain);
      for (Vertex u : g.neighbors(w)) --near[u];
      --near[w];
      in_sub[w] = 0;
      sub.pop_back();
      if (hit) return true;
    }
    return false;
  }

  void run() {
    const std::size_t n = g.num_vertices();
    in_sub.assign(n, 0);
    near.assign(n, 0);
    for (Vertex v = 0; v < n && !found; ++v) {
      sub = {v};
      in_sub[v] = 1;
      ++near[v];
      for (Vertex u : g.neighbors(v)) ++near[u];
      std::vector<Vertex> ext;
      for (Vertex u : g.neighbors(v)) {
        if (u > v) ext.push_back(u);
      }
      extend(std::move(ext), v, 0);
      for (Vertex u : g.neighbors(v)) --near[u];
      --near[v];
      in_sub[v] = 0;
    }
  }
};

// Greedy growth from a seed vertex inside the 2-core: add the frontier
// vertex with the most edges into the current set (random tie-break).
bool grow_from(const Graph& g, const std::vector<char>& usable, Vertex seed, std::size_t kmax,
               const Thresholds& th, Rng& rng, std::uint64_t& effort, double& best_density,
               std::vector<int>& gain, std::vector<char>& in_set, std::optional<VertexSet>& found) {
  std::vector<Vertex> members{seed};
  std::vector<Vertex> frontier;
  in_set[seed] = 1;
  auto touch = [&](Vertex v) {
    for (Vertex u : g.neighbors(v)) {
      ++effort;
      if (!usable[u] || in_set[u]) continue;
      if (gain[u]++ == 0) frontier.push_back(u);
    }
  };
  touch(seed);
  std::size_t within = 0;
  bool hit = false;
  while (members.size() < kmax && !frontier.empty()) {
    std::size_t best_i = 0;
    int best_gain = -1;
    std::uint64_t ties = 0;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int gv = gain[frontier[i]];
      if (gv > best_gain) {
        best_gain = gv;
        best_i = i;
        ties = 1;
      } else if (gv == best_gain && rng.uniform(++ties) == 0) {
        best_i = i;
      }
    }
    effort += frontier.size();
    const Vertex v = frontier[best_i];
    frontier[best_i] = frontier.back();
    frontier.pop_back();
    within += static_cast<std::size_t>(gain[v]);
    gain[v] = 0;
    in_set[v] = 1;
    members.push_back(v);
    touch(v);
    const std::size_t k = members.size();
    best_density = std::max(best_density, static_cast<double>(within) / static_cast<double>(k));
    if (th.violates(k, within)) {
      found = VertexSet(members);
      hit = true;
      break;
    }
  }
  for (Vertex v : frontier) gain[v] = 0;
  for (Vertex v : members) in_set[v] = 0;
  return hit;
}

}  // namespace

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::PassExact: return "PASS_EXACT";
    case VerdictStatus::PassCertified: return "PASS_CERTIFIED";
    case VerdictStatus::Violation: return "VIOLATION";
    case VerdictStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

std::size_t max_set_size(double alpha, std::size_t n) {
  const std::int64_t k = floor_of(decimal(alpha) * static_cast<long>(n));
  return static_cast<std::size_t>(std::clamp<std::int64_t>(k, 0, static_cast<std::int64_t>(n)));
}

std::size_t degeneracy(const Graph& g) {
  return peel(g, [](std::size_t, std::size_t, std::size_t, const std::vector<Vertex>&) {}).degeneracy;
}

SparsityVerdict local_sparsity_verdict(const Graph& g, double c2, double alpha,
                                       const SparsityOptions& options) {
  if (!std::isfinite(c2) || !(decimal(c2) > 1)) throw Error(ErrorCode::InvalidParams, "need c2 > 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidParams, "need 0 < alpha < 1");
  const std::size_t n = g.num_vertices();
  const std::size_t kmax = max_set_size(alpha, n);
  const Thresholds th(decimal(c2), kmax, options.strict);
  SparsityVerdict out;

  // Sizes that cannot violate even as cliques.
  std::size_t live_max = 0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (!th.impossible(k, choose2(k))) live_max = k;
  }
  if (live_max == 0) {
    out.status = VerdictStatus::PassExact;
    return out;
  }

  if (n <= options.exhaustive_n) {
    const SmallGraph s = to_small(g, 64);
    for (std::size_t k = 1; k <= live_max; ++k) {
      if (th.impossible(k, choose2(k))) continue;
      for (Mask w = (Mask{1} << k) - 1; w != 0; w = next_same_size(w, n)) {
        ++out.effort_used;
        const int within = s.within(w);
        out.best_density = std::max(out.best_density, double(within) / double(k));
        if (th.violates(k, static_cast<std::size_t>(within))) {
          out.status = VerdictStatus::Violation;
          out.witness = to_vertex_set(w);
          return out;
        }
      }
    }
    out.status = VerdictStatus::PassExact;
    return out;
  }

  if (live_max <= options.exhaustive_size) {
    ConnectedSearch search{g, th, live_max};
    search.run();
    out.effort_used = search.effort;
    out.best_density = search.best_density;
    out.status = search.found ? VerdictStatus::Violation : VerdictStatus::PassExact;
    out.witness = search.found;
    return out;
  }

  // Peeling: checks every suffix of the min-degree removal order that fits
  // in the size range, and yields the degeneracy for the certificate.
  std::optional<VertexSet> found;
  Peeling p = peel(g, [&](std::size_t size, std::size_t edges, std::size_t,
                          const std::vector<Vertex>& prefix) {
    if (found || size > live_max || size == 0) return;
    out.best_density = std::max(out.best_density, double(edges) / double(size));
    if (th.violates(size, edges)) found = suffix_set(g, prefix);
  });
  out.effort_used += n + g.num_edges();
  if (found) {
    out.status = VerdictStatus::Violation;
    out.witness = std::move(found);
    return out;
  }

  // A d-degenerate graph spans at most min(C(k,2), d k - d(d+1)/2) edges on
  // k >= d vertices.
  const auto d = static_cast<std::int64_t>(p.degeneracy);
  bool certified = true;
  for (std::size_t k = 1; k <= live_max && certified; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    std::int64_t bound = choose2(k);
    if (kk > d) bound = std::min(bound, d * kk - d * (d + 1) / 2);
    certified = th.impossible(k, bound);
  }
  if (certified) {
    out.status = VerdictStatus::PassCertified;
    return out;
  }

  // Minimal violating sets have internal min-degree >= 2, so they live in
  // the 2-core.
  std::vector<char> usable(n, 0);
  std::vector<Vertex> seeds;
  for (Vertex v = 0; v < n; ++v) {
    if (p.core[v] >= 2) {
      usable[v] = 1;
      seeds.push_back(v);
    }
  }
  Rng rng(options.seed);
  std::vector<int> gain(n, 0);
  std::vector<char> in_set(n, 0);
  while (!seeds.empty() && out.effort_used < options.effort) {
    const Vertex seed = seeds[rng.uniform(seeds.size())];
    if (grow_from(g, usable, seed, live_max, th, rng, out.effort_used, out.best_density, gain,
                  in_set, found)) {
      out.status = VerdictStatus::Violation;
      out.witness = std::move(found);
      return out;
    }
    ++out.effort_used;
  }
  out.status = VerdictStatus::Inconclusive;
  return out;
}

SparsityVerdict touch_bound_verdict(const Graph& g, std::size_t m, std::size_t t,
                                    std::size_t exhaustive_n) {
  const std::size_t n = g.num_vertices();
  if (m > n) {
    throw Error(ErrorCode::CountTooLarge,
                "set size " + std::to_string(m) + " exceeds " + std::to_string(n) + " vertices");
  }
  SparsityVerdict out;
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::size_t top_sum = 0;
  for (std::size_t i = 0; i < m; ++i) top_sum += g.degree(by_degree[i]);
  out.effort_used = n;
  // touching(W) <= vol(W) <= top-m degree sum.
  if (top_sum < t) {
    out.status = VerdictStatus::PassCertified;
    return out;
  }
  VertexSet top(std::vector<Vertex>(by_degree.begin(), by_degree.begin() + static_cast<long>(m)));
  const std::size_t touched = subset_stats(g, top).touching;
  out.best_density = m > 0 ? double(touched) / double(m) : 0.0;
  if (touched >= t) {
    out.status = VerdictStatus::Violation;
    out.witness = std::move(top);
    return out;
  }
  if (n > exhaustive_n) {
    out.status = VerdictStatus::Inconclusive;
    return out;
  }
  const SmallGraph s = to_small(g, 64);
  Mask w = m == 0 ? 0 : (Mask{1} << m) - 1;
  do {
    ++out.effort_used;
    const auto touch = static_cast<std::size_t>(s.within(w) + s.boundary(w));
    if (touch >= t) {
      out.status = VerdictStatus::Violation;
      out.witness = to_vertex_set(w);
      return out;
    }
    w = m == 0 ? 0 : next_same_size(w, n);
  } while (w != 0);
  out.status = VerdictStatus::PassExact;
  return out;
}

}  // namespace xpk
