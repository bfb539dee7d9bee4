#include "xpk/minors.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "xpk/error.hpp"
#include "xpk/parallel.hpp"
#include "xpk/rng.hpp"
#include "xpk/small_graph.hpp"

namespace xpk {
namespace {

constexpr std::size_t kExactLimit = 12;

struct ExactSearch {
  const SmallGraph& sg;
  std::size_t t;
  // connected[v]: connected masks whose lowest vertex is v
  std::vector<std::vector<Mask>> connected;
  std::vector<Mask> chosen;
  std::vector<Mask> reach;  // chosen[i] plus its neighbours

  ExactSearch(const SmallGraph& g, std::size_t order) : sg(g), t(order), connected(g.n) {
    for (Mask m = 1; m <= g.full(); ++m) {
      if (sg.connected(m)) connected[std::countr_zero(m)].push_back(m);
    }
  }

  bool run(Mask used, std::size_t low) {
    if (chosen.size() == t) return true;
    const std::size_t need = t - chosen.size();
    for (std::size_t v = low; v < sg.n; ++v) {
      if (used >> v & 1) continue;
      // later sets live strictly above v
      const Mask above = sg.full() & ~((Mask{2} << v) - 1) & ~used;
      if (std::size_t(popcount(above)) + 1 < need) return false;
      for (Mask m : connected[v]) {
        if (m & used) continue;
        bool ok = true;
        for (Mask r : reach) {
          if (!(m & r)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(m);
        reach.push_back(m | sg.ext_neighborhood(m));
        if (run(used | m, v + 1)) return true;
        chosen.pop_back();
        reach.pop_back();
      }
    }
    return false;
  }
};

MinorModel to_model(const std::vector<Mask>& sets) {
  MinorModel m;
  for (Mask s : sets) m.branch_sets.push_back(to_vertex_set(s));
  return m;
}

void check_model(const Graph& g, const MinorModel& m) {
  std::string defect = model_defect(g, m);
  if (!defect.empty()) throw Error(ErrorCode::InternalInvariantViolated, "minor model: " + defect);
}

using Bits = boost::dynamic_bitset<>;

MinorModel contract_once(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<std::vector<Vertex>> sets(n);
  std::vector<Bits> adj(n, Bits(n));
  std::vector<bool> alive(n, true);
  for (Vertex v = 0; v < n; ++v) {
    sets[v] = {v};
    for (Vertex w : g.neighbors(v)) adj[v].set(w);
  }
  std::size_t nodes = n;

  auto degree = [&](std::size_t a) { return adj[a].count(); };
  while (true) {
    std::size_t min_deg = n;
    for (std::size_t a = 0; a < n; ++a) {
      if (alive[a]) min_deg = std::min(min_deg, degree(a));
    }
    if (min_deg + 1 >= nodes) break;  // complete

    // Contracting away from every minimum-degree node cannot raise the
    // minimum, so candidates are the edges at those nodes.
    std::size_t best = 0, ties = 0;
    std::pair<std::size_t, std::size_t> pick{0, 0};
    for (std::size_t a = 0; a < n; ++a) {
      if (!alive[a] || degree(a) != min_deg) continue;
      for (std::size_t b = adj[a].find_first(); b != Bits::npos; b = adj[a].find_next(b)) {
        Bits common = adj[a] & adj[b];
        Bits merged = adj[a] | adj[b];
        merged.reset(a);
        merged.reset(b);
        std::size_t result = merged.count();
        for (std::size_t x = 0; x < n && result > 0; ++x) {
          if (!alive[x] || x == a || x == b) continue;
          result = std::min(result, degree(x) - (common.test(x) ? 1 : 0));
        }
        if (ties == 0 || result > best) {
          best = result;
          ties = 1;
          pick = {a, b};
        } else if (result == best && rng.uniform(++ties) == 0) {
          pick = {a, b};
        }
      }
    }
    auto [a, b] = pick;
    if (a > b) std::swap(a, b);
    sets[a].insert(sets[a].end(), sets[b].begin(), sets[b].end());
    sets[b].clear();
    alive[b] = false;
    adj[a] |= adj[b];
    adj[a].reset(a);
    adj[a].reset(b);
    for (std::size_t x = adj[b].find_first(); x != Bits::npos; x = adj[b].find_next(x)) {
      adj[x].reset(b);
      if (x != a) adj[x].set(a);
    }
    adj[b].reset();
    --nodes;
  }

  MinorModel m;
  for (std::size_t a = 0; a < n; ++a) {
    if (alive[a]) m.branch_sets.emplace_back(std::move(sets[a]));
  }
  return m;
}

}  // namespace

std::string model_defect(const Graph& g, const MinorModel& m) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < m.order(); ++i) {
    const VertexSet& s = m.branch_sets[i];
    if (s.empty()) return "branch set " + std::to_string(i) + " is empty";
    for (Vertex v : s) {
      if (v >= n) return "vertex " + std::to_string(v) + " out of range";
      if (seen[v]) return "vertex " + std::to_string(v) + " in two branch sets";
      seen[v] = true;
    }
    if (!is_connected(induced_subgraph(g, s).graph)) {
      return "branch set " + std::to_string(i) + " is not connected";
    }
  }
  for (std::size_t i = 0; i < m.order(); ++i) {
    const VertexSet reach = subset_stats(g, m.branch_sets[i]).ext_neighborhood;
    for (std::size_t j = i + 1; j < m.order(); ++j) {
      const VertexSet& other = m.branch_sets[j];
      const bool joined =
          std::any_of(other.begin(), other.end(), [&](Vertex v) { return reach.contains(v); });
      if (!joined) return "branch sets " + std::to_string(i) + " and " + std::to_string(j) + " not adjacent";
    }
  }
  return {};
}

std::optional<MinorModel> clique_minor_exact(const Graph& g, std::size_t t) {
  SmallGraph sg = to_small(g, kExactLimit);
  if (t == 0) return MinorModel{};
  if (t > sg.n || g.num_edges() < t * (t - 1) / 2) return std::nullopt;
  ExactSearch search(sg, t);
  if (!search.run(0, 0)) return std::nullopt;
  MinorModel m = to_model(search.chosen);
  check_model(g, m);
  return m;
}

MinorModel max_clique_minor_exact(const Graph& g) {
  to_small(g, kExactLimit);
  MinorModel best;
  for (std::size_t t = 1; t <= g.num_vertices(); ++t) {
    auto m = clique_minor_exact(g, t);
    if (!m) break;  // monotone: a K_t model contains a K_{t-1} model
    best = std::move(*m);
  }
  return best;
}

MinorModel clique_minor_greedy(const Graph& g, std::uint64_t seed, std::size_t restarts,
                               std::size_t jobs) {
  if (restarts == 0) throw Error(ErrorCode::InvalidParams, "restarts must be positive");
  if (g.num_vertices() == 0) return {};
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "greedy minor needs a connected graph");
  std::vector<MinorModel> runs(restarts);
  parallel_for(restarts, jobs, [&](std::size_t r) { runs[r] = contract_once(g, derive_seed(seed, r)); });
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (runs[r].order() > runs[best].order()) best = r;
  }
  check_model(g, runs[best]);
  return runs[best];
}

}  // namespace xpk
