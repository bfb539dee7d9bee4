#include "xpk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "xpk/error.hpp"

namespace xpk {
namespace {

std::string edge_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_members(const Graph& g, const VertexSet& w) {
  if (!w.empty() && w.members().back() >= g.num_vertices()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(w.members().back()) + " not in graph on " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw Error(ErrorCode::InvalidParams, "duplicate vertex " + std::to_string(*dup));
  }
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement(std::size_t n) const {
  std::vector<Vertex> out;
  out.reserve(n >= members_.size() ? n - members_.size() : 0);
  auto it = members_.begin();
  for (Vertex v = 0; v < n; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Rational Graph::density() const {
  if (num_vertices() == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(num_edges_),
                  static_cast<std::int64_t>(num_vertices()));
}

double Graph::density_value() const {
  if (num_vertices() == 0) return 0.0;
  return static_cast<double>(num_edges_) / static_cast<double>(num_vertices());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + edge_name(e.u, e.v) + " with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "edge " + edge_name(e.u, e.v));
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(canon.begin(), canon.end());
  auto dup = std::adjacent_find(canon.begin(), canon.end());
  if (dup != canon.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge " + edge_name(dup->u, dup->v));
  }

  Graph g;
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : canon) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (u, v): filling in this order leaves every
  // neighbor list sorted as well.
  for (const Edge& e : canon) g.adjacency_[pos[e.u]++] = e.v;
  for (const Edge& e : canon) g.adjacency_[pos[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.num_edges_ = canon.size();
  g.max_degree_ = n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
  return g;
}

SubsetStats subset_stats(const Graph& g, const VertexSet& w) {
  check_members(g, w);
  const std::size_t n = g.num_vertices();
  std::vector<char> in(n, 0);
  for (Vertex v : w) in[v] = 1;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> outside;

  SubsetStats s;
  std::size_t inner_endpoints = 0;
  for (Vertex v : w) {
    s.volume += g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      if (in[u]) {
        ++inner_endpoints;
      } else {
        ++s.boundary;
        if (!seen[u]) {
          seen[u] = 1;
          outside.push_back(u);
        }
      }
    }
  }
  s.within = inner_endpoints / 2;
  s.touching = s.within + s.boundary;
  s.ext_neighborhood = VertexSet(std::move(outside));
  return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.empty()) throw Error(ErrorCode::EmptySet, "induced subgraph of empty set");
  check_members(g, w);
  InducedSubgraph out;
  out.original.assign(w.begin(), w.end());
  out.local.assign(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    out.local[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : w) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u && out.local[u] != kNoVertex) edges.push_back({out.local[v], out.local[u]});
    }
  }
  out.graph = build_graph(w.size(), edges);
  return out;
}

TrimResult trim_high_degree(const Graph& g, std::size_t count) {
  const std::size_t n = g.num_vertices();
  if (count > n) {
    throw Error(ErrorCode::CountTooLarge,
                "cannot remove " + std::to_string(count) + " of " + std::to_string(n) + " vertices");
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.resize(count);
  TrimResult out;
  out.removed = VertexSet(std::move(order));
  std::vector<char> gone(n, 0);
  for (Vertex v : out.removed) gone[v] = 1;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) kept.push_back(e);
  }
  out.graph = build_graph(n, kept);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> parts;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> part;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    parts.push_back(std::move(part));
  }
  // Parts were discovered in order of their smallest member.
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<VertexSet> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.emplace_back(std::move(p));
  return out;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

VertexSet isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

namespace make {

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return build_graph(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return build_graph(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return build_graph(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return build_graph(leaves + 1, e);
}

Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return build_graph(rows * cols, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});          // outer cycle
    e.push_back({i, static_cast<Vertex>(i + 5)});                // spokes
    e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});  // pentagram
  }
  return build_graph(10, e);
}

Graph empty(std::size_t n) { return build_graph(n, std::span<const Edge>{}); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const auto shift = static_cast<Vertex>(a.num_vertices());
  for (const Edge& x : b.edges()) e.push_back({x.u + shift, x.v + shift});
  return build_graph(a.num_vertices() + b.num_vertices(), e);
}

Graph clique_with_path(std::size_t k, std::size_t path_len) {
  std::vector<Edge> e = complete(k).edges();
  const auto start = static_cast<Vertex>(k);
  if (path_len > 0) e.push_back({0, start});
  for (Vertex v = start; v + 1 < start + path_len; ++v) e.push_back({v, v + 1});
  return build_graph(k + path_len, e);
}

}  // namespace make
}  // namespace xpk
