#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "xpk/rational.hpp"

namespace xpk {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of vertex ids. Range checks against a concrete
// graph happen where the set is used (VertexOutOfRange).
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts the ids; throws InvalidParams on duplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet all(std::size_t n);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  // Members of [0, n) not in this set.
  VertexSet complement(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Immutable undirected simple graph in compressed adjacency form.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t max_degree() const { return max_degree_; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;

  // m/n exactly; 0 for the empty graph.
  Rational density() const;
  double density_value() const;

  std::size_t volume() const { return 2 * num_edges_; }

  // Canonical edge list: u < v, lexicographic.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::size_t num_edges_ = 0;
  std::size_t max_degree_ = 0;
};

// Throws SelfLoop, DuplicateEdge or VertexOutOfRange naming the first
// offending edge. Input order does not matter.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

struct SubsetStats {
  std::size_t within = 0;    // both endpoints in W
  std::size_t boundary = 0;  // exactly one endpoint in W
  std::size_t touching = 0;  // at least one endpoint in W
  std::size_t volume = 0;    // sum of degrees over W
  VertexSet ext_neighborhood;
};

SubsetStats subset_stats(const Graph& g, const VertexSet& w);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> old id
  std::vector<Vertex> local;     // old id -> new id, kNoVertex when absent
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

struct TrimResult {
  Graph graph;  // same vertex ids; edges at removed vertices deleted
  VertexSet removed;
};

// Removes the `count` highest-degree vertices (ties: smaller id first).
TrimResult trim_high_degree(const Graph& g, std::size_t count);

// Ordered by decreasing size, then by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

// Complete graph, cycle, path, grid, and similar fixtures used by tests,
// benchmarks and the CLI.
namespace make {
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
Graph grid(std::size_t rows, std::size_t cols);
Graph petersen();
Graph empty(std::size_t n);
// Disjoint union; vertices of b are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);
// K_k on vertices [0, k) plus a path on [k, k + path_len) whose first vertex
// is joined to vertex 0 by a single bridge edge.
Graph clique_with_path(std::size_t k, std::size_t path_len);
}  // namespace make

}  // namespace xpk
