#include "xpk/small_graph.hpp"

#include <string>

#include "xpk/error.hpp"

namespace xpk {

SmallGraph to_small(const Graph& g, std::size_t limit) {
  if (g.num_vertices() > limit || g.num_vertices() > 64) {
    throw Error(ErrorCode::TooLarge, "exhaustive routine limited to " + std::to_string(limit) +
                                         " vertices, got " + std::to_string(g.num_vertices()));
  }
  SmallGraph s;
  s.n = g.num_vertices();
  s.adj.assign(s.n, 0);
  for (Vertex v = 0; v < s.n; ++v) {
    for (Vertex u : g.neighbors(v)) s.adj[v] |= Mask{1} << u;
  }
  return s;
}

VertexSet to_vertex_set(Mask m) {
  std::vector<Vertex> ids;
  for (; m; m &= m - 1) ids.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return VertexSet(std::move(ids));
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) {
    if (v >= 64) throw Error(ErrorCode::VertexOutOfRange, "vertex beyond 64-bit mask");
    m |= Mask{1} << v;
  }
  return m;
}

}  // namespace xpk
