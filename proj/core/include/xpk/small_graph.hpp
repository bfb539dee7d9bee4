#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "xpk/graph.hpp"

namespace xpk {

// Bitmask view of a graph on at most 64 vertices, used by every exhaustive
// (oracle-scale) routine.
using Mask = std::uint64_t;

struct SmallGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;

  Mask full() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

  // Union of neighbor masks over W, minus W itself.
  Mask ext_neighborhood(Mask w) const {
    Mask out = 0;
    for (Mask rest = w; rest; rest &= rest - 1) out |= adj[std::countr_zero(rest)];
    return out & ~w;
  }

  int within(Mask w) const {
    int twice = 0;
    for (Mask rest = w; rest; rest &= rest - 1) twice += std::popcount(adj[std::countr_zero(rest)] & w);
    return twice / 2;
  }

  int boundary(Mask w) const {
    int b = 0;
    for (Mask rest = w; rest; rest &= rest - 1) b += std::popcount(adj[std::countr_zero(rest)] & ~w);
    return b;
  }

  int volume(Mask w) const {
    int vol = 0;
    for (Mask rest = w; rest; rest &= rest - 1) vol += std::popcount(adj[std::countr_zero(rest)]);
    return vol;
  }

  bool connected(Mask w) const {
    if (w == 0) return false;
    Mask seen = w & (~w + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask rest = frontier; rest; rest &= rest - 1) next |= adj[std::countr_zero(rest)];
      next &= w & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == w;
  }
};

// Throws TooLarge when g has more than `limit` (<= 64) vertices.
SmallGraph to_small(const Graph& g, std::size_t limit);

VertexSet to_vertex_set(Mask m);
Mask to_mask(const VertexSet& s);

inline int popcount(Mask m) { return std::popcount(m); }

// Lexicographic order of the sorted member lists of two distinct sets of
// equal size: the smallest element of the symmetric difference decides.
inline bool lex_less_same_size(Mask a, Mask b) {
  Mask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

// Next subset of the same popcount (Gosper's hack); 0 after the last one
// below 2^n.
inline Mask next_same_size(Mask x, std::size_t n) {
  Mask c = x & (~x + 1);
  Mask r = x + c;
  if (r == 0) return 0;
  Mask next = (((r ^ x) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return 0;
  return next;
}

}  // namespace xpk
