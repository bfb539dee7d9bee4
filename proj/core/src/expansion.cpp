#include "xpk/expansion.hpp"

#include "xpk/error.hpp"
#include "xpk/small_graph.hpp"

namespace xpk {
namespace {

struct ExpansionSearch {
  const SmallGraph& g;
  int max_size;
  // Best ratio so far as best_num / best_den.
  int best_num = -1;
  int best_den = 1;
  Mask best = 0;

  // Depth-first over sorted member lists; sets of equal size are visited in
  // lexicographic order, so only a strictly better ratio or a smaller set
  // with an equal ratio replaces the incumbent.
  void visit(Mask w, Mask nbr_union, int size, int next) {
    if (size > 0) {
      const int ext = popcount(nbr_union & ~w);
      const long lhs = static_cast<long>(ext) * best_den;
      const long rhs = static_cast<long>(best_num) * size;
      if (best_num < 0 || lhs < rhs || (lhs == rhs && size < popcount(best))) {
        best_num = ext;
        best_den = size;
        best = w;
      }
      if (best_num == 0 && size >= popcount(best)) return;
    }
    if (size == max_size) return;
    for (int v = next; v < static_cast<int>(g.n); ++v) {
      visit(w | (Mask{1} << v), nbr_union | g.adj[static_cast<std::size_t>(v)], size + 1, v + 1);
    }
  }
};

}  // namespace

ExpansionProfile vertex_expansion_exact(const Graph& g) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::TooSmall, "vertex expansion needs n >= 2");
  SmallGraph s = to_small(g, 24);
  ExpansionSearch search{s, static_cast<int>(s.n / 2)};
  search.visit(0, 0, 0, 0);
  return {Rational(search.best_num, search.best_den), to_vertex_set(search.best)};
}

std::optional<Separator> min_separator_exact(const Graph& g) {
  SmallGraph s = to_small(g, 16);
  const std::size_t n = s.n;
  const int cap = static_cast<int>((2 * n) / 3);  // |A|, |B| <= floor(2n/3)
  std::optional<Separator> best;
  int best_size = 0;
  for (Mask a = 1; a <= s.full() && a != 0; ++a) {
    if (popcount(a) > cap) continue;
    const Mask nbr = s.ext_neighborhood(a);
    const Mask rest = s.full() & ~a & ~nbr;
    if (rest == 0) continue;
    const int b_size = std::min(popcount(rest), cap);
    const int sep_size = popcount(nbr) + popcount(rest) - b_size;
    if (best && sep_size >= best_size) continue;
    Mask b = 0;
    Mask r = rest;
    for (int i = 0; i < b_size; ++i) {
      b |= r & (~r + 1);
      r &= r - 1;
    }
    best_size = sep_size;
    best = Separator{to_vertex_set(s.full() & ~a & ~b), to_vertex_set(a), to_vertex_set(b)};
    if (a == s.full()) break;
  }
  return best;
}

Rational separator_lower_bound(const Rational& gamma, std::size_t n) {
  if (gamma < 0) throw Error(ErrorCode::InvalidParams, "negative expansion");
  return gamma * static_cast<long>(n) / (3 * (gamma + 1));
}

}  // namespace xpk
