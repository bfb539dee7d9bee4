#pragma once

#include <optional>

#include "xpk/graph.hpp"
#include "xpk/rational.hpp"

namespace xpk {

struct ExpansionProfile {
  Rational gamma;      // min |N(W)| / |W| over nonempty W, |W| <= n/2
  VertexSet worst_set;  // attains gamma; ties: smaller set, then lexicographic
};

// Exhaustive vertex expansion for 2 <= n <= 24.
ExpansionProfile vertex_expansion_exact(const Graph& g);

struct Separator {
  VertexSet s;
  VertexSet a;
  VertexSet b;
};

// Minimum-size S over partitions V = A + B + S with A, B nonempty, no A-B
// edges and |A|, |B| <= 2n/3. std::nullopt when no such partition exists.
// n <= 16.
std::optional<Separator> min_separator_exact(const Graph& g);

// gamma * n / (3 (gamma + 1)): the smallest separator a gamma-expander on n
// vertices can have.
Rational separator_lower_bound(const Rational& gamma, std::size_t n);

}  // namespace xpk
