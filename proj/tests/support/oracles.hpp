#pragma once

// Reference implementations used only by tests. Each one is written
// independently of the library code it checks (plain loops, no shared
// helpers beyond Graph accessors).

#include <cstddef>
#include <optional>
#include <vector>

#include "xpk/graph.hpp"
#include "xpk/rational.hpp"

namespace oracle {

// All eigenvalues of the normalized Laplacian, ascending (Eigen dense solver).
std::vector<double> laplacian_spectrum(const xpk::Graph& g);

// min over nonempty proper W of e(W, V-W) / min(vol W, vol V-W).
xpk::Rational min_conductance(const xpk::Graph& g);

// min over nonempty W, |W| <= n/2, of |N(W)| / |W|.
xpk::Rational vertex_expansion(const xpk::Graph& g);

// Minimum |S| over partitions A + B + S (A, B nonempty, no A-B edge,
// |A|, |B| <= 2n/3) by enumerating all 3^n labelings.
std::optional<std::size_t> min_separator_size(const xpk::Graph& g);

// Largest t with a K_t minor, by enumerating every labeling of vertices
// with {unused, 1..t}. Only for n <= 8.
int max_clique_minor(const xpk::Graph& g);

// Max edges spanned / touched by a vertex set of exactly k vertices.
std::size_t max_within(const xpk::Graph& g, std::size_t k);
std::size_t max_touching(const xpk::Graph& g, std::size_t k);

// Positive root of y = 1 - exp(-c y) for c > 1 (bisection).
double giant_fraction(double c);

}  // namespace oracle
