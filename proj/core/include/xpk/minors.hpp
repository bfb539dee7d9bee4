#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xpk/graph.hpp"

namespace xpk {

// Branch sets of a clique minor: disjoint, each connected in G, every pair
// joined by an edge. Contracting each set gives K_order.
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  std::size_t order() const { return branch_sets.size(); }
};

// Empty string when m is a valid K_order model in g, else the first defect.
std::string model_defect(const Graph& g, const MinorModel& m);

// Exhaustive search for a K_t model; n <= 12. Branch sets are generated in
// order of their smallest vertex, each a connected mask disjoint from and
// adjacent to all earlier ones.
// Errors: TooLarge.
std::optional<MinorModel> clique_minor_exact(const Graph& g, std::size_t t);

// Largest t with a K_t model, with that model; n <= 12.
MinorModel max_clique_minor_exact(const Graph& g);

// Randomized contraction: repeatedly contract an edge of the current minor
// at a minimum-degree node, picking the one that leaves the largest minimum
// degree (ties by seed), until the minor is complete. Best over restarts,
// which run concurrently on derived seeds. The order is a lower bound only.
// Errors: Disconnected, InvalidParams (restarts == 0).
MinorModel clique_minor_greedy(const Graph& g, std::uint64_t seed, std::size_t restarts = 10,
                               std::size_t jobs = 1);

}  // namespace xpk
