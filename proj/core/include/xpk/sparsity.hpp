#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "xpk/graph.hpp"

namespace xpk {

enum class VerdictStatus { PassExact, PassCertified, Violation, Inconclusive };
std::string_view to_string(VerdictStatus s);

struct SparsityVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::optional<VertexSet> witness;  // set on Violation
  std::uint64_t effort_used = 0;     // subsets evaluated / adjacency entries scanned
  double best_density = 0.0;         // largest within/|W| seen with |W| in range
};

struct SparsityOptions {
  std::uint64_t effort = 1'000'000;
  std::uint64_t seed = 0;
  // Strict: W violates when it spans >= c2 |W| edges ("spans less than").
  // Non-strict: when it spans > c2 |W| ("at most").
  bool strict = true;
  // Full enumeration when n <= exhaustive_n, or when alpha n <= exhaustive_size
  // (connected sets only; a violating set always has a violating component).
  std::size_t exhaustive_n = 20;
  std::size_t exhaustive_size = 3;
};

// Is every W with |W| <= alpha n sparser than c2 |W|?
// Sound shortcuts come first: sizes k with C(k,2) below the threshold cannot
// violate, and a d-degenerate graph has at most d k - d(d+1)/2 edges on k
// vertices (PassCertified when that bound clears every size).
// Errors: InvalidParams.
SparsityVerdict local_sparsity_verdict(const Graph& g, double c2, double alpha,
                                       const SparsityOptions& options = {});

// Does every set of m vertices touch fewer than t edges?
// Errors: CountTooLarge.
SparsityVerdict touch_bound_verdict(const Graph& g, std::size_t m, std::size_t t,
                                    std::size_t exhaustive_n = 20);

// Largest k with k <= alpha n, exactly (alpha read as a decimal).
std::size_t max_set_size(double alpha, std::size_t n);

// Degeneracy: the largest minimum degree over all subgraphs.
std::size_t degeneracy(const Graph& g);

}  // namespace xpk
