#pragma once

// Exact maximum (and maximum-weight) intersecting families of k-separated
// sets, and the census of extremal families up to circular symmetry.
//
// An intersecting subfamily of [n]^(r)_k is a clique of the "members meet"
// graph (equivalently an independent set of the disjointness graph).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sepekr/clique.hpp"
#include "sepekr/families.hpp"

namespace sepekr {

inline constexpr std::size_t kClassVertexLimit = 2000;

struct SearchOptions {
  Limits limits{};
  // Isomorphism group used for class representatives: rotations only, or
  // rotations and reflections.
  bool rotations_only = false;
  // Class enumeration only visits families containing a set through 1.
  // Every family has a rotation with that property, so no class is lost.
  bool symmetry_prune = true;
};

struct SearchResult {
  int n = 0;
  int r = 0;
  int k = 0;
  std::uint64_t optimum = 0;
  // Lexicographically least optimal family (sorted member lists compared
  // lexicographically).
  SetFamily witness;
  // Canonical representatives, one per isomorphism class, sorted.
  std::optional<std::vector<SetFamily>> classes;
  std::uint64_t nodes = 0;  // diagnostics, may vary with scheduling
};

using WeightFn = std::function<std::uint64_t(const CircSet&)>;

// Requires n >= (k+1)r.
SearchResult max_intersecting(int n, int r, int k, const SearchOptions& options = {});

SearchResult max_intersecting_weighted(int n, int r, int k, const WeightFn& weight_fn,
                                       const SearchOptions& options = {});

// Default options cap the universe at kClassVertexLimit sets.
SearchOptions class_search_defaults();
SearchResult extremal_classes(int n, int r, int k, const SearchOptions& options = class_search_defaults());

}  // namespace sepekr
