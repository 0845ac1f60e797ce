#include "sepekr/search.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sepekr {

namespace {

struct Universe {
  std::vector<CircSet> sets;
  Graph meets;  // edge iff members intersect
};

Universe build_universe(int n, int r, int k, const Limits& limits) {
  require_feasible(n, r, k);
  const Count size = count_separated(n, r, k);
  if (size > static_cast<Count>(limits.max_vertices)) {
    throw ResourceLimitError("[" + std::to_string(n) + "]^(" + std::to_string(r) + ")_" + std::to_string(k) +
                             " has " + to_string(size) + " sets, limit is " + std::to_string(limits.max_vertices));
  }
  Universe u;
  u.sets = enumerate_separated(n, r, k);
  u.meets = Graph(u.sets.size());
  for (std::size_t i = 0; i < u.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < u.sets.size(); ++j) {
      if ((u.sets[i].mask() & u.sets[j].mask()) != 0) u.meets.add_edge(i, j);
    }
  }
  return u;
}

SetFamily family_of(int n, int r, int k, const std::vector<CircSet>& sets, std::span<const std::size_t> idx) {
  std::vector<CircSet> members;
  members.reserve(idx.size());
  for (auto i : idx) members.push_back(sets[i]);
  return SetFamily(n, r, k, std::move(members));
}

SearchResult solve(int n, int r, int k, const Universe& u, std::span<const std::uint64_t> weights,
                   const SearchOptions& options) {
  const CliqueResult best = max_weight_clique_parallel(u.meets, weights, options.limits);
  const auto witness = first_clique_with_weight(u.meets, weights, best.weight, options.limits);
  if (!witness) throw std::logic_error("search: optimum found but no witness of that weight");
  SearchResult out{n, r, k, best.weight, family_of(n, r, k, u.sets, *witness), std::nullopt, best.nodes};
  return out;
}

}  // namespace

SearchResult max_intersecting(int n, int r, int k, const SearchOptions& options) {
  const Universe u = build_universe(n, r, k, options.limits);
  const std::vector<std::uint64_t> ones(u.sets.size(), 1);
  return solve(n, r, k, u, ones, options);
}

SearchResult max_intersecting_weighted(int n, int r, int k, const WeightFn& weight_fn,
                                       const SearchOptions& options) {
  if (!weight_fn) throw std::invalid_argument("max_intersecting_weighted: empty weight function");
  const Universe u = build_universe(n, r, k, options.limits);
  std::vector<std::uint64_t> weights;
  weights.reserve(u.sets.size());
  for (const auto& a : u.sets) weights.push_back(weight_fn(a));
  return solve(n, r, k, u, weights, options);
}

SearchOptions class_search_defaults() {
  SearchOptions o;
  o.limits.max_vertices = kClassVertexLimit;
  return o;
}

SearchResult extremal_classes(int n, int r, int k, const SearchOptions& options) {
  const Universe u = build_universe(n, r, k, options.limits);
  const std::vector<std::uint64_t> ones(u.sets.size(), 1);
  SearchResult out = solve(n, r, k, u, ones, options);

  std::vector<std::size_t> roots;
  if (options.symmetry_prune) {
    // Sets through 1 come first in lexicographic order.
    for (std::size_t i = 0; i < u.sets.size() && u.sets[i].contains(1); ++i) roots.push_back(i);
  }
  std::set<std::vector<CircSet>> forms;
  std::vector<CircSet> members;
  out.nodes += for_each_optimal_clique(
      u.meets, ones, out.optimum, roots,
      [&](std::span<const std::size_t> clique) {
        members.clear();
        for (auto i : clique) members.push_back(u.sets[i]);
        forms.insert(canonical_form(members, options.rotations_only));
      },
      options.limits);

  std::vector<SetFamily> classes;
  classes.reserve(forms.size());
  for (const auto& f : forms) classes.emplace_back(n, r, k, f);
  out.classes = std::move(classes);
  return out;
}

}  // namespace sepekr
