#pragma once

// Intersecting families of k-separated sets, the star and exceptional
// families, and isomorphism under the symmetries of the circle.

#include <span>
#include <string>
#include <vector>

#include "sepekr/core.hpp"

namespace sepekr {

// A deduplicated, lexicographically sorted family of k-separated r-subsets
// of circular [n]. Construction validates every member.
class SetFamily {
 public:
  SetFamily(int n, int r, int k, std::vector<CircSet> sets = {});

  int n() const { return n_; }
  int r() const { return r_; }
  int k() const { return k_; }
  const std::vector<CircSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(const CircSet& a) const;

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool operator==(const SetFamily&) const = default;

 private:
  int n_;
  int r_;
  int k_;
  std::vector<CircSet> sets_;
};

// Sort and deduplicate in place.
void normalize(std::vector<CircSet>& sets);

bool is_intersecting(std::span<const CircSet> sets);
bool is_intersecting(const SetFamily& family);

// All k-separated r-sets containing element i.
SetFamily star_family(int n, int r, int k, int i);

// The exceptional extremal family at n = 2r + 2, k = 1: separated r-sets
// meeting {1, 3, ..., 4i+1} in at least i+1 elements, 1 <= i <= floor(r/2).
SetFamily b_family(int r, int i);

// One element of the dihedral group acting on circular [n]: optional
// reflection (a -> n+2-a) followed by rotation by `shift`.
struct CircleMap {
  int shift = 0;
  bool reflected = false;
};

std::vector<CircleMap> symmetry_group(int n, bool rotations_only);
CircSet apply(const CircleMap& g, const CircSet& a);
std::uint64_t apply_mask(const CircleMap& g, std::uint64_t mask, int n);

// Lexicographically least sorted image of `sets` over the group. All members
// must share the ambient n.
std::vector<CircSet> canonical_form(std::span<const CircSet> sets, bool rotations_only = false);

// True iff some group element maps the member-set of f onto that of g.
bool are_isomorphic(const SetFamily& f, const SetFamily& g, bool rotations_only = false);

// {1, a_2, ..., a_r} -> {k+2, a_2+k, ..., a_r+k}. Requires 1 in A and
// k+2 not in A; A must be k-separated.
CircSet g_map(const CircSet& a, int k);

// Maximal intersecting subfamily of `universe` built by greedy insertion in
// an order shuffled by `seed`. Deterministic for a given seed.
std::vector<CircSet> random_maximal_intersecting(std::span<const CircSet> universe, std::uint64_t seed);

// "n r k : {a,b,c} {d,e,f} ..."
std::string to_text(const SetFamily& family);

}  // namespace sepekr
