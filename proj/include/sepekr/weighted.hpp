#pragma once

// Weighted k-separated sets. The weight of A counts the ways to extend A to
// a (k+1)r-set by inserting exactly k new points strictly inside each
// circular gap: w(A) = prod_i binomial(gap_i - 1, k).

#include <vector>

#include "sepekr/search.hpp"

namespace sepekr {

// Requires A k-separated.
Count weight(const CircSet& a, int k);

// All (k+1)r-sets obtained from A by inserting k interior points into every
// gap, sorted. Its size is weight(A, k).
std::vector<CircSet> gamma(const CircSet& a, int k);

Count family_weight(const SetFamily& family);

struct WeightedReport {
  int n = 0;
  int r = 0;
  int k = 0;
  std::uint64_t optimum = 0;
  Count star_weight = 0;
  Count binomial_bound = 0;  // binomial(n-1, (k+1)r-1)
  bool pass = false;
  SetFamily witness;
  std::uint64_t nodes = 0;
};

// Exact maximum weight of an intersecting subfamily, compared against the
// star weight and binomial(n-1, (k+1)r-1). Requires n >= 2(k+1)r.
WeightedReport verify_weighted_ekr(int n, int r, int k, const SearchOptions& options = {});

}  // namespace sepekr
