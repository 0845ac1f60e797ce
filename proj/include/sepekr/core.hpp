#pragma once

// Circular set arithmetic on the ground set [n] = {1, ..., n} arranged
// around a circle, with k-separation and the gap encoding.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sepekr/count.hpp"

namespace sepekr {

inline constexpr int kMaxGround = 64;

// A nonempty subset of circular [n], 1 <= n <= 64, stored as a bit mask
// (element e is bit e-1) together with its ambient size.
class CircSet {
 public:
  CircSet(int n, std::span<const int> elems);
  CircSet(int n, std::initializer_list<int> elems)
      : CircSet(n, std::span<const int>(elems.begin(), elems.size())) {}

  static CircSet from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  int size() const;
  std::uint64_t mask() const { return mask_; }
  bool contains(int e) const;
  std::vector<int> elems() const;
  int min_elem() const;
  int max_elem() const;

  // "{1,3,5}"
  std::string str() const;

  bool operator==(const CircSet&) const = default;
  // Lexicographic on the sorted element lists, then by ambient size.
  std::strong_ordering operator<=>(const CircSet& other) const;

 private:
  CircSet(int n, std::uint64_t mask, bool) : n_(n), mask_(mask) {}

  int n_;
  std::uint64_t mask_;
};

// Lexicographic comparison of sorted element lists encoded as masks.
std::strong_ordering lex_compare(std::uint64_t a, std::uint64_t b);

// Bits 0..n-1 set.
std::uint64_t ground_mask(int n);

// Circular gaps a_{i+1} - a_i with a_{r+1} = a_1 + n; all >= 1, sum n.
struct GapVector {
  std::vector<int> gaps;

  int sum() const;
  int min() const;
  bool operator==(const GapVector&) const = default;
};

bool is_k_separated(const CircSet& a, int k);

GapVector gap_vector(const CircSet& a);

// Inverse of gap_vector: elems[0] = start, successive differences given by
// the gaps (wrapping modulo n). The final gap closes the circle.
CircSet from_gaps(int start, const GapVector& gaps, int n);

// All k-separated r-subsets of circular [n] in lexicographic order. Empty
// when n < (k+1)r.
std::vector<CircSet> enumerate_separated(int n, int r, int k);

// a -> ((a - 1 + s) mod n) + 1
CircSet rotate(const CircSet& a, int s);

// a -> n + 2 - a (mod n); fixes 1 and, for even n, n/2 + 1.
CircSet reflect(const CircSet& a);

// |{A in [n]^(r)_k : 1 in A}| = binomial(n - kr - 1, r - 1).
Count count_star_formula(int n, int r, int k);

// |[n]^(r)_k| = n/(n-kr) * binomial(n-kr, r); zero when n < (k+1)r.
Count count_separated(int n, int r, int k);

// Argument checks shared by the modules. Throw std::invalid_argument.
void require_params(int n, int r, int k);
void require_feasible(int n, int r, int k);

}  // namespace sepekr
