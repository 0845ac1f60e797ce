#pragma once

// The compression map f : [n] -> [n-1] (1 fixed, j -> j-1 otherwise), the
// partition of an intersecting family it induces, the derived (r-1)-set
// family, and per-instance checks of the structural facts used to bound
// intersecting families of k-separated sets.
//
// Set lists here are plain sorted vectors rather than SetFamily: the derived
// families live on shrinking ground sets and their separation is something
// to check, not assume.

#include <span>
#include <string>
#include <vector>

#include "sepekr/families.hpp"

namespace sepekr {

// Image under f with ambient n-1. Members 1 and 2 merge into 1.
CircSet f_map(const CircSet& a);

// f applied j times; ambient n-j. Requires n - j >= |A|.
CircSet f_iter(const CircSet& a, int j);

// Sorted, deduplicated image of a list under f^j.
std::vector<CircSet> f_image(std::span<const CircSet> sets, int j = 1);

struct PartitionResult {
  int n = 0;
  int r = 0;
  int k = 0;
  std::vector<CircSet> b;               // 1 not in A, f(A) still k-separated
  std::vector<CircSet> c;               // 1 in A, f(A) still k-separated
  std::vector<std::vector<CircSet>> d;  // d[0]: {1,k+2} in A; d[i]: {n+1-i, k+2-i} in A
  // Every member fell into exactly one class.
  bool exhaustive = true;
  std::vector<CircSet> unclassified;
  std::vector<CircSet> overlapping;
};

// Requires k >= 1 and n >= (k+1)r + 1.
PartitionResult partition_family(const SetFamily& family);

struct Witness {
  std::string note;
  std::vector<CircSet> sets;
};

struct DerivedFamilies {
  int n = 0;  // ambient of the input family
  int r = 0;
  int k = 0;
  std::vector<CircSet> e;                    // f(B) ∩ f(C), ambient n-1
  std::vector<CircSet> from_e;               // f^{k-1}(E) - {1}, ambient n-k
  std::vector<std::vector<CircSet>> from_d;  // f^k(D_i) - {1}, ambient n-k
  std::vector<CircSet> f;                    // union of the above
  std::vector<CircSet> ff;                   // f(F), ambient n-k-1
  // Structural problems met during assembly (removing 1 from a set lacking
  // it, overlapping components). Empty for intersecting inputs.
  std::vector<Witness> violations;
};

// Requires r >= 2 (the derived sets have r-1 elements).
DerivedFamilies derive_families(const PartitionResult& p);

struct ClauseResult {
  std::string id;
  bool passed = true;
  std::vector<Witness> witnesses;
};

struct LemmaReport {
  int n = 0;
  int r = 0;
  int k = 0;
  std::size_t family_size = 0;
  std::vector<ClauseResult> clauses;

  bool passed() const;
  const ClauseResult* find(std::string_view id) const;
};

// Runs every clause on one family. A non-intersecting input is reported via
// the "pre.intersecting" clause; the remaining clauses still run.
LemmaReport verify_lemma_suite(const SetFamily& family);

}  // namespace sepekr
