#pragma once

// Kneser and (generalized) Schrijver graphs: vertices are r-subsets of
// circular [n], edges join disjoint pairs.

#include <iosfwd>
#include <vector>

#include "sepekr/clique.hpp"
#include "sepekr/core.hpp"

namespace sepekr {

struct DisjointnessGraph {
  int n = 0;
  int r = 0;
  int k = 0;                      // 0 for the Kneser graph
  std::vector<CircSet> vertices;  // enumeration order
  Graph adjacency;                // edge iff disjoint

  std::size_t order() const { return vertices.size(); }
  std::size_t edge_count() const { return adjacency.edge_count(); }
};

// Default vertex cap for graph construction.
inline constexpr std::size_t kDefaultVertexLimit = 20000;

DisjointnessGraph build_kneser(int n, int r, std::size_t max_vertices = kDefaultVertexLimit);
DisjointnessGraph build_schrijver(int n, int r, int k, std::size_t max_vertices = kDefaultVertexLimit);

// Induced disjointness graph on an arbitrary list of sets sharing n.
DisjointnessGraph build_disjointness(int n, int r, int k, std::vector<CircSet> vertices);

// Exact alpha(G) via the OpenMP clique kernel on the complement.
std::size_t independence_number(const DisjointnessGraph& g, const Limits& limits = {});

// Exact chromatic number, iterative deepening on the color count from a
// greedy clique lower bound. Intended for tiny graphs.
struct ColoringLimits {
  std::size_t max_vertices = 64;
  double max_seconds = 0.0;
};
int chromatic_number(const Graph& g, const ColoringLimits& limits = {});
int chromatic_number(const DisjointnessGraph& g, const ColoringLimits& limits = {});

// "p edge V E" then "e u v" (1-based, u < v) in enumeration order.
void export_dimacs(const DisjointnessGraph& g, std::ostream& out);

}  // namespace sepekr
