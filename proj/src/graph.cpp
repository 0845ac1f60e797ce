#include "sepekr/graph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sepekr {

namespace {

void check_size(Count count, std::size_t max_vertices) {
  if (count > static_cast<Count>(max_vertices)) {
    throw ResourceLimitError("graph would have " + to_string(count) + " vertices, limit is " +
                             std::to_string(max_vertices));
  }
}

class Colorer {
 public:
  Colorer(const Graph& g, const ColoringLimits& limits)
      : g_(g), limits_(limits), start_(std::chrono::steady_clock::now()), color_(g.order(), -1) {}

  bool colorable(int colors) {
    std::fill(color_.begin(), color_.end(), -1);
    colors_ = colors;
    return assign(0, 0);
  }

 private:
  // DSATUR choice: most distinct neighbor colors, then highest degree,
  // then lowest index.
  std::size_t pick() const {
    std::size_t best = g_.order();
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      const int sat = std::popcount(forbidden(v));
      const std::size_t deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  std::uint64_t forbidden(std::size_t v) const {
    std::uint64_t used = 0;
    const Bitset& row = g_.neighbors(v);
    for (std::size_t u = row.next(0); u != Bitset::npos; u = row.next(u + 1)) {
      if (color_[u] >= 0) used |= std::uint64_t{1} << color_[u];
    }
    return used;
  }

  bool assign(std::size_t colored, int used) {
    if (colored == g_.order()) return true;
    if (limits_.max_seconds > 0.0 && (++nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.max_seconds) throw ResourceLimitError("chromatic number: time budget exceeded");
    }
    const std::size_t v = pick();
    const std::uint64_t banned = forbidden(v);
    // A fresh color is interchangeable with any other fresh one.
    const int top = std::min(colors_, used + 1);
    for (int c = 0; c < top; ++c) {
      if ((banned >> c) & 1U) continue;
      color_[v] = c;
      if (assign(colored + 1, std::max(used, c + 1))) return true;
    }
    color_[v] = -1;
    return false;
  }

  const Graph& g_;
  const ColoringLimits& limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> color_;
  int colors_ = 0;
  std::uint64_t nodes_ = 0;
};

std::size_t greedy_clique(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    Bitset cand = g.neighbors(s);
    std::size_t size = 1;
    for (std::size_t v = cand.next(0); v != Bitset::npos; v = cand.next(v + 1)) {
      ++size;
      cand &= g.neighbors(v);
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

DisjointnessGraph build_disjointness(int n, int r, int k, std::vector<CircSet> vertices) {
  DisjointnessGraph g;
  g.n = n;
  g.r = r;
  g.k = k;
  g.vertices = std::move(vertices);
  g.adjacency = Graph(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if ((g.vertices[i].mask() & g.vertices[j].mask()) == 0) g.adjacency.add_edge(i, j);
    }
  }
  return g;
}

DisjointnessGraph build_kneser(int n, int r, std::size_t max_vertices) {
  require_params(n, r, 0);
  if (r > n) throw std::invalid_argument("build_kneser: needs r <= n");
  check_size(binomial(n, r), max_vertices);
  return build_disjointness(n, r, 0, enumerate_separated(n, r, 0));
}

DisjointnessGraph build_schrijver(int n, int r, int k, std::size_t max_vertices) {
  require_feasible(n, r, k);
  check_size(count_separated(n, r, k), max_vertices);
  return build_disjointness(n, r, k, enumerate_separated(n, r, k));
}

std::size_t independence_number(const DisjointnessGraph& g, const Limits& limits) {
  return static_cast<std::size_t>(max_clique_parallel(g.adjacency.complement(), limits).weight);
}

int chromatic_number(const Graph& g, const ColoringLimits& limits) {
  if (g.order() > limits.max_vertices) {
    throw ResourceLimitError("chromatic number: " + std::to_string(g.order()) + " vertices exceeds limit " +
                             std::to_string(limits.max_vertices));
  }
  if (g.order() == 0) return 0;
  Colorer colorer(g, limits);
  for (int c = static_cast<int>(greedy_clique(g));; ++c) {
    if (c > 64) throw ResourceLimitError("chromatic number: more than 64 colors");
    if (colorer.colorable(c)) return c;
  }
}

int chromatic_number(const DisjointnessGraph& g, const ColoringLimits& limits) {
  return chromatic_number(g.adjacency, limits);
}

void export_dimacs(const DisjointnessGraph& g, std::ostream& out) {
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.order(); ++u) {
    const Bitset& row = g.adjacency.neighbors(u);
    for (std::size_t v = row.next(u + 1); v != Bitset::npos; v = row.next(v + 1)) {
      out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
  }
  if (!out) throw std::runtime_error("export_dimacs: write failed");
}

}  // namespace sepekr
