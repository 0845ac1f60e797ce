#pragma once

// Exact maximum (weight) clique kernels on bitset graphs. A maximum
// independent set of a graph is a maximum clique of its complement; the
// search and graph modules use these on the "members intersect" graph.
//
// Branch and bound with greedy-coloring upper bounds: a clique takes at most
// one vertex per color class, so the sum over classes of the heaviest weight
// bounds any clique inside the candidate set. Vertices are renumbered by
// decreasing degree before searching.
//
// The *_serial kernels are the reference; the *_parallel kernels split the
// root branches across OpenMP threads and return the same optimum.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sepekr/bitset.hpp"

namespace sepekr {

class Graph {
 public:
  explicit Graph(std::size_t order = 0);

  std::size_t order() const { return rows_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;

  Graph complement() const;

 private:
  std::vector<Bitset> rows_;
};

// Thrown when a search exceeds its vertex, time or node budget. Distinct from
// std::invalid_argument so callers can tell an abort from a bad request.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_vertices = 20000;
  double max_seconds = 0.0;     // 0: unlimited
  std::uint64_t max_nodes = 0;  // 0: unlimited
};

struct CliqueResult {
  std::uint64_t weight = 0;
  std::vector<std::size_t> vertices;  // ascending
  std::uint64_t nodes = 0;
};

CliqueResult max_clique_serial(const Graph& g, const Limits& limits = {});
CliqueResult max_clique_parallel(const Graph& g, const Limits& limits = {});

// Weights must be nonnegative integers whose total fits in 64 bits.
CliqueResult max_weight_clique_serial(const Graph& g, std::span<const std::uint64_t> weights,
                                      const Limits& limits = {});
CliqueResult max_weight_clique_parallel(const Graph& g, std::span<const std::uint64_t> weights,
                                        const Limits& limits = {});

// Lexicographically least clique (as an ascending vertex list) whose weight
// equals `target`. Deterministic; std::nullopt if none exists.
std::optional<std::vector<std::size_t>> first_clique_with_weight(const Graph& g,
                                                                 std::span<const std::uint64_t> weights,
                                                                 std::uint64_t target,
                                                                 const Limits& limits = {});

// Visits every clique of weight exactly `target` whose least vertex lies in
// `roots` (all vertices when empty). Weights must be positive and `target`
// must be the maximum clique weight. Root branches run in parallel; the
// visitor is called under a lock, in unspecified order. Returns node count.
std::uint64_t for_each_optimal_clique(const Graph& g, std::span<const std::uint64_t> weights,
                                      std::uint64_t target, std::span<const std::size_t> roots,
                                      const std::function<void(std::span<const std::size_t>)>& visit,
                                      const Limits& limits = {});

// Worker count used by the parallel kernels (OpenMP max threads).
int solver_threads();
void set_solver_threads(int threads);

}  // namespace sepekr
