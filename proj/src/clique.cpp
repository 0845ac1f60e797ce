#include "sepekr/clique.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sepekr {

Graph::Graph(std::size_t order) : rows_(order, Bitset(order)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw std::invalid_argument("Graph::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

Graph Graph::complement() const {
  Graph out(order());
  for (std::size_t v = 0; v < order(); ++v) {
    Bitset row(order());
    row.set_all();
    row.subtract(rows_[v]);
    row.reset(v);
    out.rows_[v] = std::move(row);
  }
  return out;
}

int solver_threads() { return omp_get_max_threads(); }

void set_solver_threads(int threads) { omp_set_num_threads(std::max(1, threads)); }

namespace {

using Clock = std::chrono::steady_clock;

// Shared abort state for one search.
class Control {
 public:
  explicit Control(const Limits& limits) : limits_(limits), start_(Clock::now()) {}

  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }

  // Called every few thousand nodes by each worker.
  void charge(std::uint64_t nodes) {
    const auto total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (limits_.max_nodes != 0 && total > limits_.max_nodes) {
      abort("node budget of " + std::to_string(limits_.max_nodes) + " exceeded");
    }
    if (limits_.max_seconds > 0.0) {
      const std::chrono::duration<double> elapsed = Clock::now() - start_;
      if (elapsed.count() > limits_.max_seconds) {
        abort("time budget of " + std::to_string(limits_.max_seconds) + " s exceeded");
      }
    }
  }

  void abort(std::string why) {
    std::lock_guard lock(mu_);
    if (!stopped_) reason_ = std::move(why);
    stopped_ = true;
  }

  void rethrow_if_stopped() const {
    if (stopped()) throw ResourceLimitError("search aborted: " + reason_);
  }

 private:
  const Limits& limits_;
  Clock::time_point start_;
  std::atomic<bool> stopped_{false};
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex mu_;
  std::string reason_;
};

// The graph renumbered by decreasing degree (ties: lower original index
// first). Internal vertex i is original vertex to_orig[i].
struct Problem {
  std::size_t n = 0;
  std::vector<Bitset> adj;
  std::vector<std::uint64_t> w;
  std::vector<std::size_t> to_orig;
  std::vector<std::size_t> to_internal;
};

void check_input(const Graph& g, std::span<const std::uint64_t> weights, const Limits& limits) {
  if (weights.size() != g.order()) throw std::invalid_argument("clique: one weight per vertex required");
  if (g.order() > limits.max_vertices) {
    throw ResourceLimitError("graph has " + std::to_string(g.order()) + " vertices, limit is " +
                             std::to_string(limits.max_vertices));
  }
  std::uint64_t total = 0;
  for (auto w : weights) {
    if (__builtin_add_overflow(total, w, &total)) throw std::overflow_error("clique: total weight overflows");
  }
}

Problem renumber(const Graph& g, std::span<const std::uint64_t> weights) {
  Problem p;
  p.n = g.order();
  p.to_orig.resize(p.n);
  std::iota(p.to_orig.begin(), p.to_orig.end(), std::size_t{0});
  std::vector<std::size_t> deg(p.n);
  for (std::size_t v = 0; v < p.n; ++v) deg[v] = g.degree(v);
  std::stable_sort(p.to_orig.begin(), p.to_orig.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  p.to_internal.resize(p.n);
  for (std::size_t i = 0; i < p.n; ++i) p.to_internal[p.to_orig[i]] = i;
  p.adj.assign(p.n, Bitset(p.n));
  p.w.resize(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    const std::size_t v = p.to_orig[i];
    p.w[i] = weights[v];
    const Bitset& row = g.neighbors(v);
    for (std::size_t u = row.next(0); u != Bitset::npos; u = row.next(u + 1)) p.adj[i].set(p.to_internal[u]);
  }
  return p;
}

struct Level {
  Bitset p;
  Bitset next;
  Bitset q;
  Bitset r;
  std::vector<std::size_t> order;
  std::vector<std::uint64_t> bound;
};

// Greedy coloring of `cand` in ascending index order. Fills `order` class by
// class and bound[i] with the summed class maxima up to i's class.
void color_bound(const std::vector<Bitset>& adj, const std::vector<std::uint64_t>& w, const Bitset& cand,
                 Level& lv) {
  lv.order.clear();
  lv.bound.clear();
  lv.q = cand;
  std::uint64_t cum = 0;
  while (lv.q.any()) {
    lv.r = lv.q;
    std::uint64_t heaviest = 0;
    const std::size_t start = lv.order.size();
    for (std::size_t v = lv.r.next(0); v != Bitset::npos; v = lv.r.next(v + 1)) {
      lv.order.push_back(v);
      heaviest = std::max(heaviest, w[v]);
      lv.q.reset(v);
      lv.r.subtract(adj[v]);
    }
    cum += heaviest;
    lv.bound.resize(lv.order.size(), cum);
    for (std::size_t i = start; i < lv.order.size(); ++i) lv.bound[i] = cum;
  }
}

// Shared incumbent for maximization.
struct Incumbent {
  std::atomic<std::uint64_t> weight{0};
  std::vector<std::size_t> clique;  // internal numbering
  std::mutex mu;
  std::atomic<bool> has{false};

  void offer(std::uint64_t wt, const std::vector<std::size_t>& c) {
    std::lock_guard lock(mu);
    if (!has || wt > weight.load()) {
      weight.store(wt);
      clique = c;
      has = true;
    }
  }
};

class Worker {
 public:
  Worker(const Problem& p, Control& ctl) : p_(p), ctl_(ctl) {}
  ~Worker() { ctl_.charge(pending_); }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::size_t>& clique() { return clique_; }

  Level& level(std::size_t depth) {
    while (levels_.size() <= depth) levels_.emplace_back();
    return levels_[depth];
  }

  void tick() {
    ++nodes_;
    if (++pending_ == 4096) {
      ctl_.charge(pending_);
      pending_ = 0;
    }
  }

  // Maximize: extend clique_ (weight `cur`) with vertices of `cand`.
  void maximize(std::uint64_t cur, const Bitset& cand, std::size_t depth, Incumbent& best) {
    if (ctl_.stopped()) return;
    tick();
    Level& lv = level(depth);
    lv.p = cand;
    color_bound(p_.adj, p_.w, lv.p, lv);
    for (std::size_t i = lv.order.size(); i-- > 0;) {
      if (cur + lv.bound[i] <= best.weight.load(std::memory_order_relaxed)) return;
      const std::size_t v = lv.order[i];
      const std::uint64_t nw = cur + p_.w[v];
      clique_.push_back(v);
      if (nw > best.weight.load(std::memory_order_relaxed) || !best.has) best.offer(nw, clique_);
      lv.next.assign_and(lv.p, p_.adj[v]);
      if (lv.next.any()) {
        maximize(nw, lv.next, depth + 1, best);
      }
      clique_.pop_back();
      lv.p.reset(v);
      if (ctl_.stopped()) return;
    }
  }

  template <typename Visit>
  void enumerate(std::uint64_t cur, const Bitset& cand, std::size_t depth, std::uint64_t target,
                 Visit& visit) {
    if (ctl_.stopped()) return;
    tick();
    Level& lv = level(depth);
    lv.p = cand;
    color_bound(p_.adj, p_.w, lv.p, lv);
    for (std::size_t i = lv.order.size(); i-- > 0;) {
      if (cur + lv.bound[i] < target) return;
      const std::size_t v = lv.order[i];
      const std::uint64_t nw = cur + p_.w[v];
      clique_.push_back(v);
      if (nw == target) {
        visit(clique_);
      } else if (nw < target) {
        lv.next.assign_and(lv.p, p_.adj[v]);
        if (lv.next.any()) enumerate(nw, lv.next, depth + 1, target, visit);
      }
      clique_.pop_back();
      lv.p.reset(v);
      if (ctl_.stopped()) return;
    }
  }

 private:
  const Problem& p_;
  Control& ctl_;
  std::vector<std::size_t> clique_;
  std::deque<Level> levels_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
};

CliqueResult finish(const Problem& p, Incumbent& best, std::uint64_t nodes) {
  CliqueResult out;
  out.weight = best.weight.load();
  for (auto v : best.clique) out.vertices.push_back(p.to_orig[v]);
  std::sort(out.vertices.begin(), out.vertices.end());
  out.nodes = nodes;
  return out;
}

CliqueResult solve_serial(const Graph& g, std::span<const std::uint64_t> weights, const Limits& limits) {
  check_input(g, weights, limits);
  const Problem p = renumber(g, weights);
  Control ctl(limits);
  Incumbent best;
  std::uint64_t nodes = 0;
  {
    Worker worker(p, ctl);
    if (p.n > 0) {
      Bitset all(p.n);
      all.set_all();
      worker.maximize(0, all, 0, best);
    }
    nodes = worker.nodes();
  }
  ctl.rethrow_if_stopped();
  return finish(p, best, nodes);
}

CliqueResult solve_parallel(const Graph& g, std::span<const std::uint64_t> weights, const Limits& limits) {
  check_input(g, weights, limits);
  const Problem p = renumber(g, weights);
  Control ctl(limits);
  Incumbent best;
  if (p.n == 0) return finish(p, best, 0);

  // Root coloring; branch i covers cliques whose root-order-maximal vertex
  // is order[i], i.e. N(order[i]) restricted to order[0..i-1].
  Level root;
  Bitset all(p.n);
  all.set_all();
  color_bound(p.adj, p.w, all, root);
  const auto m = static_cast<std::int64_t>(root.order.size());
  std::vector<std::size_t> position(p.n);
  for (std::size_t i = 0; i < root.order.size(); ++i) position[root.order[i]] = i;

  std::uint64_t nodes = 1;
#pragma omp parallel reduction(+ : nodes)
  {
    Worker worker(p, ctl);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < m; ++t) {
      const auto i = static_cast<std::size_t>(m - 1 - t);
      if (ctl.stopped()) continue;
      if (best.has && root.bound[i] <= best.weight.load()) continue;
      const std::size_t v = root.order[i];
      Bitset cand = p.adj[v];
      for (std::size_t u = cand.next(0); u != Bitset::npos; u = cand.next(u + 1)) {
        if (position[u] >= i) cand.reset(u);
      }
      auto& clique = worker.clique();
      clique.assign(1, v);
      if (!best.has || p.w[v] > best.weight.load()) best.offer(p.w[v], clique);
      if (cand.any()) worker.maximize(p.w[v], cand, 1, best);
      clique.clear();
    }
    nodes += worker.nodes();
  }
  ctl.rethrow_if_stopped();
  return finish(p, best, nodes);
}

std::vector<std::uint64_t> unit_weights(const Graph& g) { return std::vector<std::uint64_t>(g.order(), 1); }

bool lex_search(const Graph& g, std::span<const std::uint64_t> w, std::uint64_t cur, std::uint64_t target,
                Bitset cand, std::vector<std::size_t>& clique, std::deque<Level>& levels, std::size_t depth,
                Control& ctl, std::uint64_t& pending) {
  if (ctl.stopped()) return false;
  if (++pending == 4096) {
    ctl.charge(pending);
    pending = 0;
  }
  while (levels.size() <= depth) levels.emplace_back();
  Level& lv = levels[depth];
  for (std::size_t v = cand.next(0); v != Bitset::npos; v = cand.next(v + 1)) {
    // Bound over the remaining candidates (v and everything after it).
    lv.order.clear();
    lv.q = cand;
    std::uint64_t bound = 0;
    while (lv.q.any()) {
      lv.r = lv.q;
      std::uint64_t heaviest = 0;
      for (std::size_t u = lv.r.next(0); u != Bitset::npos; u = lv.r.next(u + 1)) {
        heaviest = std::max(heaviest, w[u]);
        lv.q.reset(u);
        lv.r.subtract(g.neighbors(u));
      }
      bound += heaviest;
    }
    if (cur + bound < target) return false;
    cand.reset(v);
    const std::uint64_t nw = cur + w[v];
    if (nw > target) continue;
    clique.push_back(v);
    if (nw == target) return true;
    Bitset sub(g.order());
    sub.assign_and(cand, g.neighbors(v));
    if (sub.any() && lex_search(g, w, nw, target, std::move(sub), clique, levels, depth + 1, ctl, pending)) {
      return true;
    }
    clique.pop_back();
  }
  return false;
}

}  // namespace

CliqueResult max_clique_serial(const Graph& g, const Limits& limits) {
  const auto w = unit_weights(g);
  return solve_serial(g, w, limits);
}

CliqueResult max_clique_parallel(const Graph& g, const Limits& limits) {
  const auto w = unit_weights(g);
  return solve_parallel(g, w, limits);
}

CliqueResult max_weight_clique_serial(const Graph& g, std::span<const std::uint64_t> weights,
                                      const Limits& limits) {
  return solve_serial(g, weights, limits);
}

CliqueResult max_weight_clique_parallel(const Graph& g, std::span<const std::uint64_t> weights,
                                        const Limits& limits) {
  return solve_parallel(g, weights, limits);
}

std::optional<std::vector<std::size_t>> first_clique_with_weight(const Graph& g,
                                                                 std::span<const std::uint64_t> weights,
                                                                 std::uint64_t target, const Limits& limits) {
  check_input(g, weights, limits);
  std::vector<std::size_t> clique;
  if (target == 0) return clique;
  Control ctl(limits);
  std::deque<Level> levels;
  std::uint64_t pending = 0;
  Bitset all(g.order());
  all.set_all();
  const bool found = g.order() > 0 && lex_search(g, weights, 0, target, all, clique, levels, 0, ctl, pending);
  ctl.rethrow_if_stopped();
  if (!found) return std::nullopt;
  return clique;
}

std::uint64_t for_each_optimal_clique(const Graph& g, std::span<const std::uint64_t> weights,
                                      std::uint64_t target, std::span<const std::size_t> roots,
                                      const std::function<void(std::span<const std::size_t>)>& visit,
                                      const Limits& limits) {
  check_input(g, weights, limits);
  for (auto w : weights) {
    if (w == 0) throw std::invalid_argument("for_each_optimal_clique: weights must be positive");
  }
  if (target == 0) throw std::invalid_argument("for_each_optimal_clique: target must be positive");
  const Problem p = renumber(g, weights);
  Control ctl(limits);
  std::vector<std::size_t> root_list(roots.begin(), roots.end());
  if (root_list.empty()) {
    root_list.resize(p.n);
    std::iota(root_list.begin(), root_list.end(), std::size_t{0});
  }
  std::mutex visit_mu;
  std::exception_ptr failure;
  std::uint64_t nodes = 0;
  const auto m = static_cast<std::int64_t>(root_list.size());

#pragma omp parallel reduction(+ : nodes)
  {
    Worker worker(p, ctl);
    std::vector<std::size_t> original;
    auto emit = [&](const std::vector<std::size_t>& internal) {
      original.clear();
      for (auto v : internal) original.push_back(p.to_orig[v]);
      std::sort(original.begin(), original.end());
      std::lock_guard lock(visit_mu);
      if (failure) return;
      try {
        visit(original);
      } catch (...) {
        failure = std::current_exception();
        ctl.abort("visitor failed");
      }
    };
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < m; ++t) {
      if (ctl.stopped()) continue;
      const std::size_t root_orig = root_list[static_cast<std::size_t>(t)];
      if (root_orig >= p.n) continue;
      const std::size_t v = p.to_internal[root_orig];
      // Later vertices only: the root is the clique's least original vertex.
      Bitset cand = p.adj[v];
      for (std::size_t u = cand.next(0); u != Bitset::npos; u = cand.next(u + 1)) {
        if (p.to_orig[u] <= root_orig) cand.reset(u);
      }
      auto& clique = worker.clique();
      clique.assign(1, v);
      if (p.w[v] == target) {
        emit(clique);
      } else if (p.w[v] < target && cand.any()) {
        worker.enumerate(p.w[v], cand, 1, target, emit);
      }
      clique.clear();
    }
    nodes += worker.nodes();
  }
  if (failure) std::rethrow_exception(failure);
  ctl.rethrow_if_stopped();
  return nodes;
}

}  // namespace sepekr
