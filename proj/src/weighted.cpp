#include "sepekr/weighted.hpp"

#include <stdexcept>

#include "sepekr/families.hpp"

namespace sepekr {

namespace {

void require_separated(const CircSet& a, int k) {
  if (k < 0) throw std::invalid_argument("weight: k must be >= 0");
  if (!is_k_separated(a, k)) throw std::invalid_argument(a.str() + " is not " + std::to_string(k) + "-separated");
}

// Choose k of the interior points of each gap in turn.
void extend(const std::vector<std::vector<int>>& interiors, std::size_t gap, int k, std::size_t from, int left,
            std::uint64_t mask, std::vector<CircSet>& out, int n) {
  if (left == 0) {
    if (gap + 1 == interiors.size()) {
      out.push_back(CircSet::from_mask(n, mask));
    } else {
      extend(interiors, gap + 1, k, 0, k, mask, out, n);
    }
    return;
  }
  const auto& pts = interiors[gap];
  for (std::size_t i = from; i + static_cast<std::size_t>(left) <= pts.size(); ++i) {
    extend(interiors, gap, k, i + 1, left - 1, mask | (std::uint64_t{1} << (pts[i] - 1)), out, n);
  }
}

}  // namespace

Count weight(const CircSet& a, int k) {
  require_separated(a, k);
  Count w = 1;
  for (int g : gap_vector(a).gaps) w = checked_mul(w, binomial(g - 1, k));
  return w;
}

std::vector<CircSet> gamma(const CircSet& a, int k) {
  require_separated(a, k);
  const int n = a.n();
  const auto e = a.elems();
  std::vector<std::vector<int>> interiors;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int from = e[i];
    const int to = i + 1 < e.size() ? e[i + 1] : e.front() + n;
    std::vector<int> pts;
    for (int p = from + 1; p < to; ++p) pts.push_back(p > n ? p - n : p);
    interiors.push_back(std::move(pts));
  }
  std::vector<CircSet> out;
  extend(interiors, 0, k, 0, k, a.mask(), out, n);
  normalize(out);
  return out;
}

Count family_weight(const SetFamily& family) {
  Count total = 0;
  for (const auto& a : family) total = checked_add(total, weight(a, family.k()));
  return total;
}

WeightedReport verify_weighted_ekr(int n, int r, int k, const SearchOptions& options) {
  require_feasible(n, r, k);
  if (n < 2 * (k + 1) * r) {
    throw std::invalid_argument("verify_weighted_ekr: needs n >= 2(k+1)r");
  }
  const SearchResult result =
      max_intersecting_weighted(n, r, k, [k](const CircSet& a) { return to_u64(weight(a, k)); }, options);
  WeightedReport report{n, r, k, result.optimum, family_weight(star_family(n, r, k, 1)),
                        binomial(n - 1, (k + 1) * r - 1), false, result.witness, result.nodes};
  report.pass = static_cast<Count>(report.optimum) == report.star_weight && report.star_weight == report.binomial_bound;
  return report;
}

}  // namespace sepekr
