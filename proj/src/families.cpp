#include "sepekr/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sepekr {

namespace {

std::uint64_t rotate_mask(std::uint64_t m, int s, int n) {
  if (s == 0) return m;
  return ((m << s) | (m >> (n - s))) & ground_mask(n);
}

std::uint64_t reflect_mask(std::uint64_t m, int n) {
  // a -> n + 2 - a  (mod n): 1 stays, 2..n reverse.
  std::uint64_t out = m & 1U;
  for (std::uint64_t rest = m & ~std::uint64_t{1}; rest != 0; rest &= rest - 1) {
    const int e = std::countr_zero(rest) + 1;
    out |= std::uint64_t{1} << (n + 2 - e - 1);
  }
  return out;
}

bool masks_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](std::uint64_t x, std::uint64_t y) { return lex_compare(x, y) < 0; });
}

void sort_masks(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end(), [](std::uint64_t x, std::uint64_t y) { return lex_compare(x, y) < 0; });
}

}  // namespace

void normalize(std::vector<CircSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

SetFamily::SetFamily(int n, int r, int k, std::vector<CircSet> sets)
    : n_(n), r_(r), k_(k), sets_(std::move(sets)) {
  require_params(n, r, k);
  for (const auto& a : sets_) {
    if (a.n() != n || a.size() != r) {
      throw std::invalid_argument("SetFamily: member " + a.str() + " is not an r-subset of [n]");
    }
    if (!is_k_separated(a, k)) {
      throw std::invalid_argument("SetFamily: member " + a.str() + " is not k-separated");
    }
  }
  normalize(sets_);
}

bool SetFamily::contains(const CircSet& a) const {
  return std::binary_search(sets_.begin(), sets_.end(), a);
}

bool is_intersecting(std::span<const CircSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i].mask() & sets[j].mask()) == 0) return false;
    }
  }
  return true;
}

bool is_intersecting(const SetFamily& family) { return is_intersecting(family.sets()); }

SetFamily star_family(int n, int r, int k, int i) {
  require_feasible(n, r, k);
  if (i < 1 || i > n) throw std::invalid_argument("star_family: element must be in 1..n");
  std::vector<CircSet> members;
  for (const auto& a : enumerate_separated(n, r, k)) {
    if (a.contains(i)) members.push_back(a);
  }
  return SetFamily(n, r, k, std::move(members));
}

SetFamily b_family(int r, int i) {
  if (r < 2 || i < 1 || i > r / 2) {
    throw std::invalid_argument("b_family: need 1 <= i <= floor(r/2), got r=" + std::to_string(r) +
                                " i=" + std::to_string(i));
  }
  const int n = 2 * r + 2;
  std::uint64_t odd = 0;
  for (int e = 1; e <= 4 * i + 1; e += 2) odd |= std::uint64_t{1} << (e - 1);
  std::vector<CircSet> members;
  for (const auto& a : enumerate_separated(n, r, 1)) {
    if (std::popcount(a.mask() & odd) >= i + 1) members.push_back(a);
  }
  return SetFamily(n, r, 1, std::move(members));
}

std::vector<CircleMap> symmetry_group(int n, bool rotations_only) {
  std::vector<CircleMap> out;
  for (int s = 0; s < n; ++s) out.push_back({s, false});
  if (!rotations_only) {
    for (int s = 0; s < n; ++s) out.push_back({s, true});
  }
  return out;
}

std::uint64_t apply_mask(const CircleMap& g, std::uint64_t mask, int n) {
  if (g.reflected) mask = reflect_mask(mask, n);
  return rotate_mask(mask, ((g.shift % n) + n) % n, n);
}

CircSet apply(const CircleMap& g, const CircSet& a) {
  return CircSet::from_mask(a.n(), apply_mask(g, a.mask(), a.n()));
}

std::vector<CircSet> canonical_form(std::span<const CircSet> sets, bool rotations_only) {
  if (sets.empty()) return {};
  const int n = sets.front().n();
  for (const auto& a : sets) {
    if (a.n() != n) throw std::invalid_argument("canonical_form: mixed ambient sizes");
  }
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> image(sets.size());
  for (const auto& g : symmetry_group(n, rotations_only)) {
    for (std::size_t i = 0; i < sets.size(); ++i) image[i] = apply_mask(g, sets[i].mask(), n);
    sort_masks(image);
    if (best.empty() || masks_less(image, best)) best = image;
  }
  std::vector<CircSet> out;
  out.reserve(best.size());
  for (auto m : best) out.push_back(CircSet::from_mask(n, m));
  return out;
}

bool are_isomorphic(const SetFamily& f, const SetFamily& g, bool rotations_only) {
  if (f.n() != g.n() || f.r() != g.r() || f.k() != g.k()) {
    throw std::invalid_argument("are_isomorphic: families have different (n, r, k)");
  }
  if (f.size() != g.size()) return false;
  if (f.empty()) return true;
  std::vector<std::uint64_t> target;
  for (const auto& a : g) target.push_back(a.mask());
  std::vector<std::uint64_t> image(f.size());
  for (const auto& map : symmetry_group(f.n(), rotations_only)) {
    for (std::size_t i = 0; i < f.size(); ++i) image[i] = apply_mask(map, f.sets()[i].mask(), f.n());
    sort_masks(image);
    if (image == target) return true;
  }
  return false;
}

CircSet g_map(const CircSet& a, int k) {
  if (k < 1) throw std::invalid_argument("g_map: k must be >= 1");
  if (!a.contains(1)) throw std::invalid_argument("g_map: " + a.str() + " does not contain 1");
  if (a.contains(k + 2)) {
    throw std::invalid_argument("g_map: " + a.str() + " contains k+2");
  }
  if (!is_k_separated(a, k)) throw std::invalid_argument("g_map: " + a.str() + " is not k-separated");
  std::uint64_t out = std::uint64_t{1} << (k + 1);
  const std::uint64_t tail = a.mask() & ~std::uint64_t{1};
  // Tail elements a_i <= n - k (wrap gap back to 1 exceeds k), so a_i + k <= n.
  out |= tail << k;
  return CircSet::from_mask(a.n(), out);
}

std::string to_text(const SetFamily& family) {
  std::string s = std::to_string(family.n()) + " " + std::to_string(family.r()) + " " +
                  std::to_string(family.k()) + " :";
  for (const auto& a : family) {
    s += ' ';
    s += a.str();
  }
  return s;
}

std::vector<CircSet> random_maximal_intersecting(std::span<const CircSet> universe, std::uint64_t seed) {
  std::vector<std::size_t> order(universe.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<CircSet> out;
  for (auto i : order) {
    const CircSet& a = universe[i];
    const bool meets_all =
        std::all_of(out.begin(), out.end(), [&](const CircSet& b) { return (a.mask() & b.mask()) != 0; });
    if (meets_all) out.push_back(a);
  }
  normalize(out);
  return out;
}

}  // namespace sepekr
