#include "sepekr/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace sepekr {

namespace {

// Representative of a modulo n in 1..n.
int wrap(long long a, int n) {
  long long m = ((a - 1) % n + n) % n;
  return static_cast<int>(m) + 1;
}

void enumerate_rec(int n, int r, int k, int first, int last, std::uint64_t mask, int placed,
                   std::vector<CircSet>& out) {
  if (placed == r) {
    out.push_back(CircSet::from_mask(n, mask));
    return;
  }
  // The remaining r - placed elements each need k+1 room, and the last one
  // must leave a wrap gap of at least k+1 back to `first`.
  const int limit = std::min(n, first + n - (k + 1) - (r - placed - 1) * (k + 1));
  for (int a = last + k + 1; a <= limit; ++a) {
    enumerate_rec(n, r, k, first, a, mask | (std::uint64_t{1} << (a - 1)), placed + 1, out);
  }
}

}  // namespace

std::uint64_t ground_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_params(int n, int r, int k) {
  if (n < 1 || n > kMaxGround) {
    throw std::invalid_argument("n must be in 1.." + std::to_string(kMaxGround) + ", got " +
                                std::to_string(n));
  }
  if (r < 1) throw std::invalid_argument("r must be >= 1, got " + std::to_string(r));
  if (k < 0) throw std::invalid_argument("k must be >= 0, got " + std::to_string(k));
}

void require_feasible(int n, int r, int k) {
  require_params(n, r, k);
  if (static_cast<long long>(k + 1) * r > n) {
    throw std::invalid_argument("need n >= (k+1)r, got n=" + std::to_string(n) +
                                " r=" + std::to_string(r) + " k=" + std::to_string(k));
  }
}

CircSet::CircSet(int n, std::span<const int> elems) : n_(n), mask_(0) {
  if (n < 1 || n > kMaxGround) {
    throw std::invalid_argument("CircSet: n must be in 1..64, got " + std::to_string(n));
  }
  if (elems.empty()) throw std::invalid_argument("CircSet: empty set");
  int prev = 0;
  for (int e : elems) {
    if (e <= prev || e > n) {
      throw std::invalid_argument("CircSet: elements must be strictly increasing in 1..n");
    }
    mask_ |= std::uint64_t{1} << (e - 1);
    prev = e;
  }
}

CircSet CircSet::from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > kMaxGround) {
    throw std::invalid_argument("CircSet: n must be in 1..64, got " + std::to_string(n));
  }
  if (mask == 0) throw std::invalid_argument("CircSet: empty set");
  if ((mask & ~ground_mask(n)) != 0) {
    throw std::invalid_argument("CircSet: element outside 1..n");
  }
  return CircSet(n, mask, true);
}

int CircSet::size() const { return std::popcount(mask_); }

bool CircSet::contains(int e) const {
  return e >= 1 && e <= n_ && ((mask_ >> (e - 1)) & 1U) != 0;
}

std::vector<int> CircSet::elems() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

int CircSet::min_elem() const { return std::countr_zero(mask_) + 1; }
int CircSet::max_elem() const { return 64 - std::countl_zero(mask_); }

std::string CircSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int e : elems()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  s += '}';
  return s;
}

std::strong_ordering lex_compare(std::uint64_t a, std::uint64_t b) {
  if (a == b) return std::strong_ordering::equal;
  const std::uint64_t diff = a ^ b;
  const int p = std::countr_zero(diff);
  // Lists agree below p; the list holding p is smaller unless the other one
  // ends before p (in which case it is a proper prefix).
  const std::uint64_t above = p == 63 ? 0 : ~((std::uint64_t{2} << p) - 1);
  const bool a_has = ((a >> p) & 1U) != 0;
  const std::uint64_t other = a_has ? b : a;
  const bool other_continues = (other & above) != 0;
  if (a_has) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
  return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering CircSet::operator<=>(const CircSet& other) const {
  if (auto c = lex_compare(mask_, other.mask_); c != 0) return c;
  return n_ <=> other.n_;
}

int GapVector::sum() const { return std::accumulate(gaps.begin(), gaps.end(), 0); }

int GapVector::min() const {
  int m = gaps.empty() ? 0 : gaps.front();
  for (int g : gaps) m = std::min(m, g);
  return m;
}

GapVector gap_vector(const CircSet& a) {
  const auto e = a.elems();
  GapVector out;
  out.gaps.reserve(e.size());
  for (std::size_t i = 0; i + 1 < e.size(); ++i) out.gaps.push_back(e[i + 1] - e[i]);
  out.gaps.push_back(e.front() + a.n() - e.back());
  return out;
}

bool is_k_separated(const CircSet& a, int k) {
  if (k <= 0) return true;
  // Every element must be followed (circularly) by k empty positions.
  const int n = a.n();
  std::uint64_t m = a.mask();
  for (int s = 1; s <= k; ++s) {
    if (s >= n) return false;
    const std::uint64_t rotated = ((m << s) | (m >> (n - s))) & ground_mask(n);
    if ((rotated & m) != 0) return false;
  }
  return true;
}

CircSet from_gaps(int start, const GapVector& gv, int n) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("from_gaps: n out of range");
  if (start < 1 || start > n) throw std::invalid_argument("from_gaps: start must be in 1..n");
  if (gv.gaps.empty()) throw std::invalid_argument("from_gaps: empty gap vector");
  for (int g : gv.gaps) {
    if (g < 1) throw std::invalid_argument("from_gaps: gaps must be >= 1");
  }
  if (gv.sum() != n) {
    throw std::invalid_argument("from_gaps: gaps sum to " + std::to_string(gv.sum()) +
                                ", expected n = " + std::to_string(n));
  }
  std::uint64_t mask = 0;
  long long pos = start;
  for (std::size_t i = 0; i < gv.gaps.size(); ++i) {
    mask |= std::uint64_t{1} << (wrap(pos, n) - 1);
    pos += gv.gaps[i];
  }
  return CircSet::from_mask(n, mask);
}

std::vector<CircSet> enumerate_separated(int n, int r, int k) {
  require_params(n, r, k);
  std::vector<CircSet> out;
  if (static_cast<long long>(k + 1) * r > n) return out;
  for (int first = 1; first <= n; ++first) {
    enumerate_rec(n, r, k, first, first, std::uint64_t{1} << (first - 1), 1, out);
  }
  return out;
}

CircSet rotate(const CircSet& a, int s) {
  const int n = a.n();
  const int shift = ((s % n) + n) % n;
  if (shift == 0) return a;
  const std::uint64_t m = a.mask();
  const std::uint64_t rotated = ((m << shift) | (m >> (n - shift))) & ground_mask(n);
  return CircSet::from_mask(n, rotated);
}

CircSet reflect(const CircSet& a) {
  const int n = a.n();
  std::uint64_t out = 0;
  for (int e : a.elems()) out |= std::uint64_t{1} << (wrap(static_cast<long long>(n) + 2 - e, n) - 1);
  return CircSet::from_mask(n, out);
}

Count count_star_formula(int n, int r, int k) {
  require_feasible(n, r, k);
  return binomial(static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) * r - 1, r - 1);
}

Count count_separated(int n, int r, int k) {
  require_params(n, r, k);
  if (static_cast<long long>(k + 1) * r > n) return 0;
  const std::int64_t free = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) * r;
  return checked_mul(static_cast<Count>(n), binomial(free, r)) / static_cast<Count>(free);
}

}  // namespace sepekr
