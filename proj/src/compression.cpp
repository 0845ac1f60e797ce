#include "sepekr/compression.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace sepekr {

namespace {

bool in_universe(const CircSet& a, int n, int r, int k) {
  return a.n() == n && a.size() == r && is_k_separated(a, k);
}

std::vector<CircSet> set_union(const std::vector<CircSet>& a, const std::vector<CircSet>& b) {
  std::vector<CircSet> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<CircSet> set_intersection(const std::vector<CircSet>& a, const std::vector<CircSet>& b) {
  std::vector<CircSet> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// G - {1}; members lacking 1 are reported and dropped.
std::vector<CircSet> remove_one(const std::vector<CircSet>& sets, const std::string& label,
                                std::vector<Witness>& violations) {
  std::vector<CircSet> out;
  for (const auto& g : sets) {
    if (!g.contains(1)) {
      violations.push_back({label + ": member lacks element 1", {g}});
      continue;
    }
    if (g.size() == 1) {
      violations.push_back({label + ": removing 1 leaves the empty set", {g}});
      continue;
    }
    out.push_back(CircSet::from_mask(g.n(), g.mask() & ~std::uint64_t{1}));
  }
  normalize(out);
  return out;
}

ClauseResult clause(std::string id) { return ClauseResult{std::move(id), true, {}}; }

void fail(ClauseResult& c, std::string note, std::vector<CircSet> sets) {
  c.passed = false;
  // A handful of witnesses is enough to debug; keep reports small.
  if (c.witnesses.size() < 8) c.witnesses.push_back({std::move(note), std::move(sets)});
}

std::vector<CircSet> first_disjoint_pair(std::span<const CircSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if ((sets[i].mask() & sets[j].mask()) == 0) return {sets[i], sets[j]};
    }
  }
  return {};
}

void check_intersecting(ClauseResult& c, std::span<const CircSet> sets, const std::string& what) {
  auto pair = first_disjoint_pair(sets);
  if (!pair.empty()) fail(c, what + " has disjoint members", std::move(pair));
}

void check_universe(ClauseResult& c, std::span<const CircSet> sets, int n, int r, int k,
                    const std::string& what) {
  for (const auto& a : sets) {
    if (!in_universe(a, n, r, k)) {
      fail(c, what + " member outside [" + std::to_string(n) + "]^(" + std::to_string(r) + ")_" +
                  std::to_string(k),
           {a});
    }
  }
}

}  // namespace

CircSet f_map(const CircSet& a) {
  if (a.n() < 2) throw std::invalid_argument("f_map: needs n >= 2");
  const std::uint64_t m = a.mask();
  return CircSet::from_mask(a.n() - 1, (m & 1U) | (m >> 1));
}

CircSet f_iter(const CircSet& a, int j) {
  if (j < 0) throw std::invalid_argument("f_iter: j must be >= 0");
  if (a.n() - j < a.size()) {
    throw std::invalid_argument("f_iter: n - j must be >= |A|");
  }
  CircSet out = a;
  for (int i = 0; i < j; ++i) out = f_map(out);
  return out;
}

std::vector<CircSet> f_image(std::span<const CircSet> sets, int j) {
  std::vector<CircSet> out;
  out.reserve(sets.size());
  for (const auto& a : sets) out.push_back(f_iter(a, j));
  normalize(out);
  return out;
}

PartitionResult partition_family(const SetFamily& family) {
  const int n = family.n();
  const int r = family.r();
  const int k = family.k();
  if (k < 1) throw std::invalid_argument("partition_family: k must be >= 1");
  if (n < (k + 1) * r + 1) {
    throw std::invalid_argument("partition_family: needs n >= (k+1)r + 1 (n = (k+1)r has no compression step)");
  }

  PartitionResult p;
  p.n = n;
  p.r = r;
  p.k = k;
  p.d.resize(static_cast<std::size_t>(k) + 1);
  for (const auto& a : family) {
    int hits = 0;
    const CircSet image = f_map(a);
    if (in_universe(image, n - 1, r, k)) {
      (a.contains(1) ? p.c : p.b).push_back(a);
      ++hits;
    }
    if (a.contains(1) && a.contains(k + 2)) {
      if (hits == 0) p.d[0].push_back(a);
      ++hits;
    }
    for (int i = 1; i <= k; ++i) {
      if (a.contains(n + 1 - i) && a.contains(k + 2 - i)) {
        if (hits == 0) p.d[static_cast<std::size_t>(i)].push_back(a);
        ++hits;
      }
    }
    if (hits == 0) p.unclassified.push_back(a);
    if (hits > 1) p.overlapping.push_back(a);
  }
  p.exhaustive = p.unclassified.empty() && p.overlapping.empty();
  return p;
}

DerivedFamilies derive_families(const PartitionResult& p) {
  if (p.r < 2) throw std::invalid_argument("derive_families: needs r >= 2");
  if (p.k < 1 || p.d.size() != static_cast<std::size_t>(p.k) + 1) {
    throw std::invalid_argument("derive_families: malformed partition");
  }
  DerivedFamilies out;
  out.n = p.n;
  out.r = p.r;
  out.k = p.k;
  out.e = set_intersection(f_image(p.b), f_image(p.c));
  out.from_e = remove_one(f_image(out.e, p.k - 1), "f^{k-1}(E)", out.violations);
  for (int i = 0; i <= p.k; ++i) {
    out.from_d.push_back(remove_one(f_image(p.d[static_cast<std::size_t>(i)], p.k),
                                    "f^k(D_" + std::to_string(i) + ")", out.violations));
  }

  // Components must be pairwise disjoint.
  std::vector<const std::vector<CircSet>*> parts{&out.from_e};
  for (const auto& d : out.from_d) parts.push_back(&d);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (const auto& a : set_intersection(*parts[i], *parts[j])) {
        out.violations.push_back({"derived components overlap", {a}});
      }
    }
    out.f = set_union(out.f, *parts[i]);
  }
  for (const auto& a : out.f) {
    if (a.n() != p.n - p.k || !is_k_separated(a, p.k) || a.size() != p.r - 1) {
      out.violations.push_back({"derived set outside [n-k]^(r-1)_k", {a}});
    }
  }
  out.ff = f_image(out.f);
  return out;
}

bool LemmaReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

const ClauseResult* LemmaReport::find(std::string_view id) const {
  for (const auto& c : clauses) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

LemmaReport verify_lemma_suite(const SetFamily& family) {
  const int n = family.n();
  const int r = family.r();
  const int k = family.k();
  const auto& members = family.sets();

  LemmaReport report;
  report.n = n;
  report.r = r;
  report.k = k;
  report.family_size = family.size();

  {
    auto c = clause("pre.intersecting");
    check_intersecting(c, members, "input family");
    report.clauses.push_back(std::move(c));
  }

  const PartitionResult part = partition_family(family);
  {
    auto c = clause("partition.exhaustive");
    for (const auto& a : part.unclassified) fail(c, "member in no class", {a});
    for (const auto& a : part.overlapping) fail(c, "member in several classes", {a});
    report.clauses.push_back(std::move(c));
  }
  if (k == 1) {
    // The k = 1 partition also has explicit membership rules; both routes
    // must classify every member identically.
    auto c = clause("partition.k1_explicit_rules");
    auto check = [&](const std::vector<CircSet>& cls, auto rule, const char* name) {
      for (const auto& a : cls) {
        if (!rule(a)) fail(c, std::string("member of ") + name + " breaks its explicit rule", {a});
      }
    };
    check(part.b, [&](const CircSet& a) { return !a.contains(1) && (!a.contains(2) || !a.contains(n)); }, "B");
    check(part.c, [&](const CircSet& a) { return a.contains(1) && !a.contains(3); }, "C");
    check(part.d[0], [&](const CircSet& a) { return a.contains(1) && a.contains(3); }, "D_0");
    check(part.d[1], [&](const CircSet& a) { return a.contains(2) && a.contains(n); }, "D_1");
    report.clauses.push_back(std::move(c));
  }

  {
    // Collisions of f^j on members: A != B, f^j(A) = f^j(B) => A xor B = {c, d} within [j+1].
    auto c = clause("collision.symmetric_difference");
    for (int j = 1; j <= k; ++j) {
      std::map<std::uint64_t, std::vector<CircSet>> by_image;
      for (const auto& a : members) by_image[f_iter(a, j).mask()].push_back(a);
      const std::uint64_t head = ground_mask(j + 1);
      for (const auto& [img, group] : by_image) {
        for (std::size_t x = 0; x < group.size(); ++x) {
          for (std::size_t y = x + 1; y < group.size(); ++y) {
            const std::uint64_t delta = group[x].mask() ^ group[y].mask();
            if (std::popcount(delta) != 2 || (delta & ~head) != 0) {
              fail(c, "f^" + std::to_string(j) + " collision with bad symmetric difference",
                   {group[x], group[y]});
            }
          }
        }
      }
    }
    report.clauses.push_back(std::move(c));
  }

  const auto fb = f_image(part.b);
  const auto fc = f_image(part.c);
  const auto fbc = set_union(fb, fc);
  {
    auto c = clause("compress.injective_on_b_and_c");
    if (fb.size() != part.b.size()) fail(c, "|f(B)| != |B|", part.b);
    if (fc.size() != part.c.size()) fail(c, "|f(C)| != |C|", part.c);
    report.clauses.push_back(std::move(c));
  }
  {
    auto c = clause("compress.separated");
    check_universe(c, fbc, n - 1, r, k, "f(B u C)");
    report.clauses.push_back(std::move(c));
  }
  {
    auto c = clause("compress.intersecting");
    check_intersecting(c, fbc, "f(B u C)");
    check_intersecting(c, f_image(members), "f(input)");
    report.clauses.push_back(std::move(c));
  }

  if (r < 2) return report;
  const DerivedFamilies derived = derive_families(part);
  {
    auto c = clause("derived.assembly");
    for (const auto& w : derived.violations) fail(c, w.note, w.sets);
    report.clauses.push_back(std::move(c));
  }
  {
    auto c = clause("derived.sizes_preserved");
    if (derived.from_e.size() != derived.e.size()) fail(c, "|f^{k-1}(E)| != |E|", derived.e);
    for (int i = 0; i <= k; ++i) {
      const auto& di = part.d[static_cast<std::size_t>(i)];
      if (derived.from_d[static_cast<std::size_t>(i)].size() != di.size()) {
        fail(c, "|f^k(D_" + std::to_string(i) + ")| != |D_" + std::to_string(i) + "|", di);
      }
    }
    std::size_t parts = derived.from_e.size();
    for (const auto& d : derived.from_d) parts += d.size();
    if (derived.f.size() != parts) fail(c, "components are not disjoint", {});
    report.clauses.push_back(std::move(c));
  }
  {
    auto c = clause("derived.subset");
    check_universe(c, derived.f, n - k, r - 1, k, "F");
    report.clauses.push_back(std::move(c));
  }
  {
    auto c = clause("derived.intersecting");
    check_intersecting(c, derived.f, "F");
    report.clauses.push_back(std::move(c));
  }
  {
    auto c = clause("derived.compressed_subset");
    check_universe(c, derived.ff, n - k - 1, r - 1, k, "f(F)");
    if (derived.ff.size() != derived.f.size()) fail(c, "|f(F)| != |F|", derived.f);
    check_intersecting(c, derived.ff, "f(F)");
    report.clauses.push_back(std::move(c));
  }
  {
    auto c = clause("count.identity");
    if (members.size() != fbc.size() + derived.f.size()) {
      fail(c,
           "|A| = " + std::to_string(members.size()) + " but |f(B) u f(C)| + |F| = " +
               std::to_string(fbc.size()) + " + " + std::to_string(derived.f.size()),
           {});
    }
    report.clauses.push_back(std::move(c));
  }
  return report;
}

}  // namespace sepekr
