// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Usage: acceptance <path-to-sepekr-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "sepekr/compression.hpp"
#include "sepekr/graph.hpp"
#include "sepekr/report.hpp"
#include "sepekr/search.hpp"
#include "sepekr/weighted.hpp"

using namespace sepekr;

namespace {

// Exact integer equality everywhere; the only tolerance is wall time.
constexpr double kCriterion1Seconds = 300.0;
constexpr int kLemmaFamilies = 200;

using Key = std::tuple<int, int, int>;
std::map<Key, std::uint64_t> g1_optima;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

Check criterion1() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& p : ekr_points()) {
    const SearchResult res = max_intersecting(p.n, p.r, p.k);
    g1_optima[{p.n, p.r, p.k}] = res.optimum;
    const Count want = count_star_formula(p.n, p.r, p.k);
    if (static_cast<Count>(res.optimum) != want || !is_intersecting(res.witness) ||
        res.witness.size() != res.optimum) {
      c.fail("(" + std::to_string(p.n) + "," + std::to_string(p.r) + "," + std::to_string(p.k) + ") optimum " +
             std::to_string(res.optimum) + " vs " + to_string(want));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= kCriterion1Seconds) c.fail("grid took " + std::to_string(secs) + " s");
  if (c.ok) c.detail << ekr_points().size() << " points, optimum = binomial(n-kr-1, r-1) everywhere";
  return c;
}

Check criterion2() {
  Check c;
  int points = 0;
  auto census = [&](int n, int r, int k, bool exceptional) {
    ++points;
    const SearchResult res = extremal_classes(n, r, k);
    const auto& classes = *res.classes;
    const std::string at = "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k) + ")";
    if (!exceptional && classes.size() != 1) c.fail(at + " has " + std::to_string(classes.size()) + " classes");
    if (exceptional) {
      if (classes.size() <= 1) c.fail(at + " has a single class");
      for (int i = 1; i <= r / 2; ++i) {
        const auto form = canonical_form(b_family(r, i).sets());
        bool found = false;
        for (const auto& f : classes) found = found || f.sets() == form;
        if (!found) c.fail(at + " lacks b_family(" + std::to_string(r) + "," + std::to_string(i) + ")");
      }
    }
  };
  for (int r = 2; r <= 4; ++r)
    for (int n = 2 * r; n <= 12; ++n) census(n, r, 1, n == 2 * r + 2);
  for (int r = 2; r <= 3; ++r)
    for (int n = 3 * r; n <= 14; ++n) census(n, r, 2, false);
  if (c.ok) c.detail << points << " points, unique except n = 2r+2 where every B_i appears";
  return c;
}

Check criterion3() {
  Check c;
  for (const auto& p : ekr_points()) {
    const auto all = enumerate_separated(p.n, p.r, p.k);
    Count star = 0;
    for (const auto& a : all) star += a.contains(1) ? 1 : 0;
    if (star != count_star_formula(p.n, p.r, p.k)) {
      c.fail("star size at (" + std::to_string(p.n) + "," + std::to_string(p.r) + "," + std::to_string(p.k) + ")");
    }
    const bool tight = p.n == (p.k + 1) * p.r;
    if ((all.size() == static_cast<std::size_t>(p.k + 1)) != tight) {
      c.fail("universe size " + std::to_string(all.size()) + " at (" + std::to_string(p.n) + "," +
             std::to_string(p.r) + "," + std::to_string(p.k) + ")");
    }
  }
  if (c.ok) c.detail << "star sizes match; |universe| = k+1 exactly at n = (k+1)r";
  return c;
}

Check criterion4() {
  Check c;
  int families = 0;
  for (int k = 1; k <= 2; ++k)
    for (int r = 2; r <= 3; ++r)
      for (int n = (k + 1) * r + 1; n <= 12; ++n) {
        const auto universe = enumerate_separated(n, r, k);
        for (int i = 0; i < kLemmaFamilies; ++i) {
          ++families;
          const SetFamily f(n, r, k, random_maximal_intersecting(universe, family_seed({n, r, k}, i)));
          const LemmaReport rep = verify_lemma_suite(f);
          for (const auto& cl : rep.clauses)
            if (!cl.passed) {
              c.fail("(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k) + ") family " +
                     std::to_string(i) + " fails " + cl.id);
            }
        }
      }
  if (c.ok) c.detail << families << " families, every clause passed";
  return c;
}

Check criterion5() {
  Check c;
  const std::array<Key, 9> points{{{8, 2, 1}, {9, 2, 1}, {10, 2, 1}, {11, 2, 1}, {12, 2, 1},
                                   {12, 3, 1}, {13, 3, 1}, {12, 2, 2}, {13, 2, 2}}};
  for (const auto& [n, r, k] : points) {
    const std::string at = "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k) + ")";
    const WeightedReport rep = verify_weighted_ekr(n, r, k);
    if (!rep.pass || static_cast<Count>(rep.optimum) != binomial(n - 1, (k + 1) * r - 1)) {
      c.fail(at + " optimum " + std::to_string(rep.optimum));
    }
    for (const auto& a : enumerate_separated(n, r, k))
      if (static_cast<Count>(gamma(a, k).size()) != weight(a, k)) c.fail(at + " |gamma" + a.str() + "| != w");
  }
  if (c.ok) c.detail << points.size() << " points, optimum = binomial(n-1, (k+1)r-1) and |gamma(A)| = w(A)";
  return c;
}

Check criterion6() {
  Check c;
  const auto petersen = build_kneser(5, 2);
  if (independence_number(petersen) != 4) c.fail("alpha(K(5,2)) != 4");
  if (chromatic_number(petersen) != 3) c.fail("chi(K(5,2)) != 3");
  for (int n : {5, 7, 9})
    if (chromatic_number(build_schrijver(n, 2, 1)) != n - 2) c.fail("chi(SG(" + std::to_string(n) + ",2)) != n-2");
  int shared = 0;
  for (const auto& [key, optimum] : g1_optima) {
    const auto& [n, r, k] = key;
    if (k != 1) continue;
    ++shared;
    if (independence_number(build_schrijver(n, r, k)) != optimum) {
      c.fail("alpha(SG(" + std::to_string(n) + "," + std::to_string(r) + ")) differs from search");
    }
  }
  if (shared == 0) c.fail("no criterion 1 results to compare");
  if (c.ok) c.detail << "Petersen alpha 4, chi 3; chi(SG(n,2)) = n-2 for n = 5,7,9; " << shared << " alpha matches";
  return c;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Check criterion7(const std::string& cli) {
  Check c;
  const std::string base = "'" + cli + "' report --grid default --format csv";
  int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  const std::string a = capture(base, s1);
  const std::string b = capture(base, s2);
  const std::string one = capture("SEPEKR_THREADS=1 " + base, s3);
  const std::string eight = capture("SEPEKR_THREADS=8 " + base, s4);
  if (s1 != 0 || s2 != 0 || s3 != 0 || s4 != 0) c.fail("report exited nonzero");
  if (a.empty()) c.fail("empty report");
  if (a != b) c.fail("consecutive runs differ");
  if (one != eight) c.fail("SEPEKR_THREADS=1 and 8 differ");
  if (c.ok) c.detail << "4 runs, " << a.size() << " bytes each, byte-identical";
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-sepekr-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::array<std::pair<const char*, std::function<Check()>>, 7> criteria{{
      {"EKR bound on grid G1", criterion1},
      {"uniqueness and the n = 2r+2 exception", criterion2},
      {"counting formulas", criterion3},
      {"compression lemma suite", criterion4},
      {"weighted bound", criterion5},
      {"graph facts", criterion6},
      {"determinism", [&] { return criterion7(cli); }},
  }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << c.detail.str() << std::endl;
    failed += c.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
