#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sepekr/search.hpp"
#include "sepekr/weighted.hpp"

using namespace sepekr;

namespace {

oracle::Family plain(const std::vector<CircSet>& sets) {
  oracle::Family f;
  for (const auto& a : sets) f.push_back(a.elems());
  return f;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("max_intersecting examples") {
    CHECK(max_intersecting(4, 2, 1).optimum == 1);
    CHECK(max_intersecting(5, 2, 1).optimum == 2);
    CHECK(max_intersecting(9, 3, 2).optimum == 1);
    CHECK(max_intersecting(7, 2, 1).witness == star_family(7, 2, 1, 1));
    CHECK_THROWS_AS(max_intersecting(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_intersecting(5, 0, 1), std::invalid_argument);
  }

  TEST_CASE("weighted search examples") {
    const auto ones = [](const CircSet&) -> std::uint64_t { return 1; };
    CHECK(max_intersecting_weighted(5, 2, 1, ones).optimum == 2);
    const auto w = [](const CircSet& a) { return to_u64(weight(a, 1)); };
    CHECK(max_intersecting_weighted(8, 2, 1, w).optimum == 35);
    const auto zero = [](const CircSet&) -> std::uint64_t { return 0; };
    CHECK(max_intersecting_weighted(8, 2, 1, zero).optimum == 0);
    CHECK(max_intersecting_weighted(8, 2, 1, zero).witness.empty());
    CHECK_THROWS_AS(max_intersecting_weighted(8, 2, 1, WeightFn{}), std::invalid_argument);
  }

  TEST_CASE("resource limits abort distinctly") {
    SearchOptions tight;
    tight.limits.max_vertices = 10;
    CHECK_THROWS_AS(max_intersecting(12, 2, 1, tight), ResourceLimitError);
    // Default class limit: [30]^(3)_1 has 2030 sets.
    CHECK_THROWS_AS(extremal_classes(30, 3, 1), ResourceLimitError);
  }

  TEST_CASE("optimum and witness match the naive oracle on small universes") {
    for (int k = 0; k <= 3; ++k)
      for (int r = 1; r <= 4; ++r)
        for (int n = (k + 1) * r; n <= 16; ++n) {
          const auto universe = enumerate_separated(n, r, k);
          if (universe.size() > 25) continue;
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(k);
          const SearchResult res = max_intersecting(n, r, k);
          CHECK(res.optimum == oracle::max_size(plain(universe)));
          CHECK(res.witness.size() == res.optimum);
          CHECK(is_intersecting(res.witness));
        }
  }

  TEST_CASE("witness is the lexicographically least optimal family") {
    for (int n = 6; n <= 10; ++n) {
      const auto universe = enumerate_separated(n, 2, 1);
      const auto u = plain(universe);
      const auto best = oracle::max_size(u);
      oracle::Family least;
      bool found = false;
      oracle::intersecting_subfamilies(u, std::vector<std::uint64_t>(u.size(), 1),
                                       [&](const std::vector<std::size_t>& idx, std::uint64_t x) {
                                         if (x != best) return;
                                         oracle::Family f;
                                         for (auto i : idx) f.push_back(u[i]);
                                         if (!found || f < least) least = f;
                                         found = true;
                                       });
      CHECK(plain(max_intersecting(n, 2, 1).witness.sets()) == least);
    }
  }

  TEST_CASE("class census matches the naive oracle") {
    for (int k = 1; k <= 2; ++k)
      for (int r = 2; r <= 4; ++r)
        for (int n = (k + 1) * r; n <= 14; ++n) {
          const auto universe = enumerate_separated(n, r, k);
          if (universe.size() > 22) continue;
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(k);
          for (bool rot : {false, true}) {
            SearchOptions opts = class_search_defaults();
            opts.rotations_only = rot;
            const SearchResult res = extremal_classes(n, r, k, opts);
            const auto want = oracle::extremal_classes(plain(universe), n, rot);
            REQUIRE(res.classes.has_value());
            REQUIRE(res.classes->size() == want.size());
            std::size_t i = 0;
            for (const auto& f : want) CHECK(plain((*res.classes)[i++].sets()) == f);
          }
        }
  }

  TEST_CASE("class examples") {
    const SearchResult seven = extremal_classes(7, 2, 1);
    REQUIRE(seven.classes->size() == 1);
    CHECK(are_isomorphic(seven.classes->front(), star_family(7, 2, 1, 1)));

    const SearchResult six = extremal_classes(6, 2, 1);
    CHECK(six.classes->size() >= 2);
    bool has_b = false, has_star = false;
    for (const auto& c : *six.classes) {
      has_b = has_b || are_isomorphic(c, b_family(2, 1));
      has_star = has_star || are_isomorphic(c, star_family(6, 2, 1, 1));
    }
    CHECK(has_b);
    CHECK(has_star);

    CHECK(extremal_classes(9, 3, 2).classes->size() == 1);
  }

  TEST_CASE("symmetry pruning does not lose classes") {
    for (int n = 6; n <= 10; ++n) {
      SearchOptions pruned = class_search_defaults();
      SearchOptions full = class_search_defaults();
      full.symmetry_prune = false;
      const auto a = extremal_classes(n, 3, 1, pruned);
      const auto b = extremal_classes(n, 3, 1, full);
      CHECK(*a.classes == *b.classes);
    }
  }

  TEST_CASE("results are independent of thread count") {
    const int before = solver_threads();
    set_solver_threads(1);
    const SearchResult one = extremal_classes(10, 4, 1);
    set_solver_threads(8);
    const SearchResult eight = extremal_classes(10, 4, 1);
    set_solver_threads(before);
    CHECK(one.optimum == eight.optimum);
    CHECK(one.witness == eight.witness);
    CHECK(*one.classes == *eight.classes);
  }
}
