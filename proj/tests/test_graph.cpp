#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "sepekr/graph.hpp"
#include "sepekr/search.hpp"

using namespace sepekr;

TEST_SUITE("graph") {
  TEST_CASE("build_kneser examples") {
    const auto petersen = build_kneser(5, 2);
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    for (std::size_t v = 0; v < 10; ++v) CHECK(petersen.adjacency.degree(v) == 3);
    const auto matching = build_kneser(4, 2);
    CHECK(matching.order() == 6);
    CHECK(matching.edge_count() == 3);
    const auto single = build_kneser(6, 6);
    CHECK(single.order() == 1);
    CHECK(single.edge_count() == 0);
    CHECK_THROWS_AS(build_kneser(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_kneser(30, 15, 1000), ResourceLimitError);
  }

  TEST_CASE("build_schrijver examples") {
    const auto c5 = build_schrijver(5, 2, 1);
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    const auto tri = build_schrijver(6, 2, 2);
    CHECK(tri.order() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(build_schrijver(7, 3, 1).order() == 7);
    CHECK_THROWS_AS(build_schrijver(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_schrijver(40, 3, 1, 100), ResourceLimitError);
  }

  TEST_CASE("Schrijver graph is an induced subgraph of the Kneser graph") {
    for (int n = 5; n <= 10; ++n) {
      const auto kn = build_kneser(n, 2);
      const auto sg = build_schrijver(n, 2, 1);
      for (std::size_t u = 0; u < sg.order(); ++u)
        for (std::size_t v = 0; v < sg.order(); ++v) {
          const auto iu = std::lower_bound(kn.vertices.begin(), kn.vertices.end(), sg.vertices[u]) - kn.vertices.begin();
          const auto iv = std::lower_bound(kn.vertices.begin(), kn.vertices.end(), sg.vertices[v]) - kn.vertices.begin();
          CHECK(sg.adjacency.adjacent(u, v) == kn.adjacency.adjacent(iu, iv));
        }
    }
  }

  TEST_CASE("rotation induces an automorphism") {
    const auto g = build_schrijver(9, 3, 1);
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t v = 0; v < g.order(); ++v) {
        const auto ru = std::lower_bound(g.vertices.begin(), g.vertices.end(), rotate(g.vertices[u], 1));
        const auto iu = ru - g.vertices.begin();
        const auto iv = std::lower_bound(g.vertices.begin(), g.vertices.end(), rotate(g.vertices[v], 1)) -
                        g.vertices.begin();
        CHECK(g.adjacency.adjacent(u, v) == g.adjacency.adjacent(iu, iv));
      }
  }

  TEST_CASE("independence_number examples") {
    CHECK(independence_number(build_kneser(5, 2)) == 4);
    CHECK(independence_number(build_schrijver(5, 2, 1)) == 2);
    CHECK(independence_number(build_schrijver(6, 2, 2)) == 1);
  }

  TEST_CASE("independence number equals the star size") {
    for (int k = 1; k <= 2; ++k)
      for (int r = 2; r <= 3; ++r)
        for (int n = (k + 1) * r; n <= 12; ++n)
          CHECK(static_cast<Count>(independence_number(build_schrijver(n, r, k))) == count_star_formula(n, r, k));
  }

  TEST_CASE("chromatic_number examples") {
    CHECK(chromatic_number(build_kneser(5, 2)) == 3);
    CHECK(chromatic_number(build_schrijver(5, 2, 1)) == 3);
    CHECK(chromatic_number(build_schrijver(6, 2, 2)) == 3);
    // Reported without a claim: computed value for Schrijver(6,2,1).
    const int chi6 = chromatic_number(build_schrijver(6, 2, 1));
    CHECK(chi6 == 4);
    CHECK(chromatic_number(build_kneser(6, 6)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);
  }

  TEST_CASE("chromatic number of small Schrijver graphs is n - 2r + 2") {
    for (int n = 4; n <= 9; ++n) CHECK(chromatic_number(build_schrijver(n, 2, 1)) == n - 2);
    for (int n = 6; n <= 9; ++n) CHECK(chromatic_number(build_schrijver(n, 3, 1)) == n - 4);
    for (int n = 4; n <= 7; ++n) CHECK(chromatic_number(build_kneser(n, 2)) == n - 2);
  }

  TEST_CASE("chromatic_number limits") {
    CHECK_THROWS_AS(chromatic_number(build_kneser(9, 3)), ResourceLimitError);
    ColoringLimits big;
    big.max_vertices = 100;
    CHECK(chromatic_number(build_kneser(7, 2), big) == 5);
  }

  TEST_CASE("export_dimacs") {
    std::ostringstream c5;
    export_dimacs(build_schrijver(5, 2, 1), c5);
    CHECK(c5.str() == "p edge 5 5\ne 1 3\ne 1 4\ne 2 4\ne 2 5\ne 3 5\n");
    std::ostringstream k42;
    export_dimacs(build_kneser(4, 2), k42);
    CHECK(k42.str().rfind("p edge 6 3\n", 0) == 0);
    std::ostringstream empty;
    export_dimacs(build_kneser(3, 2), empty);
    CHECK(empty.str() == "p edge 3 0\n");
  }
}
