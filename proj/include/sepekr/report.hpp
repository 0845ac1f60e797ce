#pragma once

// The verification grid behind `report`: one row per checked quantity, with
// the computed value, the value the theory predicts, and whether they agree.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sepekr {

struct GridRow {
  std::string section;   // ekr, classes, count, lemmas, weighted, graph
  int n = 0;
  int r = 0;
  int k = 0;
  std::string quantity;  // e.g. optimum, star_size, alpha
  std::string value;
  std::string expected;
  bool match = false;
  std::optional<std::size_t> classes;
  // Diagnostics, emitted only on request.
  double seconds = 0;
  std::uint64_t nodes = 0;
};

struct Point {
  int n = 0;
  int r = 0;
  int k = 0;
};

struct GridPlan {
  std::vector<Point> ekr;            // optimum vs star formula
  std::vector<Point> classes;        // extremal class census
  std::vector<Point> counts;         // star size and universe size
  std::vector<Point> lemmas;         // randomized compression lemma suite
  int lemma_families = 200;
  std::vector<Point> weighted;       // weighted EKR and |gamma| = w
  bool graph_facts = false;          // Kneser(5,2), chi of Schrijver(n,2,1)
  std::vector<Point> schrijver_alpha;
};

// The acceptance grids.
GridPlan default_grid();

// Points of the grid {k=1: 2<=r<=4, 2r<=n<=14} u {k=2: 2<=r<=3, 3r<=n<=15}
// u {k=3: r=2, 8<=n<=16}.
std::vector<Point> ekr_points();

// Seed of the idx-th random family at a parameter point. Independent of
// thread count and evaluation order.
std::uint64_t family_seed(const Point& p, int idx);

std::vector<GridRow> run_grid(const GridPlan& plan);

bool all_match(const std::vector<GridRow>& rows);

enum class Format { csv, json, text };

Format parse_format(const std::string& s);

// An empty row list yields only the header (csv, text) or {"rows":[]}.
void emit_table(const std::vector<GridRow>& rows, Format format, std::ostream& out, bool diagnostics = false);

}  // namespace sepekr
