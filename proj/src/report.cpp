#include "sepekr/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "sepekr/compression.hpp"
#include "sepekr/graph.hpp"
#include "sepekr/json_io.hpp"
#include "sepekr/search.hpp"
#include "sepekr/weighted.hpp"

namespace sepekr {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool same_point(const Point& a, const Point& b) { return a.n == b.n && a.r == b.r && a.k == b.k; }

GridRow row(const std::string& section, const Point& p, const std::string& quantity, const std::string& value,
            const std::string& expected) {
  GridRow g;
  g.section = section;
  g.n = p.n;
  g.r = p.r;
  g.k = p.k;
  g.quantity = quantity;
  g.value = value;
  g.expected = expected;
  g.match = value == expected;
  return g;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

void run_ekr(const GridPlan& plan, std::vector<GridRow>& out) {
  for (const auto& p : plan.ekr) {
    const auto start = Clock::now();
    const bool census = std::any_of(plan.classes.begin(), plan.classes.end(),
                                    [&](const Point& q) { return same_point(p, q); });
    const SearchResult res = census ? extremal_classes(p.n, p.r, p.k) : max_intersecting(p.n, p.r, p.k);
    GridRow g = row("ekr", p, "optimum", num(res.optimum), to_string(count_star_formula(p.n, p.r, p.k)));
    g.match = g.match && is_intersecting(res.witness) && res.witness.size() == res.optimum;
    if (res.classes) g.classes = res.classes->size();
    g.seconds = since(start);
    g.nodes = res.nodes;
    out.push_back(std::move(g));
  }
}

void run_classes(const GridPlan& plan, std::vector<GridRow>& out) {
  for (const auto& p : plan.classes) {
    const auto start = Clock::now();
    const SearchResult res = extremal_classes(p.n, p.r, p.k);
    const std::size_t count = res.classes->size();
    const bool exceptional = p.k == 1 && p.n == 2 * p.r + 2;
    GridRow g = row("classes", p, "class_count", num(count), exceptional ? ">1" : "1");
    if (exceptional) g.match = count > 1;
    g.classes = count;
    g.seconds = since(start);
    g.nodes = res.nodes;
    out.push_back(std::move(g));
    if (!exceptional) continue;
    for (int i = 1; i <= p.r / 2; ++i) {
      const SetFamily b = b_family(p.r, i);
      const auto form = canonical_form(b.sets());
      const bool found = std::any_of(res.classes->begin(), res.classes->end(),
                                     [&](const SetFamily& c) { return c.sets() == form; });
      out.push_back(row("classes", p, "b_family_" + std::to_string(i), found ? "present" : "absent", "present"));
    }
  }
}

void run_counts(const GridPlan& plan, std::vector<GridRow>& out) {
  for (const auto& p : plan.counts) {
    const auto all = enumerate_separated(p.n, p.r, p.k);
    const auto star = std::count_if(all.begin(), all.end(), [](const CircSet& a) { return a.contains(1); });
    out.push_back(row("count", p, "star_size", num(static_cast<std::uint64_t>(star)),
                      to_string(count_star_formula(p.n, p.r, p.k))));
    // The universe has exactly k+1 members precisely at n = (k+1)r.
    const bool tight = p.n == (p.k + 1) * p.r;
    const bool is_k1 = all.size() == static_cast<std::size_t>(p.k + 1);
    GridRow g = row("count", p, "universe_size", num(all.size()),
                    (tight ? "" : "not ") + std::to_string(p.k + 1));
    g.match = tight == is_k1;
    out.push_back(std::move(g));
  }
}

void run_lemmas(const GridPlan& plan, std::vector<GridRow>& out) {
  for (const auto& p : plan.lemmas) {
    const auto start = Clock::now();
    const auto universe = enumerate_separated(p.n, p.r, p.k);
    int passed = 0;
    for (int idx = 0; idx < plan.lemma_families; ++idx) {
      SetFamily family(p.n, p.r, p.k, random_maximal_intersecting(universe, family_seed(p, idx)));
      if (verify_lemma_suite(family).passed()) ++passed;
    }
    GridRow g = row("lemmas", p, "families_passed", std::to_string(passed), std::to_string(plan.lemma_families));
    g.seconds = since(start);
    out.push_back(std::move(g));
  }
}

void run_weighted(const GridPlan& plan, std::vector<GridRow>& out) {
  for (const auto& p : plan.weighted) {
    const auto start = Clock::now();
    const WeightedReport rep = verify_weighted_ekr(p.n, p.r, p.k);
    GridRow g = row("weighted", p, "optimum", num(rep.optimum), to_string(rep.binomial_bound));
    g.match = rep.pass;
    g.seconds = since(start);
    g.nodes = rep.nodes;
    out.push_back(std::move(g));

    const auto universe = enumerate_separated(p.n, p.r, p.k);
    const auto good = std::count_if(universe.begin(), universe.end(), [&](const CircSet& a) {
      return static_cast<Count>(gamma(a, p.k).size()) == weight(a, p.k);
    });
    out.push_back(row("weighted", p, "gamma_equals_weight", num(static_cast<std::uint64_t>(good)),
                      num(universe.size())));
  }
}

void run_graph(const GridPlan& plan, std::vector<GridRow>& out) {
  if (plan.graph_facts) {
    const Point kp{5, 2, 0};
    const auto petersen = build_kneser(5, 2);
    out.push_back(row("graph", kp, "kneser_alpha", num(independence_number(petersen)), "4"));
    out.push_back(row("graph", kp, "kneser_chi", std::to_string(chromatic_number(petersen)), "3"));
    for (int n : {5, 7, 9}) {
      const Point sp{n, 2, 1};
      const auto start = Clock::now();
      GridRow g = row("graph", sp, "schrijver_chi", std::to_string(chromatic_number(build_schrijver(n, 2, 1))),
                      std::to_string(n - 2));
      g.seconds = since(start);
      out.push_back(std::move(g));
    }
  }
  for (const auto& p : plan.schrijver_alpha) {
    const auto start = Clock::now();
    GridRow g = row("graph", p, "schrijver_alpha", num(independence_number(build_schrijver(p.n, p.r, p.k))),
                    to_string(count_star_formula(p.n, p.r, p.k)));
    g.seconds = since(start);
    out.push_back(std::move(g));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<std::string> header(bool diagnostics) {
  std::vector<std::string> h{"section", "n", "r", "k", "quantity", "value", "expected", "match", "classes"};
  if (diagnostics) {
    h.push_back("seconds");
    h.push_back("nodes");
  }
  return h;
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

std::vector<std::string> cells(const GridRow& g, bool diagnostics) {
  std::vector<std::string> c{g.section, std::to_string(g.n), std::to_string(g.r), std::to_string(g.k),
                             g.quantity, g.value, g.expected, g.match ? "true" : "false",
                             g.classes ? std::to_string(*g.classes) : ""};
  if (diagnostics) {
    c.push_back(seconds_text(g.seconds));
    c.push_back(std::to_string(g.nodes));
  }
  return c;
}

}  // namespace

std::vector<Point> ekr_points() {
  std::vector<Point> pts;
  for (int r = 2; r <= 4; ++r)
    for (int n = 2 * r; n <= 14; ++n) pts.push_back({n, r, 1});
  for (int r = 2; r <= 3; ++r)
    for (int n = 3 * r; n <= 15; ++n) pts.push_back({n, r, 2});
  for (int n = 8; n <= 16; ++n) pts.push_back({n, 2, 3});
  return pts;
}

GridPlan default_grid() {
  GridPlan g;
  g.ekr = ekr_points();
  for (int r = 2; r <= 4; ++r)
    for (int n = 2 * r; n <= 12; ++n) g.classes.push_back({n, r, 1});
  for (int r = 2; r <= 3; ++r)
    for (int n = 3 * r; n <= 14; ++n) g.classes.push_back({n, r, 2});
  g.counts = ekr_points();
  for (int k = 1; k <= 2; ++k)
    for (int r = 2; r <= 3; ++r)
      for (int n = (k + 1) * r + 1; n <= 12; ++n) g.lemmas.push_back({n, r, k});
  for (int n = 8; n <= 12; ++n) g.weighted.push_back({n, 2, 1});
  g.weighted.push_back({12, 3, 1});
  g.weighted.push_back({13, 3, 1});
  g.weighted.push_back({12, 2, 2});
  g.weighted.push_back({13, 2, 2});
  g.graph_facts = true;
  for (const auto& p : ekr_points())
    if (p.k == 1) g.schrijver_alpha.push_back(p);
  return g;
}

std::uint64_t family_seed(const Point& p, int idx) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t v : {std::uint64_t(p.n), std::uint64_t(p.r), std::uint64_t(p.k), std::uint64_t(idx)}) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<GridRow> run_grid(const GridPlan& plan) {
  std::vector<GridRow> rows;
  run_ekr(plan, rows);
  run_classes(plan, rows);
  run_counts(plan, rows);
  run_lemmas(plan, rows);
  run_weighted(plan, rows);
  run_graph(plan, rows);
  return rows;
}

bool all_match(const std::vector<GridRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const GridRow& g) { return g.match; });
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or text)");
}

void emit_table(const std::vector<GridRow>& rows, Format format, std::ostream& out, bool diagnostics) {
  const auto head = header(diagnostics);
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& g : rows) {
      json j;
      j["section"] = g.section;
      j["n"] = g.n;
      j["r"] = g.r;
      j["k"] = g.k;
      j["quantity"] = g.quantity;
      j["value"] = g.value;
      j["expected"] = g.expected;
      j["match"] = g.match;
      j["classes"] = g.classes ? json(*g.classes) : json(nullptr);
      if (diagnostics) {
        j["seconds"] = g.seconds;
        j["nodes"] = g.nodes;
      }
      arr.push_back(std::move(j));
    }
    json doc;
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> table{head};
  for (const auto& g : rows) table.push_back(cells(g, diagnostics));
  if (format == Format::csv) {
    for (const auto& line : table) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_field(line[i]);
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : table)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : table) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
}

}  // namespace sepekr
