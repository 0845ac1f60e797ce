#include "sepekr/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace sepekr {

namespace {

json elems_json(const CircSet& a) { return json(a.elems()); }

json sets_json(std::span<const CircSet> sets) {
  json arr = json::array();
  for (const auto& a : sets) arr.push_back(elems_json(a));
  return arr;
}

}  // namespace

json count_json(Count value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) return json(static_cast<std::uint64_t>(value));
  return json(to_string(value));
}

json to_json(const CircSet& a) {
  json j;
  j["n"] = a.n();
  j["elems"] = elems_json(a);
  return j;
}

CircSet circset_from_json(const json& j) {
  const auto elems = j.at("elems").get<std::vector<int>>();
  return CircSet(j.at("n").get<int>(), elems);
}

json to_json(const SetFamily& family) {
  json j;
  j["n"] = family.n();
  j["r"] = family.r();
  j["k"] = family.k();
  j["sets"] = sets_json(family.sets());
  return j;
}

SetFamily family_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<CircSet> sets;
  for (const auto& s : j.at("sets")) {
    // Accept both bare element arrays and {"n","elems"} objects.
    if (s.is_object()) {
      sets.push_back(circset_from_json(s));
    } else {
      const auto elems = s.get<std::vector<int>>();
      sets.emplace_back(n, elems);
    }
  }
  return SetFamily(n, j.at("r").get<int>(), j.at("k").get<int>(), std::move(sets));
}

json to_json(const LemmaReport& report) {
  json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["k"] = report.k;
  j["family_size"] = report.family_size;
  j["passed"] = report.passed();
  json clauses = json::array();
  for (const auto& c : report.clauses) {
    json cj;
    cj["clause_id"] = c.id;
    cj["passed"] = c.passed;
    json ws = json::array();
    for (const auto& w : c.witnesses) {
      json wj;
      wj["note"] = w.note;
      wj["sets"] = sets_json(w.sets);
      ws.push_back(std::move(wj));
    }
    cj["witnesses"] = std::move(ws);
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

json to_json(const SearchResult& result, bool diagnostics) {
  json j;
  j["n"] = result.n;
  j["r"] = result.r;
  j["k"] = result.k;
  j["optimum"] = result.optimum;
  j["witness"] = to_json(result.witness);
  if (result.classes) {
    json cls = json::array();
    for (const auto& c : *result.classes) cls.push_back(to_json(c));
    j["classes"] = std::move(cls);
  }
  if (diagnostics) j["nodes"] = result.nodes;
  return j;
}

json to_json(const WeightedReport& report, bool diagnostics) {
  json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["k"] = report.k;
  j["optimum"] = report.optimum;
  j["star_weight"] = count_json(report.star_weight);
  j["binomial"] = count_json(report.binomial_bound);
  j["pass"] = report.pass;
  j["witness"] = to_json(report.witness);
  if (diagnostics) j["nodes"] = report.nodes;
  return j;
}

json adjacency_json(const DisjointnessGraph& g) {
  json j;
  j["vertices"] = sets_json(g.vertices);
  json edges = json::array();
  for (std::size_t u = 0; u < g.order(); ++u) {
    const Bitset& row = g.adjacency.neighbors(u);
    for (std::size_t v = row.next(u + 1); v != Bitset::npos; v = row.next(v + 1)) edges.push_back({u, v});
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace sepekr
