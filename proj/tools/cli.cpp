#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "sepekr/compression.hpp"
#include "sepekr/graph.hpp"
#include "sepekr/json_io.hpp"
#include "sepekr/search.hpp"
#include "sepekr/weighted.hpp"

namespace sepekr::cli {

namespace {

// Printed and returned when the computation contradicts the theory.
struct Outcome {
  bool verified = true;
  bool bad_input = false;  // output written, but the input violated a precondition
};

std::string elems_text(const CircSet& a) {
  std::string s;
  for (int e : a.elems()) s += (s.empty() ? "" : " ") + std::to_string(e);
  return s;
}

void write_sets_csv(std::ostream& out, const std::vector<CircSet>& sets) {
  out << "index,elems\n";
  for (std::size_t i = 0; i < sets.size(); ++i) out << i << ',' << elems_text(sets[i]) << '\n';
}

Limits class_limits(const RunConfig& c) {
  Limits l = c.limits;
  if (!c.vertices_set) l.max_vertices = kClassVertexLimit;
  return l;
}

// The bound is a theorem for k >= 1 at every feasible n, and the classical
// one for k = 0 needs n >= 2r.
bool bound_applies(int n, int r, int k) { return k >= 1 || n >= 2 * r; }

Outcome cmd_enumerate(const RunConfig& c, std::ostream& out) {
  require_params(c.n, c.r, c.k);
  SetFamily family(c.n, c.r, c.k, enumerate_separated(c.n, c.r, c.k));
  switch (c.format) {
    case Format::json: out << to_json(family).dump(2) << '\n'; break;
    case Format::csv: write_sets_csv(out, family.sets()); break;
    case Format::text: out << to_text(family) << '\n'; break;
  }
  return {};
}

Outcome cmd_max_family(const RunConfig& c, std::ostream& out) {
  SearchOptions opts;
  opts.limits = c.limits;
  const SearchResult res = max_intersecting(c.n, c.r, c.k, opts);
  const Count formula = count_star_formula(c.n, c.r, c.k);
  const bool claimed = bound_applies(c.n, c.r, c.k);
  const bool match = static_cast<Count>(res.optimum) == formula;
  switch (c.format) {
    case Format::json: {
      json j = to_json(res, c.diagnostics);
      j["formula"] = count_json(formula);
      j["match"] = match;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,r,k,optimum,formula,match" << (c.diagnostics ? ",nodes" : "") << '\n'
          << c.n << ',' << c.r << ',' << c.k << ',' << res.optimum << ',' << to_string(formula) << ','
          << (match ? "true" : "false");
      if (c.diagnostics) out << ',' << res.nodes;
      out << '\n';
      break;
    case Format::text:
      out << "optimum " << res.optimum << '\n'
          << "formula " << to_string(formula) << '\n'
          << "witness " << to_text(res.witness) << '\n';
      if (c.diagnostics) out << "nodes " << res.nodes << '\n';
      break;
  }
  return {!claimed || match};
}

Outcome cmd_classes(const RunConfig& c, std::ostream& out) {
  SearchOptions opts;
  opts.limits = class_limits(c);
  opts.rotations_only = c.rotations_only;
  const SearchResult res = extremal_classes(c.n, c.r, c.k, opts);
  const auto& classes = *res.classes;
  // Uniqueness is claimed for k >= 2, and for k = 1 away from n = 2r+2.
  bool verified = true;
  if (c.k >= 2 || (c.k == 1 && c.n != 2 * c.r + 2)) verified = classes.size() == 1;
  if (c.k == 1 && c.n == 2 * c.r + 2 && c.r >= 2) verified = classes.size() > 1;
  verified = verified && (!bound_applies(c.n, c.r, c.k) ||
                          static_cast<Count>(res.optimum) == count_star_formula(c.n, c.r, c.k));
  switch (c.format) {
    case Format::json: {
      json j = to_json(res, c.diagnostics);
      j["class_count"] = classes.size();
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "index,family\n";
      for (std::size_t i = 0; i < classes.size(); ++i) out << i << ",\"" << to_text(classes[i]) << "\"\n";
      break;
    case Format::text:
      out << "optimum " << res.optimum << '\n' << "classes " << classes.size() << '\n';
      for (const auto& f : classes) out << "  " << to_text(f) << '\n';
      if (c.diagnostics) out << "nodes " << res.nodes << '\n';
      break;
  }
  return {verified};
}

SetFamily read_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return family_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void text_report(std::ostream& out, const LemmaReport& rep) {
  out << "family of " << rep.family_size << " sets: " << (rep.passed() ? "pass" : "FAIL") << '\n';
  for (const auto& cl : rep.clauses) {
    out << "  " << (cl.passed ? "pass " : "FAIL ") << cl.id << '\n';
    for (const auto& w : cl.witnesses) {
      out << "    " << w.note << ':';
      for (const auto& s : w.sets) out << ' ' << s.str();
      out << '\n';
    }
  }
}

Outcome cmd_lemmas(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.family_path.empty()) {
    const SetFamily family = read_family(c.family_path);
    const LemmaReport rep = verify_lemma_suite(family);
    switch (c.format) {
      case Format::json: out << to_json(rep).dump(2) << '\n'; break;
      case Format::csv:
        out << "clause_id,passed\n";
        for (const auto& cl : rep.clauses) out << cl.id << ',' << (cl.passed ? "true" : "false") << '\n';
        break;
      case Format::text: text_report(out, rep); break;
    }
    const auto* pre = rep.find("pre.intersecting");
    if (pre && !pre->passed) {
      err << "error: input family is not intersecting; the lemmas do not apply\n";
      return {true, true};
    }
    return {rep.passed()};
  }
  if (c.samples < 0) throw std::invalid_argument("--samples must be >= 0");
  require_feasible(c.n, c.r, c.k);
  const auto universe = enumerate_separated(c.n, c.r, c.k);
  const Point p{c.n, c.r, c.k};
  int passed = 0;
  std::vector<LemmaReport> failures;
  for (int i = 0; i < c.samples; ++i) {
    SetFamily family(c.n, c.r, c.k, random_maximal_intersecting(universe, family_seed(p, i)));
    LemmaReport rep = verify_lemma_suite(family);
    if (rep.passed()) {
      ++passed;
    } else {
      failures.push_back(std::move(rep));
    }
  }
  switch (c.format) {
    case Format::json: {
      json j;
      j["n"] = c.n;
      j["r"] = c.r;
      j["k"] = c.k;
      j["samples"] = c.samples;
      j["passed"] = passed;
      json f = json::array();
      for (const auto& rep : failures) f.push_back(to_json(rep));
      j["failures"] = std::move(f);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,r,k,samples,passed\n" << c.n << ',' << c.r << ',' << c.k << ',' << c.samples << ',' << passed << '\n';
      break;
    case Format::text:
      out << "passed " << passed << " of " << c.samples << '\n';
      for (const auto& rep : failures) text_report(out, rep);
      break;
  }
  return {failures.empty()};
}

Outcome cmd_weighted(const RunConfig& c, std::ostream& out) {
  SearchOptions opts;
  opts.limits = c.limits;
  const WeightedReport rep = verify_weighted_ekr(c.n, c.r, c.k, opts);
  switch (c.format) {
    case Format::json: out << to_json(rep, c.diagnostics).dump(2) << '\n'; break;
    case Format::csv:
      out << "n,r,k,optimum,star_weight,binomial,pass\n"
          << c.n << ',' << c.r << ',' << c.k << ',' << rep.optimum << ',' << to_string(rep.star_weight) << ','
          << to_string(rep.binomial_bound) << ',' << (rep.pass ? "true" : "false") << '\n';
      break;
    case Format::text:
      out << "optimum " << rep.optimum << '\n'
          << "star_weight " << to_string(rep.star_weight) << '\n'
          << "binomial " << to_string(rep.binomial_bound) << '\n'
          << "pass " << (rep.pass ? "true" : "false") << '\n'
          << "witness " << to_text(rep.witness) << '\n';
      if (c.diagnostics) out << "nodes " << rep.nodes << '\n';
      break;
  }
  return {rep.pass};
}

Outcome cmd_graph(const RunConfig& c, std::ostream& out) {
  const bool kneser = c.graph_kind == "kneser";
  const DisjointnessGraph g =
      kneser ? build_kneser(c.n, c.r, c.limits.max_vertices) : build_schrijver(c.n, c.r, c.k, c.limits.max_vertices);
  if (c.export_kind == "dimacs") {
    export_dimacs(g, out);
    return {};
  }
  if (c.export_kind == "adjacency") {
    out << adjacency_json(g).dump(2) << '\n';
    return {};
  }
  const std::size_t alpha = independence_number(g, c.limits);
  std::optional<int> chi;
  ColoringLimits cl;
  cl.max_seconds = c.limits.max_seconds;
  if (g.order() <= cl.max_vertices) chi = chromatic_number(g, cl);

  // alpha is the star size; chi = n-2r+2 for Kneser graphs and for
  // Schrijver graphs with k = 1.
  const bool regime = c.n >= 2 * c.r;
  const Count alpha_expected = kneser ? binomial(c.n - 1, c.r - 1) : count_star_formula(c.n, c.r, c.k);
  bool verified = !(kneser ? regime : bound_applies(c.n, c.r, c.k)) || static_cast<Count>(alpha) == alpha_expected;
  if (chi && regime && (kneser || c.k == 1)) verified = verified && *chi == c.n - 2 * c.r + 2;

  const std::string kind = kneser ? "kneser" : "schrijver";
  switch (c.format) {
    case Format::json: {
      json j;
      j["kind"] = kind;
      j["n"] = c.n;
      j["r"] = c.r;
      j["k"] = kneser ? 0 : c.k;
      j["vertices"] = g.order();
      j["edges"] = g.edge_count();
      j["alpha"] = alpha;
      j["chi"] = chi ? json(*chi) : json(nullptr);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "kind,n,r,k,vertices,edges,alpha,chi\n"
          << kind << ',' << c.n << ',' << c.r << ',' << (kneser ? 0 : c.k) << ',' << g.order() << ','
          << g.edge_count() << ',' << alpha << ',' << (chi ? std::to_string(*chi) : "") << '\n';
      break;
    case Format::text:
      out << kind << ' ' << c.n << ' ' << c.r << ' ' << (kneser ? 0 : c.k) << '\n'
          << "vertices " << g.order() << '\n'
          << "edges " << g.edge_count() << '\n'
          << "alpha " << alpha << '\n'
          << "chi " << (chi ? std::to_string(*chi) : "skipped (more than 64 vertices)") << '\n';
      break;
  }
  return {verified};
}

Outcome cmd_report(const RunConfig& c, std::ostream& out) {
  const GridPlan plan = c.grid == "empty" ? GridPlan{} : default_grid();
  const auto rows = run_grid(plan);
  emit_table(rows, c.format, out, c.diagnostics);
  return {all_match(rows)};
}

Outcome dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "enumerate") return cmd_enumerate(c, out);
  if (c.command == "max-family") return cmd_max_family(c, out);
  if (c.command == "classes") return cmd_classes(c, out);
  if (c.command == "lemmas") return cmd_lemmas(c, out, err);
  if (c.command == "weighted") return cmd_weighted(c, out);
  if (c.command == "graph") return cmd_graph(c, out);
  if (c.command == "report") return cmd_report(c, out);
  throw std::invalid_argument("unknown command '" + c.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.limits.max_seconds < 0) throw std::invalid_argument("--limit-seconds must be >= 0");
    // Buffer so a failed run leaves no partial output file.
    std::ostringstream buffer;
    const Outcome o = dispatch(config, buffer, err);
    if (config.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.output, std::ios::binary);
      file << buffer.str();
      if (!file) {
        err << "error: cannot write " << config.output << '\n';
        return kUsage;
      }
    }
    if (o.bad_input) return kUsage;
    if (!o.verified) {
      err << "verification failed\n";
      return kVerificationFailed;
    }
    return kOk;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceAbort;
  } catch (const std::overflow_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceAbort;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
}

bool apply_thread_env(std::ostream& err) {
  const char* v = std::getenv("SEPEKR_THREADS");
  if (!v || !*v) return true;
  char* end = nullptr;
  const long t = std::strtol(v, &end, 10);
  if (*end != '\0' || t < 1 || t > 4096) {
    err << "error: SEPEKR_THREADS must be a positive integer\n";
    return false;
  }
  set_solver_threads(static_cast<int>(t));
  return true;
}

}  // namespace sepekr::cli
