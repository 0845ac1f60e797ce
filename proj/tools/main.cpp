#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace sepekr;
  cli::RunConfig cfg;
  std::string format = "text";
  std::size_t max_vertices = 0;

  CLI::App app{"Exact verification of intersecting families of k-separated sets"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");

  auto add_common = [&](CLI::App* sub, bool nrk) {
    if (nrk) {
      sub->add_option("--n", cfg.n, "Ground set size")->required();
      sub->add_option("--r", cfg.r, "Set size")->required();
      sub->add_option("--k", cfg.k, "Separation parameter")->capture_default_str();
    }
    sub->add_option("--limit-vertices", max_vertices, "Largest universe the solver accepts");
    sub->add_option("--limit-seconds", cfg.limits.max_seconds, "Wall-clock cap for one solve (0: none)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", cfg.output, "Output file (default stdout)");
    sub->add_flag("--diagnostics", cfg.diagnostics, "Include node counts and timings");
  };

  add_common(app.add_subcommand("enumerate", "List [n]^(r)_k in lexicographic order"), true);
  add_common(app.add_subcommand("max-family", "Exact maximum intersecting family"), true);
  auto* classes = app.add_subcommand("classes", "Extremal families up to circular symmetry");
  add_common(classes, true);
  classes->add_flag("--rotations-only", cfg.rotations_only, "Identify families under rotations only");
  auto* lemmas = app.add_subcommand("lemmas", "Compression lemma suite");
  add_common(lemmas, true);
  lemmas->add_option("--family", cfg.family_path, "JSON family to check instead of random samples");
  lemmas->add_option("--samples", cfg.samples, "Random maximal intersecting families to check")
      ->capture_default_str();
  add_common(app.add_subcommand("weighted", "Weighted bound for the gap weight"), true);
  auto* graph = app.add_subcommand("graph", "Kneser and Schrijver graph facts and export");
  add_common(graph, true);
  graph->add_option("--kind", cfg.graph_kind, "Graph family")
      ->check(CLI::IsMember({"kneser", "schrijver"}))
      ->capture_default_str();
  graph->add_option("--export", cfg.export_kind, "Write the graph instead of its invariants")
      ->check(CLI::IsMember({"dimacs", "adjacency"}));
  auto* report = app.add_subcommand("report", "Run a verification grid");
  add_common(report, false);
  report->add_option("--grid", cfg.grid, "Grid name")->check(CLI::IsMember({"default", "empty"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = parse_format(format);
  if (max_vertices > 0) {
    cfg.limits.max_vertices = max_vertices;
    cfg.vertices_set = true;
  }
  if (!cli::apply_thread_env(std::cerr)) return cli::kUsage;
  return cli::run(cfg, std::cout, std::cerr);
}
